import collections
import itertools
import math
import os


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)


def run_swap(data):
    a, b = b, a  # swap
    return data


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))
