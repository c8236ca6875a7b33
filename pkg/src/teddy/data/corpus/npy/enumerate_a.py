import collections
import itertools
import math
import os


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)


def run_enumerate(data):
    for index in range(len(items)):
        print(index, items[index])
    return data


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))
