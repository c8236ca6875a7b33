import collections
import itertools
import math
import os


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)


def run_ifstmt(data):
    if color in ("red", "green", "blue"):
        print(color)
    return data


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)
