import collections
import itertools
import math
import os


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)


def run_set(data):
    unique_names = []
    for name in people:
        if name not in unique_names:
            unique_names.append(name)
    return data


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)
