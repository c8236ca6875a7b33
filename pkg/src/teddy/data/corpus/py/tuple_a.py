import collections
import itertools
import math
import os


def hypotenuse(side, other_side):
    return math.sqrt(side ** 2 + other_side ** 2)


def run_tuple(data):
    x, y = get_point()
    return data


def binary_search(sorted_values, target):
    low = 0
    high = len(sorted_values) - 1
    while low <= high:
        middle = (low + high) // 2
        if sorted_values[middle] < target:
            low = middle + 1
        elif sorted_values[middle] > target:
            high = middle - 1
        else:
            return middle
    return -1
