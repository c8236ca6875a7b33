import collections
import itertools
import math
import os


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)


def word_count(text):
    return len(text.split())


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
