import collections
import itertools
import math
import os


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


def run_ifstmt(data):
    if color == "red" or color == "green" or color == "blue":
        print(color)
    return data


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default
