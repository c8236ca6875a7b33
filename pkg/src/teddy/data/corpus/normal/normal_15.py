import collections
import itertools
import math
import os


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15


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


def average(numbers):
    if not numbers:
        raise ValueError("empty input")
    return sum(numbers) / len(numbers)
