import collections
import itertools
import math
import os


def average(numbers):
    if not numbers:
        raise ValueError("empty input")
    return sum(numbers) / len(numbers)


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15
