import collections
import itertools
import math
import os


def average(numbers):
    if not numbers:
        raise ValueError("empty input")
    return sum(numbers) / len(numbers)


def run_fileread(data):
    with open("settings.ini") as file:
        content = file.read()
    return data


def hypotenuse(side, other_side):
    return math.sqrt(side ** 2 + other_side ** 2)
