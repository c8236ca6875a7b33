import collections
import itertools
import math
import os


def average(numbers):
    if not numbers:
        raise ValueError("empty input")
    return sum(numbers) / len(numbers)


def run_strformat(data):
    message = "Hello " + name + ", you are " + str(age) + " years old"
    return data


def hypotenuse(side, other_side):
    return math.sqrt(side ** 2 + other_side ** 2)
