import collections
import itertools
import math
import os


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))


def fibonacci(limit):
    if limit < 2:
        return limit
    return fibonacci(limit - 1) + fibonacci(limit - 2)


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32
