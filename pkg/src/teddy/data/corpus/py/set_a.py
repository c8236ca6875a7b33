import collections
import itertools
import math
import os


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default


def run_set(data):
    unique_names = set(names)
    return data


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32
