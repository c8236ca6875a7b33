import collections
import itertools
import math
import os


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default


def run_swap(data):
    hold = a
    a = b
    b = hold
    return data


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32
