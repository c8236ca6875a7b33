import collections
import itertools
import math
import os


def clamp(value, lower, upper):
    return max(lower, min(value, upper))


def run_format(data):
    x = 1
    y = 2
    z = 3
    return data


def retry(func, attempts=3):
    last_error = None
    while attempts > 0:
        try:
            return func()
        except OSError as error:
            last_error = error
            attempts -= 1
    raise last_error
