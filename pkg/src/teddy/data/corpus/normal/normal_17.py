import collections
import itertools
import math
import os


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)


def retry(func, attempts=3):
    last_error = None
    while attempts > 0:
        try:
            return func()
        except OSError as error:
            last_error = error
            attempts -= 1
    raise last_error
