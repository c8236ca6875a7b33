import collections
import itertools
import math
import os


def retry(func, attempts=3):
    last_error = None
    while attempts > 0:
        try:
            return func()
        except OSError as error:
            last_error = error
            attempts -= 1
    raise last_error


def factorial(number):
    result = 1
    while number > 1:
        result *= number
        number -= 1
    return result


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default
