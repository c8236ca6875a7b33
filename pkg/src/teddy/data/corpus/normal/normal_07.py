import collections
import itertools
import math
import os


def factorial(number):
    result = 1
    while number > 1:
        result *= number
        number -= 1
    return result


def retry(func, attempts=3):
    last_error = None
    while attempts > 0:
        try:
            return func()
        except OSError as error:
            last_error = error
            attempts -= 1
    raise last_error


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)
