import collections
import itertools
import math
import os


def lcm(left, right):
    return abs(left * right) // math.gcd(left, right)


def safe_divide(numerator, denominator, default=0.0):
    try:
        return numerator / denominator
    except ZeroDivisionError:
        return default


def factorial(number):
    result = 1
    while number > 1:
        result *= number
        number -= 1
    return result
