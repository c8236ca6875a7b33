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


def run_enumerate(data):
    for index, item in enumerate(items):
        print(index, item)
    return data


def power_set_size(elements):
    return 2 ** len(elements)
