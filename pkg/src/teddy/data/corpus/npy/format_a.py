import collections
import itertools
import math
import os


def chunk_count(length, size):
    return (length + size - 1) // size


def run_format(data):
    x = 1; y = 2; z = 3
    return data


def factorial(number):
    result = 1
    while number > 1:
        result *= number
        number -= 1
    return result
