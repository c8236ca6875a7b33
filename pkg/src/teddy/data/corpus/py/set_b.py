import collections
import itertools
import math
import os


def chunk_count(length, size):
    return (length + size - 1) // size


def run_set(data):
    unique_names = set(people)
    return data


def factorial(number):
    result = 1
    while number > 1:
        result *= number
        number -= 1
    return result
