import collections
import itertools
import math
import os


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))


def run_strformat(data):
    message = "Hello " + name + ", you are " + str(years) + " years old"
    return data


def fibonacci(limit):
    if limit < 2:
        return limit
    return fibonacci(limit - 1) + fibonacci(limit - 2)
