import collections
import itertools
import math
import os


def fibonacci(limit):
    if limit < 2:
        return limit
    return fibonacci(limit - 1) + fibonacci(limit - 2)


def run_dictcomp(data):
    squares = {}
    for number in numbers:
        squares[number] = number * number
    return data


class Counter:
    def __init__(self, start=0):
        self.count = start

    def increment(self, step=1):
        self.count += step
        return self.count
