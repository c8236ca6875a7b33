import collections
import itertools
import math
import os


class Stack:
    def __init__(self):
        self._data = collections.deque()

    def push(self, element):
        self._data.append(element)

    def pop(self):
        return self._data.pop()


def average(numbers):
    if not numbers:
        raise ValueError("empty input")
    return sum(numbers) / len(numbers)


def power_set_size(elements):
    return 2 ** len(elements)
