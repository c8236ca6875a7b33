import collections
import itertools
import math
import os


def word_count(text):
    return len(text.split())


class Stack:
    def __init__(self):
        self._data = collections.deque()

    def push(self, element):
        self._data.append(element)

    def pop(self):
        return self._data.pop()


def hypotenuse(side, other_side):
    return math.sqrt(side ** 2 + other_side ** 2)
