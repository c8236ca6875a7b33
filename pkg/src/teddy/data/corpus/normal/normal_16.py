import collections
import itertools
import math
import os


def power_set_size(elements):
    return 2 ** len(elements)


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15


class Stack:
    def __init__(self):
        self._data = collections.deque()

    def push(self, element):
        self._data.append(element)

    def pop(self):
        return self._data.pop()
