import collections
import itertools
import math
import os


def retry(func, attempts=3):
    last_error = None
    while attempts > 0:
        try:
            return func()
        except OSError as error:
            last_error = error
            attempts -= 1
    raise last_error


def run_set(data):
    unique_names = []
    for name in names:
        if name not in unique_names:
            unique_names.append(name)
    return data


class Stack:
    def __init__(self):
        self._data = collections.deque()

    def push(self, element):
        self._data.append(element)

    def pop(self):
        return self._data.pop()
