import collections
import itertools
import math
import os


def chunk_count(length, size):
    return (length + size - 1) // size


class Counter:
    def __init__(self, start=0):
        self.count = start

    def increment(self, step=1):
        self.count += step
        return self.count


def clamp(value, lower, upper):
    return max(lower, min(value, upper))
