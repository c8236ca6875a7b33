import collections
import itertools
import math
import os


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))


class Counter:
    def __init__(self, start=0):
        self.count = start

    def increment(self, step=1):
        self.count += step
        return self.count
