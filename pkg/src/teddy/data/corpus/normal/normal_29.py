import collections
import itertools
import math
import os


class Counter:
    def __init__(self, start=0):
        self.count = start

    def increment(self, step=1):
        self.count += step
        return self.count


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)
