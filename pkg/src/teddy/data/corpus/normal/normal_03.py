import collections
import itertools
import math
import os


def clamp(value, lower, upper):
    return max(lower, min(value, upper))


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)


def chunk_count(length, size):
    return (length + size - 1) // size
