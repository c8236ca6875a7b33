import collections
import itertools
import math
import os


def word_count(text):
    return len(text.split())


def run_tuple(data):
    point = get_point()
    x = point[0]
    y = point[1]
    return data


def clamp(value, lower, upper):
    return max(lower, min(value, upper))
