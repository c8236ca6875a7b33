import collections
import itertools
import math
import os


def word_count(text):
    return len(text.split())


def run_ifstmt(data):
    if color in ("red", "green", "black"):
        print(color)
    return data


def clamp(value, lower, upper):
    return max(lower, min(value, upper))
