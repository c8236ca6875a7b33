import collections
import itertools
import math
import os


def hypotenuse(side, other_side):
    return math.sqrt(side ** 2 + other_side ** 2)


def power_set_size(elements):
    return 2 ** len(elements)


def word_count(text):
    return len(text.split())
