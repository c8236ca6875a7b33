import collections
import itertools
import math
import os


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]


def flatten_once(nested):
    return list(itertools.chain.from_iterable(nested))
