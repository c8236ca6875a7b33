import collections
import itertools
import math
import os


def fibonacci(limit):
    if limit < 2:
        return limit
    return fibonacci(limit - 1) + fibonacci(limit - 2)


def clamp(value, lower, upper):
    return max(lower, min(value, upper))


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]
