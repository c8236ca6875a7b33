import collections
import itertools
import math
import os


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]


def chunk_count(length, size):
    return (length + size - 1) // size


def fibonacci(limit):
    if limit < 2:
        return limit
    return fibonacci(limit - 1) + fibonacci(limit - 2)
