import collections
import itertools
import math
import os


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]


def run_dictcomp(data):
    squares = {number: number * number for number in numbers}
    return data


def word_count(text):
    return len(text.split())
