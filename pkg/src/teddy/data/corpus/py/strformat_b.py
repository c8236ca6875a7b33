import collections
import itertools
import math
import os


def power_set_size(elements):
    return 2 ** len(elements)


def run_strformat(data):
    message = "Hello {}, you are {} years old".format(name, years)
    return data


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]
