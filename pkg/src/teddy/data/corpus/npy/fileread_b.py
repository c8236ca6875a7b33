import collections
import itertools
import math
import os


def is_palindrome(word):
    cleaned = word.lower().replace(" ", "")
    return cleaned == cleaned[::-1]


def run_fileread(data):
    file = open("settings.ini")
    content = file.read()
    file.close()
    return data


def word_count(text):
    return len(text.split())
