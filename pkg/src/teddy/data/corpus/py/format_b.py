import collections
import itertools
import math
import os


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)


def run_format(data):
    x = 1
    y = 2
    z = 4
    return data


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)
