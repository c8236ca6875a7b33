import collections
import itertools
import math
import os


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)


def run_fileread(data):
    file = open("data.txt")
    content = file.read()
    file.close()
    return data


def normalize_path(path):
    expanded = os.path.expanduser(path)
    return os.path.abspath(expanded)
