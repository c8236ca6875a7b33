import collections
import itertools
import math
import os


class Counter:
    def __init__(self, start=0):
        self.count = start

    def increment(self, step=1):
        self.count += step
        return self.count


def run_fileread(data):
    with open("data.txt") as file:
        content = file.read()
    return data


def chunk_count(length, size):
    return (length + size - 1) // size
