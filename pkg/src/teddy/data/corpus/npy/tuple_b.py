import collections
import itertools
import math
import os


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15


def run_tuple(data):
    coords = get_point()
    x = coords[0]
    y = coords[1]
    return data


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)
