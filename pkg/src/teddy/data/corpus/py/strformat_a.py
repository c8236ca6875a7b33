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


def run_strformat(data):
    message = "Hello {}, you are {} years old".format(name, age)
    return data


def parse_version(text):
    parts = text.strip().split(".")
    return tuple(int(part) for part in parts)
