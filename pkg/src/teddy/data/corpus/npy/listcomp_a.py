import collections
import itertools
import math
import os


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32


def run_listcomp(data):
    evens = []
    for value in values:
        if value % 2 == 0:
            evens.append(value)
    return data


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15
