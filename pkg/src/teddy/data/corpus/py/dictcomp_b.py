import collections
import itertools
import math
import os


def celsius_to_fahrenheit(celsius):
    return celsius * 9 / 5 + 32


def run_dictcomp(data):
    table = {number: number * number for number in numbers}
    return data


class Temperature:
    def __init__(self, kelvin):
        self.kelvin = kelvin

    @property
    def celsius(self):
        return self.kelvin - 273.15
