"""Pythonic idiom detection and recommendation via token clone search."""

__version__ = "0.1.0"
