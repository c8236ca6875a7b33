"""Token-sequence similarity measures, each scored as an integer in [0, 100]."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
from numba import njit

Gram = tuple[str, ...]


def round_half_up(value: Fraction | float) -> int:
    """Round a non-negative number to the nearest int, .5 going up."""
    return int(Fraction(value) + Fraction(1, 2))


def percent(part: int, whole: int) -> int:
    """``round_half_up(100 * part / whole)`` in integer arithmetic."""
    return (200 * part + whole) // (2 * whole)


def ngrams(tokens: Sequence[str], n: int) -> frozenset[Gram]:
    """Distinct n-grams; a sequence shorter than n is one gram of itself."""
    if n < 1:
        raise ValueError("n must be >= 1")
    tokens = tuple(tokens)
    if len(tokens) < n:
        return frozenset([tokens]) if tokens else frozenset()
    return frozenset(tokens[i : i + n] for i in range(len(tokens) - n + 1))


def containment(query_grams: frozenset[Gram], candidate_grams: frozenset[Gram]) -> int:
    if not query_grams:
        raise ValueError("query has no n-grams")
    return percent(len(query_grams & candidate_grams), len(query_grams))


def ngram_token_ratio(query: Sequence[str], candidate: Sequence[str], n: int = 4) -> int:
    """Share of the query's distinct n-grams that also occur in the candidate.

    Not symmetric: a short query fully contained in a long candidate scores 100.
    """
    if not query or not candidate:
        raise ValueError("ngram_token_ratio needs two non-empty sequences")
    return containment(ngrams(query, n), ngrams(candidate, n))


@njit(cache=True)
def _matched_length(a: np.ndarray, b: np.ndarray) -> int:  # pragma: no cover - compiled
    n = a.shape[0]
    m = b.shape[0]
    if n == 0 or m == 0:
        return 0
    # suffix[i + 1, j + 1] = length of the common suffix of a[:i + 1] and b[:j + 1]
    suffix = np.zeros((n + 1, m + 1), np.int32)
    for i in range(n):
        for j in range(m):
            if a[i] == b[j]:
                suffix[i + 1, j + 1] = suffix[i, j] + 1
    boxes = np.empty((2 * min(n, m) + 2, 4), np.int64)
    boxes[0, 0] = 0
    boxes[0, 1] = n
    boxes[0, 2] = 0
    boxes[0, 3] = m
    top = 1
    total = 0
    while top > 0:
        top -= 1
        alo = boxes[top, 0]
        ahi = boxes[top, 1]
        blo = boxes[top, 2]
        bhi = boxes[top, 3]
        best_k = 0
        best_i = 0
        best_j = 0
        for i in range(alo, ahi):
            for j in range(blo, bhi):
                k = suffix[i + 1, j + 1]
                if k == 0:
                    continue
                k = min(k, i - alo + 1, j - blo + 1)
                si = i - k + 1
                sj = j - k + 1
                if k > best_k or (k == best_k and (si < best_i or (si == best_i and sj < best_j))):
                    best_k = k
                    best_i = si
                    best_j = sj
        if best_k == 0:
            continue
        total += best_k
        if alo < best_i and blo < best_j:
            boxes[top, 0] = alo
            boxes[top, 1] = best_i
            boxes[top, 2] = blo
            boxes[top, 3] = best_j
            top += 1
        if best_i + best_k < ahi and best_j + best_k < bhi:
            boxes[top, 0] = best_i + best_k
            boxes[top, 1] = ahi
            boxes[top, 2] = best_j + best_k
            boxes[top, 3] = bhi
            top += 1
    return total


def _codepoints(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)


def matched_length(a: str, b: str) -> int:
    """Total size of Ratcliff/Obershelp matching blocks between two strings.

    Same blocks as ``difflib.SequenceMatcher(None, a, b, autojunk=False)``:
    the longest common block is taken first (earliest in ``a``, then in
    ``b``, on ties) and both sides are matched recursively.
    """
    return int(_matched_length(_codepoints(a), _codepoints(b)))


@lru_cache(maxsize=65536)
def ratio(a: str, b: str) -> int:
    total = len(a) + len(b)
    if total == 0:
        return 100
    return percent(2 * matched_length(a, b), total)


def _prefix_ratio(prefix: str, whole: str) -> int:
    # ``whole`` starts with ``prefix``: the first longest common block is the
    # whole prefix and nothing remains on either side, so M = len(prefix)
    return percent(2 * len(prefix), len(prefix) + len(whole))


@lru_cache(maxsize=65536)
def _token_set_ratio(query_set: frozenset[str], candidate_set: frozenset[str]) -> int:
    common = sorted(query_set & candidate_set)
    joined_common = " ".join(common)
    combined_query = " ".join(common + sorted(query_set - candidate_set))
    combined_candidate = " ".join(common + sorted(candidate_set - query_set))
    best = 0
    if common:
        best = max(_prefix_ratio(joined_common, combined_query), _prefix_ratio(joined_common, combined_candidate))
    if best < 100:
        best = max(best, ratio(combined_query, combined_candidate))
    return best


def token_set_ratio(query: Sequence[str], candidate: Sequence[str]) -> int:
    """Fuzzy token-set ratio over the distinct tokens of both sequences.

    A query whose distinct tokens are a subset of the candidate's scores 100.
    """
    if not query or not candidate:
        raise ValueError("token_set_ratio needs two non-empty sequences")
    return _token_set_ratio(frozenset(query), frozenset(candidate))
