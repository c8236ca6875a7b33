from __future__ import annotations

import difflib
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from teddy.similarity import (
    matched_length,
    ngram_token_ratio,
    ngrams,
    percent,
    ratio,
    round_half_up,
    token_set_ratio,
)


def brute_matched(a: str, b: str) -> int:
    """Ratcliff/Obershelp by exhaustive search for the longest common block."""
    if not a or not b:
        return 0
    best = (0, 0, 0)
    for i in range(len(a)):
        for j in range(len(b)):
            k = 0
            while i + k < len(a) and j + k < len(b) and a[i + k] == b[j + k]:
                k += 1
            if k > best[2]:
                best = (i, j, k)
    i, j, k = best
    if k == 0:
        return 0
    return k + brute_matched(a[:i], b[:j]) + brute_matched(a[i + k :], b[j + k :])


def oracle_ratio(a: str, b: str) -> int:
    total = len(a) + len(b)
    if total == 0:
        return 100
    exact = Fraction(200 * brute_matched(a, b), total)
    return int(exact + Fraction(1, 2))


def oracle_tsr(query, candidate) -> int:
    g, h = set(query), set(candidate)
    inter = " ".join(sorted(g & h))
    a = (inter + " " + " ".join(sorted(g - h))).strip(" ")
    b = (inter + " " + " ".join(sorted(h - g))).strip(" ")
    return max(oracle_ratio(inter, a), oracle_ratio(inter, b), oracle_ratio(a, b))


def test_round_half_up():
    assert round_half_up(Fraction(1, 2)) == 1
    assert round_half_up(Fraction(5, 2)) == 3
    assert round_half_up(Fraction(249, 100)) == 2
    assert percent(1, 8) == 13  # 12.5 rounds up
    assert percent(0, 3) == 0
    assert percent(3, 3) == 100


def test_ngrams_short_sequence_is_one_gram():
    assert ngrams(("a", "b"), 4) == frozenset({("a", "b")})
    assert ngrams(("a", "b", "c", "d", "e"), 4) == frozenset({("a", "b", "c", "d"), ("b", "c", "d", "e")})


def test_ntr_identical():
    assert ngram_token_ratio(list("abcde"), list("abcde")) == 100


def test_ntr_half_overlap():
    assert ngram_token_ratio(list("abcde"), list("abcdx")) == 50


def test_ntr_disjoint():
    assert ngram_token_ratio(list("abcd"), list("wxyz")) == 0


def test_ntr_is_query_containment_not_symmetric():
    short, long = list("abcd"), list("abcdefgh")
    assert ngram_token_ratio(short, long) == 100
    assert ngram_token_ratio(long, short) == 20


def test_ntr_rejects_empty():
    with pytest.raises(ValueError):
        ngram_token_ratio([], ["a"])


def test_tsr_identical_and_permutation():
    assert token_set_ratio(["a", "b", "c"], ["a", "b", "c"]) == 100
    assert token_set_ratio(["c", "a", "b", "a"], ["a", "b", "c"]) == 100


def test_tsr_disjoint_matches_oracle():
    # "a b" vs "c d": only the space matches, 2*1/6
    assert token_set_ratio(["a", "b"], ["c", "d"]) == oracle_tsr(["a", "b"], ["c", "d"]) == 33


def test_tsr_subset_query_scores_100():
    assert token_set_ratio(["for", "ID"], ["for", "ID", "in", "("]) == 100


def test_tsr_rejects_empty():
    with pytest.raises(ValueError):
        token_set_ratio(["a"], [])


def test_matched_length_against_difflib_and_brute_force():
    rng = random.Random(7)
    for _ in range(3000):
        a = "".join(rng.choice("abc \n") for _ in range(rng.randint(0, 25)))
        b = "".join(rng.choice("abc \n") for _ in range(rng.randint(0, 25)))
        sm = difflib.SequenceMatcher(None, a, b, autojunk=False)
        expected = sum(block.size for block in sm.get_matching_blocks())
        assert matched_length(a, b) == expected, (a, b)
    for _ in range(500):
        a = "".join(rng.choice("xyz") for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice("xyz") for _ in range(rng.randint(0, 12)))
        assert matched_length(a, b) == brute_matched(a, b), (a, b)


def test_matched_length_non_ascii():
    assert matched_length("café ✓", "cafe ✓") == 5
    assert ratio("", "") == 100


_tokens = st.lists(st.sampled_from(["ID", "LIT", "=", "(", ")", "for", "in", "\n", ":", ",", "x", "yy"]), min_size=1, max_size=12)


@given(_tokens, _tokens)
def test_tsr_agrees_with_oracle(query, candidate):
    assert token_set_ratio(query, candidate) == oracle_tsr(query, candidate)


@given(_tokens, _tokens, st.randoms(use_true_random=False))
def test_tsr_permutation_invariant(query, candidate, rnd):
    shuffled = list(query)
    rnd.shuffle(shuffled)
    assert token_set_ratio(shuffled, candidate) == token_set_ratio(query, candidate)


@given(_tokens, _tokens, st.integers(1, 5))
def test_scores_bounded_and_self_is_100(query, candidate, n):
    for score in (ngram_token_ratio(query, candidate, n), token_set_ratio(query, candidate)):
        assert 0 <= score <= 100
    assert ngram_token_ratio(query, query, n) == 100
    assert token_set_ratio(query, query) == 100
