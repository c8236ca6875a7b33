"""Collapse overlapping line spans to the best-scoring one."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, TypeVar

T = TypeVar("T")


def overlaps(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def collapse_overlaps(
    items: Iterable[T],
    group: Callable[[T], Hashable],
    span: Callable[[T], tuple[int, int]],
    score: Callable[[T], object],
    tiebreak: Callable[[T], object] = lambda item: 0,
) -> list[T]:
    """Keep, per group, a set of pairwise non-overlapping items.

    Greedy by descending score, then narrower span, earlier start and
    ``tiebreak``, so the result does not depend on input order.
    """
    groups: dict[Hashable, list[T]] = {}
    for item in items:
        groups.setdefault(group(item), []).append(item)
    kept: list[T] = []
    for members in groups.values():
        members.sort(key=lambda it: (-score(it), span(it)[1] - span(it)[0], span(it)[0], span(it)[1], tiebreak(it)))
        chosen: list[T] = []
        for item in members:
            if not any(overlaps(span(item), span(other)) for other in chosen):
                chosen.append(item)
        kept.extend(chosen)
    return kept
