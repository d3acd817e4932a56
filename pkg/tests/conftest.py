"""Shared naive oracles and strategies for the test suite.

The oracles here are deliberately brute-force and independent of the
library's own interval-based logic, so the fast implementations are
checked against something that cannot share their bugs.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from hypothesis import strategies as st

from pathmonoid import PartialInjection


def all_partial_injections(n: int) -> Iterator[PartialInjection]:
    """Every injective partial map on {1..n}, by explicit domain/image choice."""
    points = range(1, n + 1)
    for size in range(n + 1):
        for dom in combinations(points, size):
            for img in permutations(points, size):
                yield PartialInjection(n, list(zip(dom, img)))


def edge_oracle_is_iend(a: PartialInjection) -> bool:
    """Edge-by-edge endomorphism test: every domain edge maps to an edge."""
    mapping = dict(a.pairs)
    for x in range(1, a.n):
        if x in mapping and x + 1 in mapping:
            if abs(mapping[x] - mapping[x + 1]) != 1:
                return False
    return True


@st.composite
def partial_injections(draw, min_n: int = 1, max_n: int = 7) -> PartialInjection:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    points = list(range(1, n + 1))
    dom = draw(st.lists(st.sampled_from(points), unique=True, max_size=n))
    img = draw(st.permutations(points))
    return PartialInjection(n, list(zip(sorted(dom), img)))
