"""Exact counting and enumeration of PAut(P_n) and IEnd(P_n).

Counting sums a closed-form contribution over all 2^n domain masks.  For a
mask A (a subset of {1..n}, encoded with bit p-1 for vertex p) write

* r   -- number of maximal intervals (blocks) of A,
* s   -- |A|,
* T   -- number of blocks of size >= 2,
* q1  -- C(n - s + 1, r): placements of r image blocks separated by gaps,
* q2  -- C(n - s + r, r): placements allowing adjacent image blocks,
* t_i -- r! * q_i: placements times the assignment of blocks to slots.

Each block of size >= 2 can be laid down in two orientations, so the mask
contributes 2^T * t1 elements to PAut and 2^T * t2 to IEnd (the empty mask
contributes exactly one element, the empty map).

Enumeration is constructive -- image blocks are placed explicitly, never
filtered from the full symmetric inverse monoid -- so it doubles as an
independent check of the closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial
from typing import Iterator

from .errors import ResourceRefused
from .path_core import PartialInjection, format_element, maximal_intervals

__all__ = [
    "MaskProfile",
    "mask_profile",
    "mask_to_string",
    "mask_from_set",
    "mask_to_set",
    "paut_contribution",
    "iend_contribution",
    "count_paut",
    "count_iend",
    "count_by_mask",
    "enumerate_paut",
    "enumerate_iend",
    "elements_with_domain",
    "DEFAULT_N_MAX_ENUMERATE",
]

DEFAULT_N_MAX_ENUMERATE = 8


@dataclass(frozen=True)
class MaskProfile:
    """The counting data of one domain mask."""

    n: int
    bits: int
    r: int
    s: int
    T: int
    q1: int
    q2: int
    t1: int
    t2: int


def mask_from_set(n: int, points: set[int] | frozenset[int]) -> int:
    bits = 0
    for p in points:
        if not 1 <= p <= n:
            raise ValueError(f"vertex {p} out of range for n={n}")
        bits |= 1 << (p - 1)
    return bits


def mask_to_set(n: int, bits: int) -> frozenset[int]:
    return frozenset(p for p in range(1, n + 1) if bits >> (p - 1) & 1)


def mask_to_string(n: int, bits: int) -> str:
    """Bit string with position p (left to right) equal to A(p)."""
    return "".join("1" if bits >> (p - 1) & 1 else "0" for p in range(1, n + 1))


def mask_profile(n: int, bits: int) -> MaskProfile:
    """Compute (r, s, T, q1, q2, t1, t2) for one domain mask."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= bits < 1 << n:
        raise ValueError(f"mask {bits:#x} out of range for n={n}")
    r = s = T = 0
    prev = False  # A(p-1), with the sentinel A(0) = 0
    run = 0
    for p in range(1, n + 1):
        cur = bool(bits >> (p - 1) & 1)
        if cur:
            s += 1
            run += 1
            if not prev:
                r += 1
        else:
            if run >= 2:
                T += 1
            run = 0
        prev = cur
    if run >= 2:
        T += 1
    if s == 0:
        q1 = q2 = 1
    else:
        q1 = comb(n - s + 1, r)
        q2 = comb(n - s + r, r)
    f = factorial(r)
    return MaskProfile(n=n, bits=bits, r=r, s=s, T=T, q1=q1, q2=q2, t1=f * q1, t2=f * q2)


def paut_contribution(profile: MaskProfile) -> int:
    """Number of partial automorphisms whose domain is exactly the mask."""
    return (1 << profile.T) * profile.t1


def iend_contribution(profile: MaskProfile) -> int:
    """Number of injective partial endomorphisms with domain the mask."""
    return (1 << profile.T) * profile.t2


def count_paut(n: int) -> int:
    """|PAut(P_n)|, exactly, by the closed form (cost 2^n masks)."""
    return sum(paut_contribution(mask_profile(n, bits)) for bits in range(1 << n))


def count_iend(n: int) -> int:
    """|IEnd(P_n)|, exactly, by the closed form (cost 2^n masks)."""
    return sum(iend_contribution(mask_profile(n, bits)) for bits in range(1 << n))


def count_by_mask(n: int) -> list[tuple[MaskProfile, int, int]]:
    """Per-mask table of (profile, paut contribution, iend contribution)."""
    table = []
    for bits in range(1 << n):
        prof = mask_profile(n, bits)
        table.append((prof, paut_contribution(prof), iend_contribution(prof)))
    return table


# -- constructive enumeration -------------------------------------------------


def _placements(slot_sizes: list[int], n: int, min_gap: int) -> Iterator[tuple[int, ...]]:
    """Start positions for ordered blocks of the given sizes on {1..n}.

    Consecutive blocks are separated by at least ``min_gap`` unused vertices
    (0 lets image blocks touch, 1 keeps them maximal in the image).
    """
    r = len(slot_sizes)
    if r == 0:
        yield ()
        return
    # Minimal span still needed from slot i onward, to bound each start.
    tail_span = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        extra = min_gap if i < r - 1 else 0
        tail_span[i] = slot_sizes[i] + extra + tail_span[i + 1]

    def rec(i: int, next_free: int) -> Iterator[tuple[int, ...]]:
        if i == r:
            yield ()
            return
        for start in range(next_free, n - tail_span[i] + 2):
            for rest in rec(i + 1, start + slot_sizes[i] + min_gap):
                yield (start, *rest)

    yield from rec(0, 1)


def elements_with_domain(
    n: int, domain: set[int] | frozenset[int], family: str
) -> list[PartialInjection]:
    """All members of the family whose domain is exactly ``domain``.

    ``family`` is ``"paut"`` or ``"iend"``.  Blocks of the domain are mapped
    to explicitly placed image intervals, each orientable when its size
    allows, which realizes every element exactly once.
    """
    if family not in ("paut", "iend"):
        raise ValueError(f"unknown family {family!r}")
    min_gap = 1 if family == "paut" else 0
    blocks = maximal_intervals(domain)
    sizes = [hi - lo + 1 for lo, hi in blocks]
    r = len(blocks)
    out: list[PartialInjection] = []
    for assign in permutations(range(r)):
        slot_sizes = [sizes[b] for b in assign]
        slot_of = {b: slot for slot, b in enumerate(assign)}
        for starts in _placements(slot_sizes, n, min_gap):
            base: list[list[tuple[int, int]]] = []
            flippable: list[int] = []
            for b, (lo, hi) in enumerate(blocks):
                slot = slot_of[b]
                c = starts[slot]
                size = sizes[b]
                base.append([(lo + k, c + k) for k in range(size)])
                if size >= 2:
                    flippable.append(b)
            for flip_mask in range(1 << len(flippable)):
                pairs: list[tuple[int, int]] = []
                flipped = {
                    flippable[i] for i in range(len(flippable)) if flip_mask >> i & 1
                }
                for b, block_pairs in enumerate(base):
                    if b in flipped:
                        c = starts[slot_of[b]]
                        top = c + sizes[b] - 1
                        pairs.extend((x, top - (y - c)) for x, y in block_pairs)
                    else:
                        pairs.extend(block_pairs)
                out.append(PartialInjection(n, pairs))
    return out


def _enumerate_family(n: int, family: str, n_max: int) -> list[PartialInjection]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > n_max:
        raise ResourceRefused(
            f"enumeration at n={n} exceeds the configured bound n_max={n_max}"
        )
    elements: list[PartialInjection] = []
    for bits in range(1 << n):
        elements.extend(elements_with_domain(n, mask_to_set(n, bits), family))
    elements.sort(key=format_element)
    return elements


def enumerate_paut(n: int, *, n_max: int = DEFAULT_N_MAX_ENUMERATE) -> list[PartialInjection]:
    """All of PAut(P_n), sorted by text form.  Refuses n > ``n_max``."""
    return _enumerate_family(n, "paut", n_max)


def enumerate_iend(n: int, *, n_max: int = DEFAULT_N_MAX_ENUMERATE) -> list[PartialInjection]:
    """All of IEnd(P_n), sorted by text form.  Refuses n > ``n_max``."""
    return _enumerate_family(n, "iend", n_max)
