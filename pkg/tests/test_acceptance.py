"""End-to-end acceptance suite.

Each test checks one headline guarantee of the package and emits exactly one
``PASS [k] ...`` / ``FAIL [k] ...`` line (visible with ``pytest -s``; under
plain ``pytest -v`` the per-test PASSED/FAILED status carries the same
information).  The checks are exact unless a runtime budget is stated.
"""

from __future__ import annotations

import time
from collections import Counter
from contextlib import contextmanager
from typing import Iterator

from pathmonoid import (
    alphabet_iend,
    alphabet_paut,
    classify,
    closure,
    count_iend,
    count_paut,
    elements_with_domain,
    enumerate_iend,
    enumerate_paut,
    eval_word,
    exhaustive_min_size,
    expand_symbol,
    expand_word,
    factor_iend,
    factor_paut,
    iend_monoid,
    image_intervals,
    is_iend,
    is_irredundant,
    is_paut,
    legal_symbols,
    make_generator,
    mask_profile,
    oracle_classifications,
    paut_monoid,
    rank_formula,
    verify_rank,
)
from pathmonoid.census import iend_contribution, mask_to_set, paut_contribution
from pathmonoid.rankcheck import (
    alphabet_elements,
    corank_one_non_automorphisms_have_end_deleted_image,
    end_deleted_domain_elements_are_automorphisms,
    lower_bound_witnesses,
)

from conftest import all_partial_injections, edge_oracle_is_iend

_DESCRIPTIONS = {
    1: "closed-form counts equal enumeration sizes for n = 1..8",
    2: "per-mask counts equal the closed-form mask contributions for n = 1..6",
    3: "the alphabets generate the full monoids by closure",
    4: "every element factors into a word that round-trips exactly",
    5: "every legal generator symbol expands to alphabet letters exactly",
    6: "structural Green's predicates match the ideal-based oracle",
    7: "minimal generating sets have exactly the stated sizes",
    8: "membership predicates agree with independent oracles on all of I_n",
}


@contextmanager
def criterion(k: int) -> Iterator[None]:
    try:
        yield
    except BaseException:
        print(f"FAIL [{k}] {_DESCRIPTIONS[k]}")
        raise
    print(f"PASS [{k}] {_DESCRIPTIONS[k]}")


def test_01_closed_form_counts_match_enumeration():
    with criterion(1):
        start = time.monotonic()
        for n in range(1, 9):
            assert count_paut(n) == len(enumerate_paut(n))
            assert count_iend(n) == len(enumerate_iend(n))
        # Anchor values from the reference listings of the small monoids.
        assert count_paut(1) == 2
        assert count_paut(2) == 7 == count_iend(2)
        assert time.monotonic() - start < 60.0


def test_02_per_mask_counts_match_closed_form():
    with criterion(2):
        for n in range(1, 7):
            for bits in range(1 << n):
                profile = mask_profile(n, bits)
                domain = mask_to_set(n, bits)
                assert len(elements_with_domain(n, domain, "paut")) == paut_contribution(profile)
                assert len(elements_with_domain(n, domain, "iend")) == iend_contribution(profile)


def test_03_alphabets_generate_full_monoids():
    with criterion(3):
        start = time.monotonic()
        for n in range(3, 7):
            generated = closure(alphabet_elements("paut", n), n)
            assert set(generated) == set(enumerate_paut(n))
        for n in range(3, 6):
            generated = closure(alphabet_elements("iend", n), n)
            assert set(generated) == set(enumerate_iend(n))
        assert time.monotonic() - start < 60.0


def test_04_factorization_round_trip():
    with criterion(4):
        for n in range(3, 7):
            base = set(alphabet_paut(n))
            for a in enumerate_paut(n):
                word = factor_paut(a)
                assert len(word) <= 4 * n * n
                expanded = expand_word(word)
                assert set(expanded.letters) <= base
                assert eval_word(expanded) == a
        for n in range(3, 6):
            base = set(alphabet_iend(n))
            for b in enumerate_iend(n):
                word = factor_iend(b)
                assert len(word) <= 4 * n * n
                expanded = expand_word(word)
                assert set(expanded.letters) <= base
                assert eval_word(expanded) == b


def test_05_generator_expansion_identities():
    with criterion(5):
        checked = 0
        for n in range(3, 11):
            base = set(alphabet_iend(n))
            automorphism_base = set(alphabet_paut(n))
            for sym in legal_symbols(n):
                word = expand_symbol(sym, n)
                letters = set(word.letters)
                assert letters <= base
                if sym.kind != "b":
                    assert letters <= automorphism_base
                assert eval_word(word) == make_generator(sym, n)
                checked += 1
        assert checked > 0


def test_06_greens_predicates_match_ideal_oracle():
    with criterion(6):
        scopes = (
            ("iend", enumerate_iend, range(3, 6)),
            ("paut", enumerate_paut, range(3, 7)),
        )
        for _family, enumerate_family, ns in scopes:
            for n in ns:
                monoid = enumerate_family(n)
                oracle = oracle_classifications(monoid, ("L", "R", "J"))
                for relation in ("L", "R", "J"):
                    assert classify(monoid, relation).as_sets() == oracle[relation].as_sets()
        # For path automorphisms, the J-partition is exactly the partition by
        # multiset of image-interval sizes.
        for n in range(3, 7):
            monoid = enumerate_paut(n)
            by_sizes: dict[frozenset, set] = {}
            for a in monoid:
                sizes = Counter(hi - lo + 1 for lo, hi in image_intervals(a))
                by_sizes.setdefault(frozenset(sizes.items()), set()).add(a)
            expected = frozenset(frozenset(members) for members in by_sizes.values())
            assert classify(monoid, "J").as_sets() == expected


def test_07_minimal_generating_set_sizes():
    with criterion(7):
        # The shipped alphabets realize the closed-form rank values.
        for n in range(3, 13):
            assert len(alphabet_paut(n)) == rank_formula("paut", n)
            assert len(alphabet_iend(n)) == rank_formula("iend", n)
        # No letter is redundant.
        for n in range(4, 7):
            assert is_irredundant(alphabet_elements("paut", n), paut_monoid(n))
        for n in range(4, 6):
            assert is_irredundant(alphabet_elements("iend", n), iend_monoid(n))
        # Exhaustive subset search at n = 3: no smaller set generates.
        start = time.monotonic()
        assert exhaustive_min_size(paut_monoid(3), 2)
        assert exhaustive_min_size(iend_monoid(3), 3)
        assert time.monotonic() - start < 300.0
        witness = verify_rank("paut", 3, exhaustive=True)
        assert witness.ok and witness.exhaustive_lower_bound == 3
        witness = verify_rank("iend", 3, exhaustive=True)
        assert witness.ok and witness.exhaustive_lower_bound == 4
        # Structural witnesses backing the lower bounds at larger n.
        for n in range(3, 9):
            assert all(lower_bound_witnesses(n).values())
        for n in range(1, 7):
            assert end_deleted_domain_elements_are_automorphisms(n)
            assert corank_one_non_automorphisms_have_end_deleted_image(n)


def test_08_membership_predicates_match_oracles():
    with criterion(8):
        for n in range(1, 7):
            for a in all_partial_injections(n):
                assert is_iend(a) == edge_oracle_is_iend(a)
                assert is_paut(a) == (is_iend(a) and is_iend(a.inverse()))
