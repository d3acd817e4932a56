"""Generator symbols, alphabets, words, and expansion identities."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathmonoid import (
    PartialInjection,
    Symbol,
    Word,
    alphabet_iend,
    alphabet_paut,
    compose,
    eval_word,
    expand_symbol,
    expand_word,
    format_symbol,
    format_word,
    identity,
    is_iend,
    is_paut,
    legal_symbols,
    make_generator,
    parse_symbol,
    parse_word,
)
from pathmonoid.genwords import (
    alpha,
    alpha_star,
    beta,
    canonical_eps_star,
    eps,
    eps_star,
    rho_minus,
    rho_plus,
    tau,
)


class TestMakeGenerator:
    def test_tau(self):
        assert make_generator(tau(), 4) == PartialInjection(4, [(1, 4), (2, 3), (3, 2), (4, 1)])

    def test_alpha(self):
        # a(2) at n=5: fixes 1, folds 3..5 onto 5..3 reversed.
        assert make_generator(alpha(2), 5) == PartialInjection(
            5, [(1, 1), (3, 5), (4, 4), (5, 3)]
        )

    def test_alpha_boundary_conventions(self):
        assert make_generator(alpha(0), 4) == make_generator(tau(), 4)
        assert make_generator(alpha(5), 4) == identity(4)

    def test_alpha_star(self):
        # as(4) at n=5: reverses 1..3 onto 3..1, fixes 5.
        assert make_generator(alpha_star(4), 5) == PartialInjection(
            5, [(1, 3), (2, 2), (3, 1), (5, 5)]
        )

    def test_eps(self):
        assert make_generator(eps(2, 4), 5) == PartialInjection(5, [(1, 1), (3, 3), (5, 5)])

    def test_eps_star_interior(self):
        # es(1,4): fixes outside [1,4], reverses the open segment (1,4).
        assert make_generator(eps_star(1, 4), 6) == PartialInjection(
            6, [(2, 3), (3, 2), (5, 5), (6, 6)]
        )

    def test_eps_star_boundary_conventions(self):
        n = 6
        assert make_generator(eps_star(0, n + 1), n) == make_generator(tau(), n)
        for j in range(2, n + 1):
            assert make_generator(eps_star(0, j), n) == make_generator(alpha_star(j), n)
        for i in range(1, n - 1):
            assert make_generator(eps_star(i, n + 1), n) == make_generator(alpha(i), n)

    def test_shifts(self):
        assert make_generator(rho_plus(1, 4), 5) == PartialInjection(
            5, [(3, 2), (4, 3)]
        )
        assert make_generator(rho_minus(2, 5), 5) == PartialInjection(
            5, [(2, 3), (3, 4)]
        )

    def test_beta(self):
        assert make_generator(beta(3), 5) == PartialInjection(
            5, [(1, 1), (2, 2), (4, 3), (5, 4)]
        )
        assert not is_paut(make_generator(beta(3), 5))
        assert is_iend(make_generator(beta(3), 5))

    def test_rejects_out_of_range_indices(self):
        for sym, n in (
            (alpha(6), 4),  # i > n+1
            (alpha_star(0), 4),
            (eps(2, 3), 4),  # needs i+1 < j
            (eps(0, 3), 4),
            (eps_star(1, 7), 5),
            (rho_plus(1, 3), 5),  # needs i+2 < j
            (rho_minus(0, 4), 5),
            (beta(1), 5),
            (beta(5), 5),
        ):
            with pytest.raises(ValueError):
                make_generator(sym, n)

    def test_legal_symbols_agree_with_validation(self):
        for n in (3, 4, 6):
            symbols = list(legal_symbols(n))
            assert len(set(symbols)) == len(symbols)
            for sym in symbols:
                make_generator(sym, n)  # must not raise


class TestAlphabets:
    def test_paut_alphabet_small(self):
        assert alphabet_paut(3) == (tau(), alpha(1), alpha(2))
        assert alphabet_paut(5) == (tau(), alpha(1), alpha(2), alpha(3))

    def test_iend_alphabet_adds_betas(self):
        assert alphabet_iend(3) == (tau(), alpha(1), alpha(2), beta(2))
        assert alphabet_iend(6)[-2:] == (beta(2), beta(3))

    def test_sizes(self):
        for n in range(3, 13):
            assert len(alphabet_paut(n)) == (3 if n == 3 else n - 1)
            assert len(alphabet_iend(n)) == len(alphabet_paut(n)) + (n + 1) // 2 - 1

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            alphabet_paut(2)
        with pytest.raises(ValueError):
            alphabet_iend(2)

    def test_letters_are_members(self):
        for n in (3, 5, 8):
            for sym in alphabet_paut(n):
                assert is_paut(make_generator(sym, n))
            for sym in alphabet_iend(n):
                assert is_iend(make_generator(sym, n))


class TestWords:
    def test_word_validates_letters(self):
        with pytest.raises(ValueError):
            Word(4, (beta(4),))  # b needs 2 <= i <= n-1

    def test_eval_left_to_right(self):
        w = Word(3, (alpha(1), tau()))
        expected = compose(make_generator(alpha(1), 3), make_generator(tau(), 3))
        assert eval_word(w) == expected

    def test_empty_word_is_identity(self):
        assert eval_word(Word(4, ())) == identity(4)

    def test_concatenation_is_homomorphic(self):
        u = Word(5, (alpha(2), eps(1, 3)))
        v = Word(5, (tau(), alpha_star(3)))
        assert eval_word(u + v) == compose(eval_word(u), eval_word(v))

    def test_concatenation_rejects_mixed_n(self):
        with pytest.raises(ValueError):
            Word(4, ()) + Word(5, ())


class TestTextFormat:
    @pytest.mark.parametrize(
        "text,sym",
        [
            ("tau", tau()),
            ("a3", alpha(3)),
            ("as3", alpha_star(3)),
            ("e1,4", eps(1, 4)),
            ("es1,4", eps_star(1, 4)),
            ("rp0,5", rho_plus(0, 5)),
            ("rm2,6", rho_minus(2, 6)),
            ("b3", beta(3)),
        ],
    )
    def test_symbol_round_trip(self, text, sym):
        assert parse_symbol(text) == sym
        assert format_symbol(sym) == text

    @pytest.mark.parametrize("bad", ["", "zeta", "a", "e3", "es1", "tau2", "b1,2", "a-1"])
    def test_parse_symbol_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_symbol(bad)

    def test_word_round_trip(self):
        text = "tau a3 as3 e1,4 es1,4 rp0,5 rm2,6 b3"
        word = parse_word(text, 6)
        assert format_word(word) == text

    def test_parse_word_checks_ranges(self):
        with pytest.raises(ValueError):
            parse_word("a9", 4)

    def test_every_legal_symbol_round_trips(self):
        for sym in legal_symbols(6):
            assert parse_symbol(format_symbol(sym)) == sym


class TestExpansion:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_every_legal_symbol_expands_correctly(self, n):
        base = set(alphabet_iend(n))
        paut_base = set(alphabet_paut(n))
        for sym in legal_symbols(n):
            word = expand_symbol(sym, n)
            assert set(word.letters) <= base, (n, sym)
            if sym.kind != "b":
                assert set(word.letters) <= paut_base, (n, sym)
            assert eval_word(word) == make_generator(sym, n), (n, sym)

    def test_expand_word_concatenates(self):
        w = Word(5, (eps_star(1, 4), beta(4)))
        expanded = expand_word(w)
        assert set(expanded.letters) <= set(alphabet_iend(5))
        assert eval_word(expanded) == eval_word(w)

    def test_base_letters_expand_to_themselves(self):
        for n in (3, 5):
            for sym in alphabet_iend(n):
                assert expand_symbol(sym, n).letters == (sym,)

    def test_canonical_eps_star(self):
        assert canonical_eps_star(0, 7, 6) == tau()
        assert canonical_eps_star(0, 4, 6) == alpha_star(4)
        assert canonical_eps_star(2, 7, 6) == alpha(2)
        assert canonical_eps_star(2, 5, 6) == eps_star(2, 5)

    def test_expansion_needs_alphabets(self):
        with pytest.raises(ValueError):
            expand_symbol(tau(), 2)


@settings(max_examples=60)
@given(st.data())
def test_random_words_evaluate_homomorphically(data):
    n = data.draw(st.integers(min_value=3, max_value=7))
    pool = list(legal_symbols(n))
    letters = data.draw(st.lists(st.sampled_from(pool), max_size=8))
    word = Word(n, tuple(letters))
    by_parts = identity(n)
    for sym in letters:
        by_parts = compose(by_parts, make_generator(sym, n))
    assert eval_word(word) == by_parts
    expanded = expand_word(word)
    assert eval_word(expanded) == by_parts
