"""
Tests de piezas, condición C'(λ), pares trivializantes y umbrales explícitos.
El detector por hash se contrasta con la búsqueda por pares de ocurrencias.
"""

import sys, pathlib
import math

import numpy as np
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from oracles import c_prime_brute, max_pieces_brute

from domain.errors import DomainError
from domain.groups.models import Letter, RelatorSet, Word
from domain.groups.smallcancel import (
    PieceIndex, TrivializationIndex, find_trivializing_pair, max_piece_ratio, piece_phase_densities,
    satisfies_c_prime, symmetrize, thresholds,
)
from domain.groups.words import invert_bytes, iter_distinct_relators
from domain.models import SeedSpec

LAMBDAS = (1 / 6, 0.25, 0.3, 0.5, 0.7)


def _r(*texts, m=2):
    return RelatorSet.parse(list(texts), m)


def _random_sets(count, seed=4242):
    """Conjuntos de 2 a 5 relatores distintos de B_8 (longitud total ≤ 40)."""
    rng = np.random.default_rng(seed)
    for i in range(count):
        size = int(rng.integers(2, 6))
        m = int(rng.integers(2, 4))
        words = list(iter_distinct_relators(m, 8, size, SeedSpec(master_seed=seed, stream_index=i)))
        yield m, words


def test_single_letter_has_no_pieces():
    report = max_piece_ratio(_r("a", m=1))
    assert report.max_ratio == 0
    assert report.witness is None
    assert satisfies_c_prime(_r("a", m=1), 0.1).satisfied


def test_true_power_self_piece():
    report = max_piece_ratio(_r("abab"))
    assert report.per_relator[0].max_piece_length == 3
    assert report.max_ratio == pytest.approx(0.75)
    assert report.self_max_ratio == pytest.approx(0.75)
    assert report.witness is not None and len(report.witness.piece) == 3
    assert report.max_ratio >= (4 - 2) / 4


def test_cross_piece_between_two_relators():
    report = max_piece_ratio(_r("aab", "abb"))
    assert [p.max_piece_length for p in report.per_relator] == [2, 2]
    assert report.max_ratio == pytest.approx(2 / 3)
    assert report.cross_max_ratio == pytest.approx(2 / 3)


def test_c_prime_examples():
    assert satisfies_c_prime(_r("abab"), 0.8).satisfied
    verdict = satisfies_c_prime(_r("abab"), 0.75)
    assert not verdict.satisfied
    assert verdict.witness is not None
    assert not satisfies_c_prime(_r("aab", "abb"), 0.5).satisfied
    assert satisfies_c_prime(_r("aab", "abb"), 0.7).satisfied
    # un solo relator no tiene piezas cruzadas
    assert satisfies_c_prime(_r("abab"), 0.1, cross_only=True).satisfied


def test_lambda_out_of_range():
    with pytest.raises(DomainError):
        satisfies_c_prime(_r("ab"), 1.0)
    with pytest.raises(DomainError):
        PieceIndex(0.0)


def test_symmetrize_counts():
    entries = symmetrize(_r("aab", "abb"))
    assert len(entries) == 12
    words = {str(e.word) for e in entries if e.relator == 0}
    assert {"aab", "aba", "baa", "BAA", "AAB", "ABA"} == words
    assert all(len(e.word) == 3 for e in entries)


def test_piece_index_is_incremental():
    index = PieceIndex(0.5)
    assert index.add(Word.parse("ab", 2).to_bytes())
    assert index.need(10) == 5
    assert not index.add(Word.parse("abab", 2).to_bytes())
    assert not index.satisfied
    assert not index.add(Word.parse("b", 2).to_bytes())
    assert len(index) == 2
    assert index.verdict().witness is not None


def test_piece_lengths_match_brute_force():
    for m, words in _random_sets(1000):
        report = max_piece_ratio(words)
        assert [p.max_piece_length for p in report.per_relator] == max_pieces_brute(words)


def test_c_prime_matches_brute_force():
    for m, words in _random_sets(500, seed=99):
        relators = RelatorSet(m=m, relators=tuple(Word.from_bytes(w, m) for w in words))
        best = max_pieces_brute(words)
        best_cross = max_pieces_brute(words, cross_only=True)
        for lam in LAMBDAS:
            assert satisfies_c_prime(relators, lam).satisfied == c_prime_brute(words, lam, best=best)
            assert satisfies_c_prime(relators, lam, cross_only=True).satisfied == \
                c_prime_brute(words, lam, cross_only=True, best=best_cross)


def test_c_prime_monotone_in_lambda():
    for m, words in _random_sets(200, seed=7):
        relators = RelatorSet(m=m, relators=tuple(Word.from_bytes(w, m) for w in words))
        results = [satisfies_c_prime(relators, lam).satisfied for lam in sorted(LAMBDAS)]
        assert results == sorted(results)


def test_trivializing_pair():
    relators = _r("b", "ab")
    w = find_trivializing_pair(relators, "a")
    assert str(w) == "b"
    assert find_trivializing_pair(relators, Letter(generator=2)) is None
    with pytest.raises(DomainError):
        find_trivializing_pair(relators, "c")


def test_trivialization_index_matches_direct_search():
    for m, words in _random_sets(300, seed=11):
        relators = RelatorSet(m=m, relators=tuple(Word.from_bytes(w, m) for w in words))
        letters = [2 * g for g in range(m)]
        index = TrivializationIndex(letters)
        for w in words:
            index.add(w)
        direct = {x for x in letters if find_trivializing_pair(relators, x) is not None}
        assert set(index.witnesses) == direct


def test_trivialization_index_order_independent():
    a, b = Word.parse("b", 2).to_bytes(), Word.parse("ab", 2).to_bytes()
    for order in ([a, b], [b, a]):
        index = TrivializationIndex([0])
        done = [index.add(w) for w in order]
        assert done[-1]
        assert index.witnesses[0] == a


def test_thresholds_rank_two():
    t = thresholds(2)
    assert t.d_ao == pytest.approx(1 / (480 * math.log(4)))
    assert t.d_ao == pytest.approx(1.503e-3, rel=1e-3)
    assert t.mu == pytest.approx(0.160964, rel=1e-5)
    assert t.lam == pytest.approx(5.281e-3, rel=1e-3)
    assert t.lam_floor == pytest.approx(1 / (240 * math.log(4)))
    assert t.lambda_above_floor


@pytest.mark.parametrize("m", range(2, 11))
def test_thresholds_all_ranks(m):
    t = thresholds(m)
    assert t.lam > t.lam_floor
    assert t.ao_below_half_lambda
    assert t.ao_below_readable_gap
    assert thresholds(m, 0.001).mu < t.mu


def test_thresholds_errors():
    with pytest.raises(DomainError):
        thresholds(1)
    with pytest.raises(DomainError):
        thresholds(2, -0.1)
    with pytest.raises(DomainError):
        thresholds(2, 0.5)


def test_phase_densities():
    phase = piece_phase_densities(0.5, 0.1)
    assert phase.pair_margin == pytest.approx(0.1 / 4)
    assert phase.predicted_cprime is True
    assert piece_phase_densities(0.5, 0.4).predicted_cprime is False
    assert piece_phase_densities(0.5, 0.25).predicted_cprime is None
    assert phase.self_piece_words == pytest.approx(0.5)
    assert phase.piece_pairs == pytest.approx(0.75)


def test_trivializing_pair_soundness():
    for m, words in _random_sets(300, seed=23):
        relators = RelatorSet(m=m, relators=tuple(Word.from_bytes(w, m) for w in words))
        present = set(words)
        for code in range(2 * m):
            w = find_trivializing_pair(relators, code)
            if w is None:
                continue
            xw = Word.from_bytes(bytes([code]) + w.to_bytes(), m)
            assert w.to_bytes() in present
            assert xw.to_bytes() in present
            assert xw.cyclically_reduced


def test_piece_ratio_invariant_under_rotation_and_inverse():
    # el conjunto simetrizado no cambia al rotar o invertir un relator
    rng = np.random.default_rng(61)
    for m, words in _random_sets(400, seed=97):
        before = max_piece_ratio(words)
        i = int(rng.integers(len(words)))
        shift = int(rng.integers(len(words[i])))
        for variant in (words[i][shift:] + words[i][:shift], invert_bytes(words[i])):
            if variant in words[:i] + words[i + 1:]:
                continue
            after = max_piece_ratio(words[:i] + [variant] + words[i + 1:])
            assert after.max_ratio == before.max_ratio
            assert [p.max_piece_length for p in after.per_relator] == \
                [p.max_piece_length for p in before.per_relator]
