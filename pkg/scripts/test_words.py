"""
Tests de palabras del grupo libre: reducción, conteo exacto, enumeración y
muestreo uniforme.
"""

import sys, pathlib
from collections import Counter

import numpy as np
import pytest
from scipy.stats import chisquare

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from oracles import cyclic_count_brute, true_power_count_brute

from domain.errors import DomainError
from domain.groups.models import Letter, RelatorSet, Word
from domain.groups.words import (
    WordSampler, count_cyclically_reduced, count_true_powers, cyclic_reduce, enumerate_cyclically_reduced,
    free_reduce, invert_bytes, is_true_power, iter_distinct_relators, iter_uniform_words, parse_word,
    sample_cyclically_reduced,
)
from domain.models import SeedSpec


def _seed(stream=0):
    return SeedSpec(master_seed=777, stream_index=stream)


def test_letters_and_parsing():
    assert Letter.parse("b").code == 2
    assert Letter.parse("B").code == 3
    assert str(Letter(generator=1, sign=-1)) == "A"
    assert Letter.parse("a").inverse() == Letter(generator=1, sign=-1)
    assert str(parse_word("abAB", 2)) == "abAB"
    with pytest.raises(DomainError):
        parse_word("abc", 2)
    with pytest.raises(DomainError):
        parse_word("a1", 2)


def test_free_reduce_examples():
    assert str(free_reduce(parse_word("abBA", 2))) == ""
    assert str(free_reduce(parse_word("aabBc", 3))) == "aac"
    assert str(free_reduce(parse_word("abBAb", 2))) == "b"
    with pytest.raises(DomainError):
        free_reduce([0, 1])


def test_cyclic_reduce_examples():
    assert str(cyclic_reduce(parse_word("abA", 2))) == "b"
    assert str(cyclic_reduce(parse_word("abaBA", 2))) == "a"
    assert str(cyclic_reduce(parse_word("ab", 2))) == "ab"
    assert cyclic_reduce(parse_word("aA", 2)).letters == ()


def test_word_flags_and_inverse():
    w = parse_word("abB", 2)
    assert not w.freely_reduced
    assert parse_word("aba", 2).freely_reduced
    assert not parse_word("abA", 2).cyclically_reduced
    assert str(parse_word("abC", 3).inverse()) == "cBA"
    assert invert_bytes(bytes([0, 2, 5])) == bytes([4, 3, 1])


@pytest.mark.parametrize("m,t_max", [(2, 8), (3, 5)])
def test_counts_match_brute_force(m, t_max):
    table = count_cyclically_reduced(m, t_max)
    assert list(table.counts_exact) == [cyclic_count_brute(m, t) for t in range(1, t_max + 1)]
    assert table.sandwich_holds()


def test_count_table_example():
    table = count_cyclically_reduced(2, 3)
    assert table.counts_exact == (4, 12, 28)
    assert table.cumulative == (4, 16, 44)
    assert table.total == 44


def test_sandwich_large_lengths():
    for m in (2, 3, 5):
        assert count_cyclically_reduced(m, 60).sandwich_holds()
    with pytest.raises(DomainError):
        count_cyclically_reduced(0, 3)


def test_true_powers():
    assert is_true_power(parse_word("abab", 2))
    assert is_true_power(parse_word("aaa", 2))
    assert not is_true_power(parse_word("aba", 2))
    assert not is_true_power(parse_word("a", 2))
    for m, t_max in ((2, 8), (3, 4)):
        for t in range(1, t_max + 1):
            assert count_true_powers(m, t) == true_power_count_brute(m, t)


def test_enumeration_order_and_size():
    words = list(enumerate_cyclically_reduced(2, 3))
    assert len(words) == 28
    assert all(w.cyclically_reduced for w in words)
    codes = [w.letters for w in words]
    assert codes == sorted(codes)
    assert len(set(codes)) == 28


def test_sampler_uniform_over_ball():
    # B_3 con m = 2 tiene 44 palabras
    sampler = WordSampler(2, 3, _seed(), batch=5000)
    freq = Counter()
    while sum(freq.values()) < 10**5:
        freq.update(sampler.draw())
    assert len(freq) == 44
    assert chisquare(list(freq.values())).pvalue > 0.01
    assert sampler.acceptance_rate >= 2 / 3 - 0.02


def test_sampler_length_distribution():
    sampler = WordSampler(2, 3, _seed(1), batch=10**4)
    lengths = Counter(len(w) for w in sampler.draw())
    draws = 10**4
    for t, expected in ((1, 4 / 44), (2, 12 / 44), (3, 28 / 44)):
        sigma = (expected * (1 - expected) / draws) ** 0.5
        assert abs(lengths[t] / draws - expected) < 4 * sigma


def test_sampled_words_are_cyclically_reduced():
    for t in range(50):
        w = sample_cyclically_reduced(3, 12, _seed(t))
        assert 1 <= len(w) <= 12
        assert w.cyclically_reduced


def test_distinct_relators():
    words = list(iter_distinct_relators(2, 10, 500, _seed()))
    assert len(words) == len(set(words)) == 500
    # más de la mitad de B_3: enumeración y permutación
    small = list(iter_distinct_relators(2, 3, 40, _seed()))
    assert len(set(small)) == 40
    assert list(iter_distinct_relators(2, 3, 40, _seed())) == small
    with pytest.raises(DomainError):
        list(iter_distinct_relators(2, 3, 45, _seed()))
    presentation = RelatorSet(m=2, relators=tuple(Word.from_bytes(w, 2) for w in small))
    assert len(presentation.relators) == 40


def test_relator_set_validation():
    with pytest.raises(ValueError):
        RelatorSet.parse(["ab", "ab"], 2)
    with pytest.raises(ValueError):
        RelatorSet.parse(["abA"], 2)
    with pytest.raises(ValueError):
        RelatorSet(m=2, relators=(Word(m=2, letters=()),))


def test_free_reduce_idempotent_and_shortening():
    rng = np.random.default_rng(8)
    for _ in range(300):
        letters = rng.integers(0, 6, size=int(rng.integers(0, 20))).tolist()
        once = free_reduce(letters, 3)
        assert free_reduce(once) == once
        assert len(once) <= len(letters)
        assert once.freely_reduced
        assert len(cyclic_reduce(once)) <= len(once)


def test_cyclic_reduce_invariant_under_rotation():
    # rotar es conjugar: la forma cíclicamente reducida sólo cambia por una rotación
    rng = np.random.default_rng(19)
    for _ in range(200):
        letters = rng.integers(0, 4, size=int(rng.integers(1, 16))).tolist()
        base = cyclic_reduce(free_reduce(letters, 2)).to_bytes()
        for shift in range(len(letters)):
            rotated = cyclic_reduce(free_reduce(letters[shift:] + letters[:shift], 2)).to_bytes()
            assert len(rotated) == len(base)
            assert rotated in base + base


def test_uniform_word_stream():
    # B_2 con m = 2: 4 + 12 palabras, misma semilla, mismo flujo
    stream = iter_uniform_words(2, 2, _seed(4))
    words = [next(stream) for _ in range(16000)]
    again = iter_uniform_words(2, 2, _seed(4))
    assert [next(again) for _ in range(100)] == words[:100]
    freq = Counter(words)
    assert len(freq) == 16
    assert all(Word.from_bytes(w, 2).cyclically_reduced for w in freq)
    assert chisquare(list(freq.values())).pvalue > 0.01
