"""
Tests de los muestreadores con semilla.
Las pruebas estadísticas usan flujos fijos, así que son deterministas.
"""

import sys, pathlib
import math
from collections import Counter
from itertools import combinations

import numpy as np
import pytest
from scipy.stats import chisquare, ks_2samp

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))

from domain.errors import DomainError
from domain.models import CardinalityLaw, SeedSpec
from domain.moments import bernoulli_concentration_bound
from domain.samplers import (
    generator_for, law_for_model, sample_bernoulli, sample_function_image, sample_model,
    sample_perm_invariant, sample_uniform, uniform_indices,
)


def _seed(stream):
    return SeedSpec(master_seed=12345, stream_index=stream)


def test_seed_entropy_words():
    seed = SeedSpec.for_trial(1, 2, 3)
    assert seed.stream_index == (2 << 32) + 3
    assert seed.entropy_words() == [1, 0, 3, 2]
    big = SeedSpec(master_seed=2**40 + 5, stream_index=0)
    assert big.entropy_words() == [5, 2**8, 0, 0]


def test_same_seed_same_sample():
    a = sample_uniform(1000, 50, _seed(7))
    b = sample_uniform(1000, 50, _seed(7))
    c = sample_uniform(1000, 50, _seed(8))
    assert a == b
    assert a != c
    assert sample_bernoulli(10**5, 0.5, _seed(1)) == sample_bernoulli(10**5, 0.5, _seed(1))


def test_uniform_extremes():
    assert sample_uniform(10, 0, _seed(0)).cardinality == 0
    full = sample_uniform(10, 10, _seed(0))
    assert list(full.members) == list(range(10))
    with pytest.raises(DomainError):
        sample_uniform(10, 11, _seed(0))


def test_uniform_cardinality_and_order():
    for k in (1, 3, 40, 60, 99):
        s = sample_uniform(100, k, _seed(k))
        assert s.cardinality == k
        assert np.all(np.diff(s.members) > 0)


def test_uniform_subsets_equally_likely():
    # C(6,3) = 20 subconjuntos
    rng = generator_for(_seed(99))
    draws = 20000
    freq = Counter(tuple(uniform_indices(rng, 6, 3).tolist()) for _ in range(draws))
    assert set(freq) == set(combinations(range(6), 3))
    observed = [freq[c] for c in combinations(range(6), 3)]
    assert chisquare(observed).pvalue > 0.001


def test_uniform_complement_branch_equally_likely():
    rng = generator_for(_seed(100))
    freq = Counter(tuple(uniform_indices(rng, 5, 4).tolist()) for _ in range(10000))
    assert len(freq) == 5
    assert chisquare(list(freq.values())).pvalue > 0.001


@pytest.mark.parametrize("n,d", [(10**4, 0.5), (2000, 0.9)])
def test_bernoulli_cardinality_moments(n, d):
    # d = 0.5 usa saltos geométricos (p = 0.01); d = 0.9 la máscara
    p = float(n) ** (d - 1)
    trials = 2000
    sizes = np.array([sample_bernoulli(n, d, _seed(t)).cardinality for t in range(trials)])
    sd = math.sqrt(n * p * (1 - p) / trials)
    assert abs(sizes.mean() - n * p) < 4 * sd
    assert sizes.var(ddof=1) == pytest.approx(n * p * (1 - p), rel=0.15)


def test_bernoulli_cardinality_matches_binomial_law():
    # mismo n y p: los cardinales de las muestras contra sorteos binomiales directos
    n, d, trials = 5000, 0.6, 1500
    p = float(n) ** (d - 1)
    sizes = [sample_bernoulli(n, d, _seed(10**5 + t)).cardinality for t in range(trials)]
    reference = np.random.default_rng(31).binomial(n, p, size=trials)
    assert ks_2samp(sizes, reference).pvalue > 0.001


def test_bernoulli_equals_perm_invariant_with_binomial_law():
    # Bernoulli(p) y la mezcla con ley Binomial(n, p) tienen la misma ley de |A|
    n, d, trials = 2000, 0.6, 1500
    law = CardinalityLaw.binomial(n, float(n) ** (d - 1))
    bern = [sample_bernoulli(n, d, _seed(2 * 10**5 + t)).cardinality for t in range(trials)]
    mixed = [sample_perm_invariant(n, law, _seed(3 * 10**5 + t)).cardinality for t in range(trials)]
    assert ks_2samp(bern, mixed).pvalue > 0.01


def test_bernoulli_concentration_at_ten_thousand():
    n, d, trials = 10**4, 0.7, 1000
    target = float(n) ** d
    within = sum(
        abs(sample_bernoulli(n, d, _seed(4 * 10**5 + t)).cardinality - target) <= target / 2
        for t in range(trials)
    )
    bound = bernoulli_concentration_bound(n, d)
    assert bound <= 4 * float(n) ** (-d)
    assert within / trials >= 1 - bound * 1.1


@pytest.mark.parametrize("label", ["perm_invariant", "function_image"])
def test_per_element_inclusion_is_uniform(label):
    n, trials = 40, 10**4
    law = CardinalityLaw.mixture(n, {5: 0.3, 12: 0.5, 30: 0.2})
    counts = np.zeros(n, dtype=np.int64)
    for t in range(trials):
        if label == "perm_invariant":
            sample = sample_perm_invariant(n, law, _seed(5 * 10**5 + t))
        else:
            sample = sample_function_image(15, n, _seed(6 * 10**5 + t))
        counts[sample.members] += 1
    assert chisquare(counts).pvalue > 0.01


def test_explicit_two_point_law_inclusion_half():
    # |A| ∈ {2, 4} con probabilidad 1/2 cada uno sobre n = 6: Pr(x ∈ A) = (2/6 + 4/6) / 2
    n, trials = 6, 10**4
    law = CardinalityLaw.mixture(n, {2: 0.5, 4: 0.5})
    counts = np.zeros(n, dtype=np.int64)
    for t in range(trials):
        counts[sample_perm_invariant(n, law, _seed(7 * 10**5 + t)).members] += 1
    freqs = counts / trials
    assert np.all(np.abs(freqs - 0.5) <= 0.02)


def test_function_image_single_point_quarter():
    # f: {1,2} → {0..3}; |imagen| = 1 sii f(1) = f(2), probabilidad 1/4
    trials = 10**4
    singles = sum(sample_function_image(2, 4, _seed(8 * 10**5 + t)).cardinality == 1 for t in range(trials))
    assert singles / trials == pytest.approx(0.25, abs=0.02)


def test_bernoulli_elements_independent_of_position():
    n, d, trials = 20, 0.5, 5000
    counts = np.zeros(n)
    for t in range(trials):
        counts[sample_bernoulli(n, d, _seed(t)).members] += 1
    p = float(n) ** (d - 1)
    sd = math.sqrt(p * (1 - p) / trials)
    assert np.all(np.abs(counts / trials - p) < 5 * sd)


def test_bernoulli_full_density():
    assert sample_bernoulli(50, 1.0, _seed(0)).cardinality == 50
    with pytest.raises(DomainError):
        sample_bernoulli(50, 1.5, _seed(0))


def test_perm_invariant_mixture():
    n = 100
    law = CardinalityLaw.mixture(n, {10: 0.5, 40: 0.5})
    sizes = Counter(sample_perm_invariant(n, law, _seed(t)).cardinality for t in range(4000))
    assert set(sizes) == {10, 40}
    assert abs(sizes[10] / 4000 - 0.5) < 4 * math.sqrt(0.25 / 4000)


def test_perm_invariant_universe_mismatch():
    with pytest.raises(DomainError):
        sample_perm_invariant(50, CardinalityLaw.point_mass(40, 3), _seed(0))


def test_law_validation():
    with pytest.raises(ValueError):
        CardinalityLaw.point_mass(10, 11)
    with pytest.raises(ValueError):
        CardinalityLaw.explicit([0.5, 0.4])
    assert CardinalityLaw.binomial(10, 0.3).mean() == pytest.approx(3.0)
    assert CardinalityLaw.explicit([0.25, 0.5, 0.25]).mean() == pytest.approx(1.0)


def test_function_image_inclusion_probability():
    # un solo valor sobre E_4: cada punto con probabilidad 1/4
    trials = 8000
    hits = sum(0 in sample_function_image(1, 4, _seed(t)) for t in range(trials))
    assert abs(hits / trials - 0.25) < 4 * math.sqrt(0.25 * 0.75 / trials)


def test_function_image_size():
    n, m, trials = 50, 30, 2000
    expected = n * (1 - (1 - 1 / n) ** m)
    sizes = [sample_function_image(m, n, _seed(t)).cardinality for t in range(trials)]
    assert np.mean(sizes) == pytest.approx(expected, rel=0.02)
    with pytest.raises(DomainError):
        sample_function_image(0, n, _seed(0))


def test_sample_model_dispatch():
    n = 10**4
    assert sample_model("uniform", n, 0.75, _seed(0)).cardinality == 1000
    sizes = {sample_model("mixture", n, 0.5, _seed(t)).cardinality for t in range(50)}
    assert sizes == {100, 50}
    assert law_for_model("bernoulli", n, 0.5).p == pytest.approx(0.01)
    with pytest.raises(DomainError):
        law_for_model("function_image", n, 0.5)
