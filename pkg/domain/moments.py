"""
Fórmulas exactas de esperanza y varianza, y evaluadores de cotas de concentración.

Sirven como oráculos deterministas frente a las estimaciones Monte Carlo.
Las probabilidades de inclusión se calculan en log-espacio cuando r supera
``LOG_SPACE_MIN_R``; con ``exact=True`` todo se hace con ``Fraction``
(modo oráculo, n ≤ ``ORACLE_MAX_N``).

El denominador de la probabilidad de inclusión es el factorial descendente
estándar n(n−1)…(n−r+1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from domain.errors import DomainError
from domain.models import ExactMomentPair, MomentPair, SelfIntersectionProfile, universe_size
from domain.universe import floor_density_size
from settings import settings

Number = Union[float, Fraction]


def _check_exact_size(n: int) -> None:
    if n > settings.ORACLE_MAX_N:
        raise DomainError(f"El modo exacto admite n ≤ {settings.ORACLE_MAX_N} (n={n})")


def falling_factorial(x: int, r: int) -> int:
    """x(x−1)…(x−r+1); 0 si r > x."""
    if r < 0:
        raise DomainError(f"Orden negativo: {r}")
    if r > x:
        return 0
    return math.perm(x, r)


def uniform_inclusion_prob(n: int, k: int, r: int, exact: bool = False) -> Number:
    """Pr({x_1..x_r} ⊂ A) = Π_{i<r} (k−i)/(n−i) para A uniforme de cardinal k."""
    n = universe_size(n)
    if k < 0 or k > n:
        raise DomainError(f"Cardinal {k} fuera de [0, {n}]")
    if r < 0 or r > n:
        raise DomainError(f"Tamaño de tupla {r} fuera de [0, {n}]")
    if exact:
        _check_exact_size(n)
        return Fraction(falling_factorial(k, r), falling_factorial(n, r))
    if r > k:
        return 0.0
    if r == 0:
        return 1.0
    if r > settings.LOG_SPACE_MIN_R:
        logp = math.fsum(math.log(k - i) - math.log(n - i) for i in range(r))
        return math.exp(logp)
    p = 1.0
    for i in range(r):
        p *= (k - i) / (n - i)
    return p


def intersection_moments_uniform(n: int, k_a: int, k_b: int, exact: bool = False) -> "MomentPair | ExactMomentPair":
    """Momentos de |A∩B| para A, B uniformes independientes de cardinales k_a, k_b."""
    n = universe_size(n)
    for k in (k_a, k_b):
        if k < 0 or k > n:
            raise DomainError(f"Cardinal {k} fuera de [0, {n}]")
    mean = Fraction(k_a * k_b, n)
    variance = Fraction(k_a * k_b, n * n * (n - 1)) * (n * n - n * k_a - n * k_b + k_a * k_b)
    if exact:
        _check_exact_size(n)
        return ExactMomentPair(mean=mean, variance=variance)
    return MomentPair(mean=float(mean), variance=float(variance))


def bernoulli_moments(n: int, d: float) -> MomentPair:
    """E|A| = n^d y Var|A| = n·p(1−p) con p = n^{d−1}."""
    n = universe_size(n)
    if d > 1:
        raise DomainError(f"La densidad Bernoulli debe ser ≤ 1 (d={d})")
    p = 1.0 if d == 1 else float(n) ** (d - 1)
    return MomentPair(mean=n * p, variance=n * p * (1 - p))


def perm_invariant_moments(n: int, p1: Number, p2: Number) -> "MomentPair | ExactMomentPair":
    """E|A| = n·p1 y Var|A| = E|A| + n(n−1)·p2 − E|A|² para un modelo invariante."""
    n = universe_size(n)
    if not (0 <= p2 <= p1 <= 1):
        raise DomainError(f"Se requiere 0 ≤ p2 ≤ p1 ≤ 1 (p1={p1}, p2={p2})")
    mean = n * p1
    variance = mean + n * (n - 1) * p2 - mean * mean
    if isinstance(p1, Fraction) and isinstance(p2, Fraction):
        return ExactMomentPair(mean=mean, variance=variance)
    return MomentPair(mean=float(mean), variance=float(variance))


def _multidim_sum(profile: SelfIntersectionProfile, size_x: int, k: int, prob) -> tuple[Number, Number]:
    if profile.k != k:
        raise DomainError(f"El perfil es de aridad {profile.k}, no {k}")
    profile.check_consistent(size_x)
    pr_k = prob(k)
    mean = size_x * pr_k
    # Var = Σ_i |Y_i| (Pr_{2k−i} − Pr_k²); equivale a |X|²(Pr_2k − Pr_k²) + Σ |Y_i|(Pr_{2k−i} − Pr_2k)
    variance = sum(y * (prob(2 * k - i) - pr_k * pr_k) for i, y in enumerate(profile.sizes) if y)
    return mean, variance


def multidim_moments(
    profile: SelfIntersectionProfile, size_x: int, n: int, k_a: int, k: int, exact: bool = False,
) -> "MomentPair | ExactMomentPair":
    """Momentos de |A^{(k)} ∩ X| para A uniforme de cardinal k_a y X fijo con el perfil dado."""
    n = universe_size(n)

    def prob(r: int) -> Number:
        if r > n:
            return Fraction(0) if exact else 0.0
        return uniform_inclusion_prob(n, k_a, r, exact=exact)

    mean, variance = _multidim_sum(profile, size_x, k, prob)
    if exact:
        return ExactMomentPair(mean=mean, variance=variance)
    return MomentPair(mean=float(mean), variance=float(variance))


def multidim_moments_bernoulli(profile: SelfIntersectionProfile, size_x: int, n: int, d: float, k: int) -> MomentPair:
    """Versión Bernoulli: Pr_r = n^{r(d−1)}, así que Pr_2k = Pr_k² y el término en |X|² se anula."""
    n = universe_size(n)
    if d > 1:
        raise DomainError(f"La densidad Bernoulli debe ser ≤ 1 (d={d})")
    mean, variance = _multidim_sum(profile, size_x, k, lambda r: float(n) ** (r * (d - 1)))
    return MomentPair(mean=float(mean), variance=float(variance))


# ------------------------------------------------------------------
# Cotas de concentración
# ------------------------------------------------------------------

def _check_supercritical(alpha: float, beta: float) -> None:
    if not (0 <= alpha <= 1 and 0 <= beta <= 1):
        raise DomainError(f"Densidades fuera de [0,1] (α={alpha}, β={beta})")
    if alpha + beta <= 1:
        raise DomainError(f"La cota requiere α + β > 1 (α={alpha}, β={beta})")


def uniform_intersection_mean_bounds(n: int, alpha: float, beta: float) -> tuple[float, float]:
    """n^{α+β−1} − 2 ≤ E|A∩B| ≤ n^{α+β−1} (con cardinales ⌊n^α⌋, ⌊n^β⌋)."""
    n = universe_size(n)
    center = float(n) ** (alpha + beta - 1)
    return center - 2, center


def uniform_intersection_variance_bound(n: int, alpha: float, beta: float) -> float:
    """Var|A∩B| ≤ 3n^{α+β−1} para n ≥ 3."""
    n = universe_size(n)
    if n < 3:
        raise DomainError("La cota de varianza requiere n ≥ 3")
    return 3 * float(n) ** (alpha + beta - 1)


def uniform_tail_bound(n: int, alpha: float, beta: float, c: float) -> float:
    """Pr(||A∩B| − n^{α+β−1}| ≥ c·n^{α+β−1}) ≤ 12/(c²·n^{α+β−1})."""
    _check_supercritical(alpha, beta)
    if not 0 < c < 1:
        raise DomainError(f"c debe estar en (0,1) (c={c})")
    return 12.0 / (c * c * float(universe_size(n)) ** (alpha + beta - 1))


def uniform_tail_threshold(alpha: float, beta: float, c: float) -> float:
    """n mínimo, (4/c)^{1/(α+β−1)}, a partir del cual vale la cota de cola."""
    _check_supercritical(alpha, beta)
    if not 0 < c < 1:
        raise DomainError(f"c debe estar en (0,1) (c={c})")
    return (4.0 / c) ** (1.0 / (alpha + beta - 1))


def inclusion_threshold(k: int, epsilon: float) -> float:
    """(1+2k)^{1/ε}: n mínimo para el sándwich de probabilidades de inclusión."""
    if k < 1 or epsilon <= 0:
        raise DomainError(f"Se requiere k ≥ 1 y ε > 0 (k={k}, ε={epsilon})")
    return (1.0 + 2 * k) ** (1.0 / epsilon)


def inclusion_sandwich(n: int, d: float, epsilon: float, r: int) -> tuple[float, float]:
    """(n^{r(d−1−ε)}, n^{r(d−1+ε)})."""
    n = universe_size(n)
    if not 0 < epsilon < d <= 1:
        raise DomainError(f"Se requiere 0 < ε < d ≤ 1 (d={d}, ε={epsilon})")
    return float(n) ** (r * (d - 1 - epsilon)), float(n) ** (r * (d - 1 + epsilon))


def inclusion_gap_bound(n: int, d: float, epsilon: float, k: int) -> float:
    """Cota n^{2k(d−1+ε)−d} para Pr_{2k} − Pr_k² en el modelo uniforme."""
    n = universe_size(n)
    if not 0 < epsilon < d <= 1:
        raise DomainError(f"Se requiere 0 < ε < d ≤ 1 (d={d}, ε={epsilon})")
    return float(n) ** (2 * k * (d - 1 + epsilon) - d)


def check_inclusion_sandwich(n: int, d: float, epsilon: float, r: int) -> bool:
    """Verifica lo ≤ Pr_r ≤ hi con la probabilidad exacta para |A| = ⌊n^d⌋."""
    lo, hi = inclusion_sandwich(n, d, epsilon, r)
    p = uniform_inclusion_prob(n, floor_density_size(n, d), r)
    return lo <= p <= hi


def check_inclusion_gap(n: int, d: float, epsilon: float, k: int) -> bool:
    """Verifica |Pr_{2k} − Pr_k²| ≤ n^{2k(d−1+ε)−d} para |A| = ⌊n^d⌋."""
    k_a = floor_density_size(n, d)
    gap = uniform_inclusion_prob(n, k_a, 2 * k) - uniform_inclusion_prob(n, k_a, k) ** 2
    return abs(gap) <= inclusion_gap_bound(n, d, epsilon, k)


def bernoulli_concentration_bound(n: int, d: float) -> float:
    """Chebyshev: Pr(||A| − n^d| > n^d/2) ≤ 4n^d(1 − n^{d−1})/n^{2d}."""
    n = universe_size(n)
    if d > 1:
        raise DomainError(f"La densidad Bernoulli debe ser ≤ 1 (d={d})")
    nd = float(n) ** d
    return 4 * nd * (1 - float(n) ** (d - 1)) / (nd * nd)


def bernoulli_empty_probability(n: int, d: float) -> float:
    """Pr(A = Ø) = (1 − n^{d−1})^n; tiende a 1/e cuando d = 0."""
    n = universe_size(n)
    if d > 1:
        raise DomainError(f"La densidad Bernoulli debe ser ≤ 1 (d={d})")
    if d == 1:
        return 0.0
    p = float(n) ** (d - 1)
    return math.exp(n * math.log1p(-p))


def aux_intersection_threshold(alpha: float, beta: float, epsilon: float) -> float:
    """max{2^{3/ε}, 8^{1/(α+β−1−ε)}}: n mínimo del lema auxiliar de intersección uniforme."""
    _check_supercritical(alpha, beta)
    if not 0 < epsilon < alpha + beta - 1:
        raise DomainError(f"Se requiere 0 < ε < α + β − 1 (ε={epsilon})")
    return max(2.0 ** (3.0 / epsilon), 8.0 ** (1.0 / (alpha + beta - 1 - epsilon)))


def bound_evaluators(
    n: int,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    d: Optional[float] = None,
    epsilon: Optional[float] = None,
    r: Optional[int] = None,
    k: Optional[int] = None,
    c: Optional[float] = None,
) -> dict[str, object]:
    """
    Evalúa todas las cotas aplicables a los parámetros dados.

    Devuelve un dict plano (apto para JSON) con los valores de las cotas, los
    n mínimos de cada lema y los chequeos sobre las probabilidades exactas.
    """
    out: dict[str, object] = {"n": n}
    if alpha is not None and beta is not None:
        k_a, k_b = floor_density_size(n, alpha), floor_density_size(n, beta)
        exact = intersection_moments_uniform(n, k_a, k_b)
        lo, hi = uniform_intersection_mean_bounds(n, alpha, beta)
        out.update(
            k_a=k_a, k_b=k_b, mean=exact.mean, variance=exact.variance,
            mean_lower=lo, mean_upper=hi,
        )
        if n >= 3:
            out["variance_bound"] = uniform_intersection_variance_bound(n, alpha, beta)
        if alpha + beta > 1 and c is not None:
            out["tail_bound"] = uniform_tail_bound(n, alpha, beta, c)
            out["tail_threshold"] = uniform_tail_threshold(alpha, beta, c)
        if alpha + beta > 1 and epsilon is not None and epsilon < alpha + beta - 1:
            out["aux_threshold"] = aux_intersection_threshold(alpha, beta, epsilon)
    if d is not None:
        out.update(bernoulli_concentration=bernoulli_concentration_bound(n, d),
                   bernoulli_empty=bernoulli_empty_probability(n, d))
        if epsilon is not None and 0 < epsilon < d:
            if r is not None:
                lo, hi = inclusion_sandwich(n, d, epsilon, r)
                out.update(sandwich_lower=lo, sandwich_upper=hi,
                           inclusion_prob=uniform_inclusion_prob(n, floor_density_size(n, d), r),
                           sandwich_holds=check_inclusion_sandwich(n, d, epsilon, r))
            if k is not None:
                out.update(inclusion_threshold=inclusion_threshold(k, epsilon),
                           gap_bound=inclusion_gap_bound(n, d, epsilon, k),
                           gap_holds=check_inclusion_gap(n, d, epsilon, k))
    return out
