"""
Oráculos por fuerza bruta para los tests.
Enumeran exhaustivamente universos pequeños con aritmética racional; no
forman parte de la biblioteca.
"""

import sys
import pathlib
from fractions import Fraction
from itertools import combinations, product

ROOT = pathlib.Path(__file__).resolve().parents[1]   # carpeta del proyecto
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))


def _moments(values, weight):
    mean = sum(v * weight for v in values)
    second = sum(v * v * weight for v in values)
    return mean, second - mean * mean


def intersection_moments_all_pairs(n, k_a, k_b):
    """E y Var de |A∩B| enumerando todos los pares (A, B) de k_a y k_b subconjuntos."""
    subsets_a = [set(c) for c in combinations(range(n), k_a)]
    subsets_b = [set(c) for c in combinations(range(n), k_b)]
    weight = Fraction(1, len(subsets_a) * len(subsets_b))
    return _moments([len(a & b) for a in subsets_a for b in subsets_b], weight)


def intersection_moments_fixed_a(n, k_a, k_b):
    """Igual que el anterior fijando A = {0..k_a−1}: la ley de B es invariante por permutación."""
    a = set(range(k_a))
    subsets_b = list(combinations(range(n), k_b))
    weight = Fraction(1, len(subsets_b))
    return _moments([len(a.intersection(b)) for b in subsets_b], weight)


def multidim_moments_brute(n, k_a, tuples):
    """E y Var de |A^{(k)} ∩ X| sobre todos los k_a-subconjuntos A."""
    subsets = [set(c) for c in combinations(range(n), k_a)]
    weight = Fraction(1, len(subsets))
    counts = [sum(1 for t in tuples if set(t) <= a) for a in subsets]
    return _moments(counts, weight)


def profile_brute(tuples, k):
    """|Y_i| recorriendo X² y contando elementos compartidos entre los conjuntos de entradas."""
    sizes = [0] * (k + 1)
    sets = [set(t) for t in tuples]
    for x in sets:
        for y in sets:
            sizes[len(x & y)] += 1
    return tuple(sizes)


def cyclic_count_brute(m, t):
    """|S_t| filtrando todas las secuencias de 2m letras."""
    count = 0
    for word in product(range(2 * m), repeat=t):
        if any(a == b ^ 1 for a, b in zip(word, word[1:])):
            continue
        if t >= 2 and word[-1] == word[0] ^ 1:
            continue
        count += 1
    return count


def true_power_count_brute(m, t):
    count = 0
    for word in product(range(2 * m), repeat=t):
        if any(a == b ^ 1 for a, b in zip(word, word[1:])) or (t >= 2 and word[-1] == word[0] ^ 1):
            continue
        if any(t % p == 0 and p < t and word == word[:p] * (t // p) for p in range(1, t)):
            count += 1
    return count


def _all_windows(words, length):
    """Todas las ocurrencias (relator, desplazamiento, orientación, contenido) de una longitud dada."""
    out = []
    for rid, w in enumerate(words):
        n = len(w)
        if n < length:
            continue
        inverse = [x ^ 1 for x in reversed(w)]
        for i in range(n):
            out.append((rid, i, 1, tuple(w[(i + j) % n] for j in range(length))))
        for j in range(n):
            out.append((rid, (n - j - length) % n, -1, tuple(inverse[(j + s) % n] for s in range(length))))
    return out


def max_pieces_brute(words, cross_only=False):
    """Longitud de la pieza más larga alojada en cada relator, comparando todos los pares de ocurrencias."""
    words = [list(w) for w in words]
    sizes = [len(w) for w in words]
    best = [0] * len(words)
    for length in range(1, max(sizes, default=0) + 1):
        occ = _all_windows(words, length)
        for i in range(len(occ)):
            for j in range(i + 1, len(occ)):
                a, b = occ[i], occ[j]
                if a[3] != b[3]:
                    continue
                if a[0] == b[0] and (cross_only or a[1] == b[1]):
                    continue
                if length == sizes[a[0]] == sizes[b[0]]:
                    continue
                best[a[0]] = max(best[a[0]], length)
                best[b[0]] = max(best[b[0]], length)
    return best


def c_prime_brute(words, lam, cross_only=False, best=None):
    """C'(λ) por relator; ``best`` reutiliza un resultado previo de max_pieces_brute."""
    lam = Fraction(lam).limit_denominator(10**9)
    if best is None:
        best = max_pieces_brute(words, cross_only=cross_only)
    return all(b < lam * len(w) for b, w in zip(best, words))
