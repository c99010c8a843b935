"""
Palabras del grupo libre: reducción, reducción cíclica, conteo exacto,
enumeración, muestreo uniforme de palabras cíclicamente reducidas y
detección de potencias propias.

Internamente las palabras viajan como ``bytes`` (una letra por byte) en los
bucles calientes; ``Word`` es la forma validada de cara al usuario.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from domain.errors import DomainError
from domain.groups.models import Word, WordCountTable
from domain.samplers import RandomSource, generator_for
from settings import settings

log = logging.getLogger("words")

INVERSE_TABLE = bytes(i ^ 1 for i in range(256))
ENUMERATION_LIMIT = 10**6


def invert_bytes(word: bytes) -> bytes:
    """Inverso de una palabra codificada: orden invertido y cada letra XOR 1."""
    return word[::-1].translate(INVERSE_TABLE)


def parse_word(text: str, m: int) -> Word:
    return Word.parse(text, m)


# ------------------------------------------------------------------
# Formas normales
# ------------------------------------------------------------------

def free_reduce(letters: Union[Word, Iterable[int]], m: int | None = None) -> Word:
    """Cancela pares adyacentes x·x⁻¹ con una pila; forma normal única."""
    if isinstance(letters, Word):
        m = letters.m
        letters = letters.letters
    if m is None:
        raise DomainError("free_reduce necesita el rango m para una secuencia de letras")
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return Word(m=m, letters=tuple(stack))


def cyclic_reduce(word: Word) -> Word:
    """Reduce y luego quita pares extremos (primera, última) que se cancelan."""
    letters = free_reduce(word).letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == letters[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    return Word(m=word.m, letters=letters[lo:hi])


def is_true_power(word: Union[Word, bytes]) -> bool:
    """w = u^k con k ≥ 2, vía el período mínimo de la función de fallo (KMP)."""
    letters = word.letters if isinstance(word, Word) else word
    n = len(letters)
    if n == 0:
        raise DomainError("La palabra vacía no tiene período")
    fail = [0] * n
    j = 0
    for i in range(1, n):
        while j and letters[i] != letters[j]:
            j = fail[j - 1]
        if letters[i] == letters[j]:
            j += 1
        fail[i] = j
    period = n - fail[-1]
    return period < n and n % period == 0


# ------------------------------------------------------------------
# Conteo exacto
# ------------------------------------------------------------------

@lru_cache(maxsize=64)
def _cyclic_counts(m: int, ell: int) -> tuple[int, ...]:
    size = 2 * m
    letters = np.arange(size)
    # transición permitida a → b salvo b = a⁻¹
    step = (letters[None, :] != (letters[:, None] ^ 1)).astype(np.int64).astype(object)
    closing = step.copy()
    counts = [size]
    paths = step.copy()
    for _ in range(2, ell + 1):
        # paths[f, c] = palabras reducidas de longitud t que empiezan en f y terminan en c
        counts.append(int((paths * closing).sum()))
        paths = paths.dot(step)
    return tuple(counts[:ell])


def count_cyclically_reduced(m: int, ell: int) -> WordCountTable:
    """|S_t| por matriz de transferencia sobre estados (primera letra, letra actual)."""
    if m < 1 or ell < 1:
        raise DomainError(f"Se requiere m ≥ 1 y ℓ ≥ 1 (m={m}, ℓ={ell})")
    counts = _cyclic_counts(m, ell)
    cumulative, total = [], 0
    for s in counts:
        total += s
        cumulative.append(total)
    return WordCountTable(m=m, ell=ell, counts_exact=counts, cumulative=tuple(cumulative))


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def count_true_powers(m: int, t: int) -> int:
    """Potencias propias en S_t: |S_t| − Σ_{e|t} μ(t/e)|S_e| (raíces primitivas)."""
    counts = count_cyclically_reduced(m, t).counts_exact
    primitive = sum(_mobius(t // e) * counts[e - 1] for e in range(1, t + 1) if t % e == 0)
    return counts[t - 1] - primitive


# ------------------------------------------------------------------
# Enumeración
# ------------------------------------------------------------------

def _enumerate_bytes(m: int, t: int) -> Iterator[bytes]:
    size = 2 * m
    word = [0] * t

    def extend(pos: int) -> Iterator[bytes]:
        if pos == t:
            if t < 2 or word[-1] != word[0] ^ 1:
                yield bytes(word)
            return
        for x in range(size):
            if pos and x == word[pos - 1] ^ 1:
                continue
            word[pos] = x
            yield from extend(pos + 1)

    yield from extend(0)


def enumerate_cyclically_reduced(m: int, t: int) -> Iterator[Word]:
    """Palabras de S_t en orden lexicográfico de códigos de letra."""
    if m < 1 or t < 1:
        raise DomainError(f"Se requiere m ≥ 1 y t ≥ 1 (m={m}, t={t})")
    for data in _enumerate_bytes(m, t):
        yield Word.from_bytes(data, m)


# ------------------------------------------------------------------
# Muestreo uniforme sobre B_ℓ
# ------------------------------------------------------------------

class WordSampler:
    """
    Muestreo uniforme sobre B_ℓ por lotes vectorizados.

    Longitud t con probabilidad |S_t|/|B_ℓ|; luego una palabra reducida
    uniforme de longitud t (siguiente = inv(anterior) + 1 + r mod 2m, con
    r uniforme en [0, 2m−2]) rechazando las que no son cíclicamente
    reducidas, repitiendo sólo las posiciones rechazadas.
    """

    def __init__(self, m: int, ell: int, seed: RandomSource, batch: int | None = None):
        if m < 1 or ell < 1:
            raise DomainError(f"Se requiere m ≥ 1 y ℓ ≥ 1 (m={m}, ℓ={ell})")
        self.m = m
        self.ell = ell
        self.batch = batch or settings.SAMPLER_BATCH
        self._rng = generator_for(seed)
        table = count_cyclically_reduced(m, ell)
        probs = np.array([float(Fraction(s, table.total)) for s in table.counts_exact])
        self._probs = probs / probs.sum()
        self.drawn = 0
        self.accepted = 0

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.drawn if self.drawn else 1.0

    def _reduced_rows(self, t: int, size: int) -> np.ndarray:
        modulus = 2 * self.m
        rows = np.empty((size, t), dtype=np.int16)
        rows[:, 0] = self._rng.integers(0, modulus, size=size)
        if t > 1:
            steps = self._rng.integers(0, modulus - 1, size=(size, t - 1))
            for j in range(1, t):
                rows[:, j] = ((rows[:, j - 1] ^ 1) + 1 + steps[:, j - 1]) % modulus
        return rows

    def _cyclic_rows(self, t: int, size: int) -> np.ndarray:
        out = np.empty((size, t), dtype=np.int16)
        filled = 0
        while filled < size:
            rows = self._reduced_rows(t, size - filled)
            self.drawn += rows.shape[0]
            if t > 1:
                rows = rows[rows[:, -1] != (rows[:, 0] ^ 1)]
            self.accepted += rows.shape[0]
            out[filled:filled + rows.shape[0]] = rows
            filled += rows.shape[0]
        return out

    def draw(self, size: int | None = None) -> list[bytes]:
        size = size or self.batch
        lengths = self._rng.choice(self.ell, size=size, p=self._probs) + 1
        out: list[bytes] = [b""] * size
        for t in np.unique(lengths):
            positions = np.flatnonzero(lengths == t)
            rows = self._cyclic_rows(int(t), positions.size).astype(np.uint8)
            for pos, row in zip(positions.tolist(), rows):
                out[pos] = row.tobytes()
        return out

    def __iter__(self) -> Iterator[bytes]:
        while True:
            yield from self.draw()


def sample_cyclically_reduced(m: int, ell_max: int, seed: RandomSource) -> Word:
    """Una palabra uniforme de B_{ℓ_max}."""
    return Word.from_bytes(WordSampler(m, ell_max, seed, batch=1).draw(1)[0], m)


def iter_uniform_words(m: int, ell: int, seed: RandomSource) -> Iterator[bytes]:
    """Flujo infinito de palabras i.i.d. uniformes en B_ℓ (como bytes)."""
    return iter(WordSampler(m, ell, seed))


def iter_distinct_relators(m: int, ell: int, count: int, seed: RandomSource) -> Iterator[bytes]:
    """
    Subconjunto uniforme de B_ℓ de tamaño ``count``, en orden de sorteo.

    Sin reemplazo: se descartan repetidos. Si count supera la mitad de un
    B_ℓ pequeño se enumera B_ℓ completo y se toma un prefijo de una
    permutación aleatoria.
    """
    rng = generator_for(seed)
    total = count_cyclically_reduced(m, ell).total
    if count > total:
        raise DomainError(f"No hay {count} palabras distintas en B_{ell} (|B_ℓ|={total})")
    if 2 * count > total and total <= ENUMERATION_LIMIT:
        universe = [w for t in range(1, ell + 1) for w in _enumerate_bytes(m, t)]
        for i in rng.permutation(total)[:count].tolist():
            yield universe[i]
        return
    seen: set[bytes] = set()
    for word in iter_uniform_words(m, ell, rng):
        if word in seen:
            continue
        seen.add(word)
        yield word
        if len(seen) == count:
            return
