"""
Conjuntos simetrizados, detección de piezas, veredictos C'(λ), testigos de
trivialización y umbrales explícitos de densidad.

Ocurrencias: (relator, desplazamiento, orientación). Una ventana de la
orientación inversa se ubica por el desplazamiento de su lectura directa.
Dos ocurrencias de la misma subpalabra forman una pieza si:
- difieren como ternas,
- no son la misma ubicación leída en las dos orientaciones,
- no son ambas ventanas completas de relatores de igual longitud (una
  misma palabra cíclica es un solo elemento del conjunto simetrizado).
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Union

from domain.errors import DomainError
from domain.groups.models import (
    CPrimeVerdict, Letter, Occurrence, PhaseDensities, PieceReport, PieceWitness, RelatorPieces,
    RelatorSet, SymmetrizedEntry, Thresholds, Word,
)
from domain.groups.words import invert_bytes

log = logging.getLogger("smallcancel")

Occ = tuple[int, int, int]
CRITICAL_TOL = 1e-9


def _to_string(data: bytes) -> str:
    return str(Word.from_bytes(data, 26))


def _windows(word: bytes, length: int) -> Iterator[tuple[int, int, bytes]]:
    """(desplazamiento, orientación, ventana) para las 2|r| ventanas cíclicas de la longitud dada."""
    n = len(word)
    doubled = word + word
    inverse = invert_bytes(word)
    doubled_inverse = inverse + inverse
    for i in range(n):
        yield i, 1, doubled[i:i + length]
    for j in range(n):
        yield (n - j - length) % n, -1, doubled_inverse[j:j + length]


def _is_piece_pair(a: Occ, b: Occ, length: int, sizes: list[int]) -> bool:
    if a == b:
        return False
    if a[0] == b[0] and a[1] == b[1]:
        return False
    return not (length == sizes[a[0]] == sizes[b[0]])


def _occurrence(o: Occ) -> Occurrence:
    return Occurrence(relator=o[0], offset=o[1], orientation=o[2])


def symmetrize(relators: RelatorSet) -> list[SymmetrizedEntry]:
    """Todas las rotaciones de cada relator y de su inverso, con su origen."""
    out = []
    for rid, r in enumerate(relators.relators):
        data = r.to_bytes()
        n = len(data)
        for offset, orientation, window in _windows(data, n):
            out.append(SymmetrizedEntry(
                word=Word.from_bytes(window, relators.m), relator=rid,
                rotation=offset, orientation=orientation,
            ))
    return out


# ------------------------------------------------------------------
# Búsqueda exhaustiva de piezas
# ------------------------------------------------------------------

def max_piece_ratio(relators: Union[RelatorSet, list[bytes]]) -> PieceReport:
    """
    Pieza más larga alojada en cada relator, por longitudes crecientes.

    Si hay una pieza de longitud L alojada en r, también la hay de longitud
    L−1 (su prefijo), así que la búsqueda se detiene en la primera longitud
    sin piezas.
    """
    words = relators.as_bytes() if isinstance(relators, RelatorSet) else list(relators)
    sizes = [len(w) for w in words]
    best = [0] * len(words)
    best_witness: list[Optional[tuple[bytes, Occ, Occ]]] = [None] * len(words)
    self_max = cross_max = 0.0
    for length in range(1, max(sizes, default=0) + 1):
        table: dict[bytes, list[Occ]] = defaultdict(list)
        for rid, w in enumerate(words):
            if sizes[rid] < length:
                continue
            for offset, orientation, window in _windows(w, length):
                table[window].append((rid, offset, orientation))
        found = False
        for key, occs in table.items():
            if len(occs) < 2:
                continue
            by_relator: dict[int, list[Occ]] = defaultdict(list)
            for o in occs:
                by_relator[o[0]].append(o)
            for rid, own in by_relator.items():
                pair = next(((a, b) for a, b in combinations(own, 2) if _is_piece_pair(a, b, length, sizes)), None)
                if pair is not None:
                    self_max = max(self_max, length / sizes[rid])
                else:
                    partner = next(
                        (other[0] for other_rid, other in by_relator.items()
                         if other_rid != rid and _is_piece_pair(own[0], other[0], length, sizes)),
                        None,
                    )
                    if partner is not None:
                        pair = (own[0], partner)
                if pair is None:
                    continue
                if any(other_rid != rid and _is_piece_pair(own[0], other[0], length, sizes)
                       for other_rid, other in by_relator.items()):
                    cross_max = max(cross_max, length / sizes[rid])
                found = True
                best[rid] = length
                best_witness[rid] = (key, pair[0], pair[1])
        if not found:
            break
    per_relator = tuple(
        RelatorPieces(max_piece_length=b, ratio=b / s) for b, s in zip(best, sizes)
    )
    max_ratio, witness = 0.0, None
    for rid, piece in enumerate(per_relator):
        if piece.ratio > max_ratio:
            max_ratio = piece.ratio
            key, first, second = best_witness[rid]
            witness = PieceWitness(piece=_to_string(key), first=_occurrence(first), second=_occurrence(second))
    return PieceReport(
        per_relator=per_relator, max_ratio=max_ratio, self_max_ratio=self_max,
        cross_max_ratio=cross_max, witness=witness,
    )


# ------------------------------------------------------------------
# Índice incremental para C'(λ)
# ------------------------------------------------------------------

def _exact_lambda(lam: float) -> Fraction:
    if not 0 < lam < 1:
        raise DomainError(f"λ debe estar en (0,1) (λ={lam})")
    return Fraction(lam).limit_denominator(10**9)


class PieceIndex:
    """
    Detector incremental de violaciones de C'(λ).

    Basta detectar una subpalabra compartida de longitud t_r = ⌈λ|r|⌉
    alojada en r: para cada longitud necesaria L se indexan las ventanas de
    los relatores con t_r ≥ L; los de t_r = L son "dueños" y una colisión que
    involucra a un dueño es una violación. Las colisiones se detectan por
    diccionario (hash + igualdad de bytes).
    """

    def __init__(self, lam: float, cross_only: bool = False):
        self.lam = lam
        self._lam = _exact_lambda(lam)
        self.cross_only = cross_only
        self._words: list[bytes] = []
        self._needs: list[int] = []
        self._sizes: list[int] = []
        self._tables: dict[int, dict[bytes, tuple[list[Occ], list[Occ]]]] = {}
        self.witness: Optional[tuple[bytes, Occ, Occ]] = None

    def __len__(self) -> int:
        return len(self._words)

    @property
    def satisfied(self) -> bool:
        return self.witness is None

    def need(self, size: int) -> int:
        return math.ceil(self._lam * size)

    def add(self, word: bytes) -> bool:
        """Agrega un relator; devuelve False en cuanto aparece una violación."""
        if self.witness is not None:
            return False
        rid = len(self._words)
        need = self.need(len(word))
        self._words.append(word)
        self._needs.append(need)
        self._sizes.append(len(word))
        if need not in self._tables:
            self._tables[need] = {}
            for other in range(rid):
                if self._needs[other] > need:
                    self._insert(other, need)
        for length in sorted(L for L in self._tables if L <= need):
            if self._insert(rid, length):
                return False
        return True

    def extend(self, words: Iterable[bytes]) -> bool:
        for w in words:
            if not self.add(w):
                return False
        return True

    def _valid(self, a: Occ, b: Occ, length: int) -> bool:
        if self.cross_only and a[0] == b[0]:
            return False
        return _is_piece_pair(a, b, length, self._sizes)

    def _insert(self, rid: int, length: int) -> bool:
        table = self._tables[length]
        owner = self._needs[rid] == length
        for offset, orientation, window in _windows(self._words[rid], length):
            occ = (rid, offset, orientation)
            owners, others = table.setdefault(window, ([], []))
            candidates = (owners, others) if owner else (owners,)
            for group in candidates:
                partner = next((o for o in group if self._valid(occ, o, length)), None)
                if partner is not None:
                    self.witness = (window, occ, partner)
                    return True
            (owners if owner else others).append(occ)
        return False

    def verdict(self) -> CPrimeVerdict:
        witness = None
        if self.witness is not None:
            key, first, second = self.witness
            witness = PieceWitness(piece=_to_string(key), first=_occurrence(first), second=_occurrence(second))
        return CPrimeVerdict(satisfied=self.witness is None, lam=self.lam, witness=witness)


def satisfies_c_prime(relators: RelatorSet, lam: float, cross_only: bool = False) -> CPrimeVerdict:
    """C'(λ): toda pieza p alojada en r cumple |p| < λ|r|; si falla, devuelve un testigo."""
    index = PieceIndex(lam, cross_only=cross_only)
    index.extend(relators.as_bytes())
    return index.verdict()


# ------------------------------------------------------------------
# Trivialización
# ------------------------------------------------------------------

class TrivializationIndex:
    """Busca incrementalmente pares w, xw ∈ R para cada letra x dada."""

    def __init__(self, letters: Iterable[int]):
        self.letters = list(letters)
        self._words: set[bytes] = set()
        self.witnesses: dict[int, bytes] = {}

    def _valid(self, w: bytes, x: int) -> bool:
        inverse = x ^ 1
        return bool(w) and w[0] != inverse and w[-1] != inverse

    def add(self, word: bytes) -> bool:
        """Agrega una palabra; devuelve True cuando todas las letras tienen testigo."""
        self._words.add(word)
        for x in self.letters:
            if x in self.witnesses:
                continue
            prefixed = bytes([x]) + word
            if self._valid(word, x) and prefixed in self._words:
                self.witnesses[x] = word
            elif len(word) > 1 and word[0] == x and self._valid(word[1:], x) and word[1:] in self._words:
                self.witnesses[x] = word[1:]
        return len(self.witnesses) == len(self.letters)


def find_trivializing_pair(relators: RelatorSet, x: Union[Letter, str, int]) -> Optional[Word]:
    """Primer w ∈ R (en orden de R) con xw ∈ R, sin cancelación entre x y w."""
    if isinstance(x, str):
        x = Letter.parse(x)
    code = x.code if isinstance(x, Letter) else int(x)
    if code >= 2 * relators.m:
        raise DomainError(f"La letra {x} no pertenece al rango m={relators.m}")
    words = relators.as_bytes()
    present = set(words)
    inverse = code ^ 1
    for w in words:
        if w[0] != inverse and w[-1] != inverse and bytes([code]) + w in present:
            return Word.from_bytes(w, relators.m)
    return None


# ------------------------------------------------------------------
# Umbrales explícitos
# ------------------------------------------------------------------

def thresholds(m: int, epsilon: float = 0.0) -> Thresholds:
    """μ, λ = μ/(15m+3μ), d_AO = 1/(120m² ln 2m) y dens_M = log_{2m−1}(2m − 5/4)."""
    if m < 2:
        raise DomainError(f"Se requiere m ≥ 2 (m={m})")
    if epsilon < 0:
        raise DomainError(f"ε debe ser ≥ 0 (ε={epsilon})")
    mu = math.log1p(1 / (4 * m - 4)) / math.log(2 * m) - epsilon
    if mu <= 0:
        raise DomainError(f"ε demasiado grande: μ = {mu} ≤ 0")
    lam = mu / (15 * m + 3 * mu)
    ln2m = math.log(2 * m)
    lam_floor = 1 / (60 * m * m * ln2m)
    d_ao = 1 / (120 * m * m * ln2m)
    dens_m = math.log(2 * m - 1.25) / math.log(2 * m - 1)
    return Thresholds(
        m=m, epsilon=epsilon, mu=mu, lam=lam, lam_floor=lam_floor, d_ao=d_ao, dens_m=dens_m,
        lambda_above_floor=lam > lam_floor,
        ao_below_half_lambda=lam / 2 > d_ao,
        ao_below_readable_gap=d_ao < 1 - dens_m,
    )


def piece_phase_densities(lam: float, d: float) -> PhaseDensities:
    """Densidades de los conjuntos de piezas y el régimen predicho para C'(λ)."""
    _exact_lambda(lam)
    if not 0 <= d <= 1:
        raise DomainError(f"d fuera de [0,1] (d={d})")
    pair_density = 1 - lam / 2
    shared = (3 - 2 * lam) / 4
    predicted = None if abs(d - lam / 2) <= CRITICAL_TOL else d < lam / 2
    return PhaseDensities(
        lam=lam, d=d, self_piece_words=1 - lam, piece_pairs=pair_density, shared_one_class=shared,
        self_trace=d - lam, pair_trace=d - lam / 2,
        pair_margin=pair_density + (d - 1) / 4 - shared, predicted_cprime=predicted,
    )
