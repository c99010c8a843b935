"""
Modelos de palabras del grupo libre y presentaciones.

Codificación de letras: enteros 0..2m−1, generador g ↦ 2g, su inverso ↦ 2g+1,
de modo que inverse(x) = x XOR 1. En texto: a..z para generadores y A..Z
para sus inversos.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from domain.errors import DomainError

MAX_RANK = 26


def letter_char(code: int) -> str:
    base = "a" if code % 2 == 0 else "A"
    return chr(ord(base) + code // 2)


def char_code(ch: str, m: int) -> int:
    if "a" <= ch <= "z":
        code = 2 * (ord(ch) - ord("a"))
    elif "A" <= ch <= "Z":
        code = 2 * (ord(ch) - ord("A")) + 1
    else:
        raise DomainError(f"Carácter inválido en una palabra: {ch!r}")
    if code >= 2 * m:
        raise DomainError(f"La letra {ch!r} no pertenece al rango m={m}")
    return code


class Letter(BaseModel):
    """Generador x_g (g en 1..m) con signo ±1."""
    generator: int = Field(..., ge=1, le=MAX_RANK)
    sign: Literal[1, -1] = 1

    model_config = ConfigDict(frozen=True)

    @property
    def code(self) -> int:
        return 2 * (self.generator - 1) + (0 if self.sign == 1 else 1)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(generator=code // 2 + 1, sign=1 if code % 2 == 0 else -1)

    @classmethod
    def parse(cls, ch: str) -> "Letter":
        return cls.from_code(char_code(ch, MAX_RANK))

    def inverse(self) -> "Letter":
        return Letter(generator=self.generator, sign=-self.sign)

    def __str__(self) -> str:
        return letter_char(self.code)


class Word(BaseModel):
    """Secuencia de letras codificadas sobre m generadores."""
    m: int = Field(..., ge=1, le=MAX_RANK)
    letters: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_letters(self) -> "Word":
        if any(not 0 <= x < 2 * self.m for x in self.letters):
            raise ValueError(f"Letras fuera de 0..{2 * self.m - 1}")
        return self

    @classmethod
    def parse(cls, text: str, m: int) -> "Word":
        return cls(m=m, letters=tuple(char_code(ch, m) for ch in text.strip()))

    @classmethod
    def from_bytes(cls, data: bytes, m: int) -> "Word":
        return cls.model_construct(m=m, letters=tuple(data))

    def to_bytes(self) -> bytes:
        return bytes(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(letter_char(x) for x in self.letters)

    @property
    def freely_reduced(self) -> bool:
        return all(a != b ^ 1 for a, b in zip(self.letters, self.letters[1:]))

    @property
    def cyclically_reduced(self) -> bool:
        if not self.freely_reduced:
            return False
        return len(self.letters) < 2 or self.letters[-1] != self.letters[0] ^ 1

    def inverse(self) -> "Word":
        return Word.model_construct(m=self.m, letters=tuple(x ^ 1 for x in reversed(self.letters)))


class WordCountTable(BaseModel):
    """|S_t| y |B_t| exactos para t = 1..ℓ (enteros arbitrarios)."""
    m: int
    ell: int
    counts_exact: tuple[int, ...] = Field(..., description="|S_t| para t = 1..ℓ")
    cumulative: tuple[int, ...] = Field(..., description="|B_t| para t = 1..ℓ")

    model_config = ConfigDict(frozen=True)

    def sandwich_holds(self) -> bool:
        """2m(2m−1)^{t−2}(2m−2) ≤ |S_t| ≤ 2m(2m−1)^{t−1} para t ≥ 2."""
        m = self.m
        for t, s in enumerate(self.counts_exact, start=1):
            if t < 2:
                continue
            if not 2 * m * (2 * m - 1) ** (t - 2) * (2 * m - 2) <= s <= 2 * m * (2 * m - 1) ** (t - 1):
                return False
        return True

    @property
    def total(self) -> int:
        return self.cumulative[-1]


class RelatorSet(BaseModel):
    """Relatores distintos, no vacíos y cíclicamente reducidos de ⟨X | R⟩."""
    m: int = Field(..., ge=1, le=MAX_RANK)
    relators: tuple[Word, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_relators(self) -> "RelatorSet":
        seen = set()
        for r in self.relators:
            if r.m != self.m:
                raise ValueError(f"Relator {r} definido sobre m={r.m}, no m={self.m}")
            if not r.letters:
                raise ValueError("Relator vacío")
            if not r.cyclically_reduced:
                raise ValueError(f"Relator no cíclicamente reducido: {r}")
            if r.letters in seen:
                raise ValueError(f"Relator repetido: {r}")
            seen.add(r.letters)
        return self

    @classmethod
    def parse(cls, texts: list[str], m: int) -> "RelatorSet":
        return cls(m=m, relators=tuple(Word.parse(t, m) for t in texts))

    def as_bytes(self) -> list[bytes]:
        return [r.to_bytes() for r in self.relators]


class Occurrence(BaseModel):
    """Posición de una subpalabra cíclica: (relator, desplazamiento, orientación)."""
    relator: int
    offset: int
    orientation: Literal[1, -1]

    model_config = ConfigDict(frozen=True)


class PieceWitness(BaseModel):
    piece: str
    first: Occurrence
    second: Occurrence

    model_config = ConfigDict(frozen=True)


class RelatorPieces(BaseModel):
    max_piece_length: int
    ratio: float

    model_config = ConfigDict(frozen=True)


class PieceReport(BaseModel):
    """Pieza más larga por relator, razón global y testigo de la razón máxima."""
    per_relator: tuple[RelatorPieces, ...]
    max_ratio: float = Field(..., ge=0, le=1)
    self_max_ratio: float = Field(0.0, description="Sólo piezas de un relator consigo mismo")
    cross_max_ratio: float = Field(0.0, description="Piezas entre relatores distintos, medidas contra el más corto")
    witness: Optional[PieceWitness] = None

    model_config = ConfigDict(frozen=True)


class CPrimeVerdict(BaseModel):
    satisfied: bool
    lam: float
    witness: Optional[PieceWitness] = None

    model_config = ConfigDict(frozen=True)


class SymmetrizedEntry(BaseModel):
    word: Word
    relator: int
    rotation: int
    orientation: Literal[1, -1]

    model_config = ConfigDict(frozen=True)


class Thresholds(BaseModel):
    """Aritmética explícita de umbrales de densidad para m generadores."""
    m: int
    epsilon: float
    mu: float
    lam: float
    lam_floor: float = Field(..., description="1/(60m² ln 2m)")
    d_ao: float
    dens_m: float
    lambda_above_floor: bool
    ao_below_half_lambda: bool
    ao_below_readable_gap: bool

    model_config = ConfigDict(frozen=True)


class PhaseDensities(BaseModel):
    """Densidades de los conjuntos de piezas y de sus trazas sobre una presentación de densidad d."""
    lam: float
    d: float
    self_piece_words: float = Field(..., description="1 − λ")
    piece_pairs: float = Field(..., description="1 − λ/2")
    shared_one_class: float = Field(..., description="(3 − 2λ)/4")
    self_trace: float = Field(..., description="d − λ (negativa: vacía)")
    pair_trace: float = Field(..., description="d − λ/2 (negativa: vacía)")
    pair_margin: float = Field(..., description="1 − λ/2 + (d − 1)/4 − (3 − 2λ)/4")
    predicted_cprime: Optional[bool] = Field(None, description="None en la línea crítica d = λ/2")

    model_config = ConfigDict(frozen=True)
