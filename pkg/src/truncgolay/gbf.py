"""Generalized Boolean functions on interval domains.

A :class:`Gbf` is a map ``{0,1}^m -> Z_q`` written as a sum of terms, each a
coefficient times a product of literals ``z_i`` or ``1 - z_i``.  Complement
literals are stored as-is rather than expanded, so that formulas with many
``(1 - z_i)`` factors are evaluated pointwise without an intermediate ANF.

Position ``j`` of a sequence corresponds to the point whose bit ``i`` is
``(index_j >> i) & 1``, so variable ``z_0`` is the least-significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

PREFIX = "prefix"
SUFFIX = "suffix"
FULL = "full"

# (variable index, complemented?)
Literal = tuple[int, bool]


@dataclass(frozen=True)
class Term:
    coeff: int
    literals: tuple[Literal, ...] = ()

    def __str__(self) -> str:
        if not self.literals:
            return str(self.coeff)
        body = "*".join(f"~z{i}" if neg else f"z{i}" for i, neg in self.literals)
        return body if self.coeff == 1 else f"{self.coeff}*{body}"


@dataclass(frozen=True)
class Domain:
    """An interval of ``{0, ..., 2^m - 1}``: a prefix, a suffix or everything."""

    m: int
    kind: str = FULL
    length: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        size = 1 << self.m
        if self.kind == FULL:
            if self.length not in (None, size):
                raise ValueError(f"full domain has length {size}, got {self.length}")
            object.__setattr__(self, "length", size)
        elif self.kind in (PREFIX, SUFFIX):
            if self.length is None or not 1 <= self.length <= size:
                raise ValueError(f"{self.kind} length must lie in [1, {size}]")
        else:
            raise ValueError(f"unsupported domain kind {self.kind!r}")

    @classmethod
    def prefix(cls, m: int, length: int) -> "Domain":
        return cls(m, PREFIX, length)

    @classmethod
    def suffix(cls, m: int, length: int) -> "Domain":
        return cls(m, SUFFIX, length)

    @property
    def start(self) -> int:
        return (1 << self.m) - self.length if self.kind == SUFFIX else 0

    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.start + self.length, dtype=np.int64)

    def points(self) -> np.ndarray:
        """Domain points as a ``(length, m)`` 0/1 array, LSB-first."""
        return index_bits(self.indices(), self.m)

    def complement(self) -> "Domain":
        """The domain hit by complementing every bit of every point."""
        flipped = {PREFIX: SUFFIX, SUFFIX: PREFIX, FULL: FULL}[self.kind]
        return Domain(self.m, flipped, self.length)


def index_bits(indices, m: int) -> np.ndarray:
    indices = np.asarray(indices, dtype=np.int64)
    return ((indices[:, None] >> np.arange(m)) & 1).astype(np.int64)


@dataclass(frozen=True, eq=False)
class ZqSequence:
    exponents: np.ndarray
    q: int

    def __post_init__(self):
        e = np.asarray(self.exponents, dtype=np.int64)
        if e.ndim != 1:
            raise ValueError("exponents must be one-dimensional")
        if np.any((e < 0) | (e >= self.q)):
            raise ValueError(f"exponents must lie in [0, {self.q})")
        e.setflags(write=False)
        object.__setattr__(self, "exponents", e)

    def __len__(self) -> int:
        return len(self.exponents)

    def complex(self) -> np.ndarray:
        return unit_image(self.exponents, self.q)


def unit_image(exponents, q: int) -> np.ndarray:
    """``omega^e`` with ``omega = exp(2 pi i / q)``; negative ``e`` maps to 0.

    For ``q = 2`` the image is an exact integer array over ``{-1, 0, 1}``.
    """
    e = np.asarray(exponents, dtype=np.int64)
    if q == 2:
        return np.where(e < 0, 0, 1 - 2 * (e & 1)).astype(np.int64)
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    # exact values at the axis crossings
    roots.real[np.abs(roots.real) < 1e-15] = 0.0
    roots.imag[np.abs(roots.imag) < 1e-15] = 0.0
    return np.where(e < 0, 0, roots[np.where(e < 0, 0, e) % q])


@dataclass(frozen=True, eq=False)
class RestrictedVector:
    """``f|_{y=c}``: the complex image of ``f`` with positions not matching
    the fixed bits set to zero.  ``exponents`` holds -1 at those positions."""

    exponents: np.ndarray
    q: int
    vars: tuple[int, ...] = ()
    bits: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def values(self) -> np.ndarray:
        return unit_image(self.exponents, self.q)

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.exponents >= 0)


@dataclass(frozen=True, eq=False)
class Gbf:
    m: int
    q: int
    terms: tuple[Term, ...] = ()
    domain: Domain = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.q < 2 or self.q % 2:
            raise ValueError(f"q must be an even integer >= 2, got {self.q}")
        if self.domain is None:
            object.__setattr__(self, "domain", Domain(self.m))
        if self.domain.m != self.m:
            raise ValueError("domain and function disagree on m")
        terms = []
        for t in self.terms:
            if not isinstance(t, Term):
                coeff, lits = t
                t = Term(coeff, tuple((int(i), bool(n)) for i, n in lits))
            for i, _ in t.literals:
                if not 0 <= i < self.m:
                    raise ValueError(f"variable index {i} out of range for m={self.m}")
            terms.append(Term(t.coeff % self.q, t.literals))
        object.__setattr__(self, "terms", tuple(terms))

    def evaluate_points(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.int64)
        out = np.zeros(len(points), dtype=np.int64)
        for t in self.terms:
            prod = np.full(len(points), t.coeff, dtype=np.int64)
            for i, neg in t.literals:
                prod *= 1 - points[:, i] if neg else points[:, i]
            out += prod
        return out % self.q

    def with_domain(self, domain: Domain) -> "Gbf":
        return Gbf(self.m, self.q, self.terms, domain)

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms if t.coeff) or "0"


def evaluate(g: Gbf, point: Sequence[int]) -> int:
    """Value of ``g`` at one ``m``-bit point (``point[i]`` is ``z_i``)."""
    if len(point) != g.m:
        raise ValueError(f"point must have {g.m} bits, got {len(point)}")
    return int(g.evaluate_points(np.asarray([point]))[0])


def generate_sequence(g: Gbf) -> ZqSequence:
    return ZqSequence(g.evaluate_points(g.domain.points()), g.q)


def restrict(g: Gbf, vars: Sequence[int] = (), bits: Sequence[int] = ()) -> RestrictedVector:
    """Fix ``z_{vars[a]} = bits[a]``; positions that disagree become zero.

    The result keeps the ambient (domain) length.  Empty ``vars`` gives the
    plain complex image of ``g``.
    """
    vars, bits = tuple(int(v) for v in vars), tuple(int(b) for b in bits)
    if len(vars) != len(bits):
        raise ValueError("vars and bits must have equal length")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be binary")
    if any(not 0 <= v < g.m for v in vars):
        raise ValueError(f"restricted variable out of range for m={g.m}")
    if any(a >= b for a, b in zip(vars, vars[1:])):
        raise ValueError("restricted variables must be strictly increasing")
    pts = g.domain.points()
    e = g.evaluate_points(pts)
    if vars:
        match = np.all(pts[:, list(vars)] == np.asarray(bits), axis=1)
        e = np.where(match, e, -1)
    e.setflags(write=False)
    return RestrictedVector(e, g.q, vars, bits)


def add_linear(g: Gbf, linear: Iterable[tuple] = (), constant: int = 0) -> Gbf:
    """Return ``g + sum(coeff * z_i) + constant`` on the same domain.

    Entries of ``linear`` are ``(coeff, i)``, or ``(coeff, i, True)`` to add
    the complemented literal ``coeff * (1 - z_i)``.
    """
    extra = []
    for entry in linear:
        coeff, i, *rest = entry
        neg = bool(rest[0]) if rest else False
        if not 0 <= i < g.m:
            raise ValueError(f"variable index {i} out of range for m={g.m}")
        if coeff % g.q:
            extra.append(Term(coeff, ((i, neg),)))
    if constant % g.q:
        extra.append(Term(constant))
    return Gbf(g.m, g.q, g.terms + tuple(extra), g.domain)


def complement_literals(g: Gbf) -> Gbf:
    """``g(1 - z_0, ..., 1 - z_{m-1})`` on the complemented domain."""
    terms = tuple(Term(t.coeff, tuple((i, not neg) for i, neg in t.literals)) for t in g.terms)
    return Gbf(g.m, g.q, terms, g.domain.complement())


def to_anf(g: Gbf) -> dict[frozenset[int], int]:
    """Expand complements into monomials; debug utility only."""
    total: dict[frozenset[int], int] = {}
    for t in g.terms:
        poly = {frozenset(): t.coeff}
        for i, neg in t.literals:
            nxt: dict[frozenset[int], int] = {}
            for mono, c in poly.items():
                grown = mono | {i}
                if neg:
                    nxt[mono] = nxt.get(mono, 0) + c
                    nxt[grown] = nxt.get(grown, 0) - c
                else:
                    nxt[grown] = nxt.get(grown, 0) + c
            poly = nxt
        for mono, c in poly.items():
            total[mono] = (total.get(mono, 0) + c) % g.q
    return {mono: c for mono, c in total.items() if c}
