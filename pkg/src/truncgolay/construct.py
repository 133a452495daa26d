"""Sequence constructions from truncated generalized Boolean functions.

Two length families are supported:

``ten``
    length ``2^(m-1) + 2^(m-3) = 10 * 2^(m-4)``, ``m >= 5``, quadratic part
    on ``z_0 .. z_{m-5}``;
``thirteen``
    length ``2^(m-1) + 2^(m-2) + 2^(m-4) = 13 * 2^(m-4)``, ``m >= 6``,
    quadratic part on ``z_0 .. z_{m-6}``.

The remaining (high) variables carry a fixed higher-order block that shapes
the truncated sequence into a complementary kernel.

Flock order: the row with labels ``(a, a_0, ..., a_{k-1})`` sits at index
``a + 2 * sum(a_i * 2^i)``, i.e. ``a`` is the least significant label bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corr import CodeFamily, CodeSet
from .gbf import Domain, Gbf, RestrictedVector, Term, add_linear, complement_literals, generate_sequence, restrict
from .quadgraph import NotAPathError, PathWitness, delete_vertices, graph_of, path_violations, path_witness

TEN = "ten"
THIRTEEN = "thirteen"
FAMILIES = (TEN, THIRTEEN)

VERBATIM = "verbatim"
REPAIRED = "repaired"


class ConstructionError(ValueError):
    pass


def family_length(family: str, m: int) -> int:
    if family == TEN:
        return (1 << (m - 1)) + (1 << (m - 3))
    if family == THIRTEEN:
        return (1 << (m - 1)) + (1 << (m - 2)) + (1 << (m - 4))
    raise ConstructionError(f"unknown family {family!r}")


def min_m(family: str) -> int:
    return 5 if family == TEN else 6


def low_variable_count(family: str, m: int) -> int:
    return m - 4 if family == TEN else m - 5


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters shared by every construction.

    ``beta1`` picks which end of the surviving path enters the base function;
    ``None`` means the smaller vertex index.  ``bits`` fixes the deleted
    variables for a single pair (default all zero).  ``variant`` only
    affects the ``thirteen`` family; see :func:`build_f_13`.
    """

    family: str
    m: int
    q: int = 2
    quadratic: tuple[tuple[int, int, int], ...] = ()
    linear: tuple[int, ...] | None = None
    constant: int = 0
    victims: tuple[int, ...] = ()
    bits: tuple[int, ...] | None = None
    beta1: int | None = None
    c_prime: int = 0
    variant: str = VERBATIM

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConstructionError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.m < min_m(self.family):
            raise ConstructionError(f"m must be >= {min_m(self.family)} for the {self.family} family")
        if self.q < 2 or self.q % 2:
            raise ConstructionError(f"q must be an even integer >= 2, got {self.q}")
        if self.variant not in (VERBATIM, REPAIRED):
            raise ConstructionError(f"unknown variant {self.variant!r}")
        n = self.n_low
        object.__setattr__(self, "quadratic", tuple(tuple(int(x) for x in t) for t in self.quadratic))
        lin = (0,) * n if self.linear is None else tuple(int(c) for c in self.linear)
        if len(lin) != n:
            raise ConstructionError(f"expected {n} linear coefficients, got {len(lin)}")
        object.__setattr__(self, "linear", lin)
        victims = tuple(int(v) for v in self.victims)
        if list(victims) != sorted(set(victims)):
            raise ConstructionError("victims must be distinct and increasing")
        if any(not 0 <= v < n for v in victims):
            raise ConstructionError(f"victims must lie in [0, {n})")
        if len(victims) > n - 1:
            raise ConstructionError(f"at most {n - 1} victims for m={self.m}")
        object.__setattr__(self, "victims", victims)
        bits = (0,) * len(victims) if self.bits is None else tuple(int(b) for b in self.bits)
        if len(bits) != len(victims) or any(b not in (0, 1) for b in bits):
            raise ConstructionError("bits must be a binary word with one bit per victim")
        object.__setattr__(self, "bits", bits)
        try:
            graph = graph_of(self.quadratic, n, self.q)
        except ValueError as exc:
            raise ConstructionError(str(exc)) from None
        survivors = delete_vertices(graph, victims)
        problems = path_violations(survivors)
        if problems:
            raise ConstructionError(
                f"deleting {list(victims)} does not leave a labeled path: " + "; ".join(problems)
            )
        ends = path_witness(survivors).ends
        if self.beta1 is not None and self.beta1 not in ends:
            raise ConstructionError(f"beta1={self.beta1} is not an end of the path {ends}")

    @property
    def n_low(self) -> int:
        return low_variable_count(self.family, self.m)

    @property
    def length(self) -> int:
        return family_length(self.family, self.m)

    @property
    def k(self) -> int:
        return len(self.victims)

    @property
    def graph(self):
        return graph_of(self.quadratic, self.n_low, self.q)

    @property
    def witness(self) -> PathWitness:
        return path_witness(delete_vertices(self.graph, self.victims))

    @property
    def ends(self) -> tuple[int, int]:
        """``(beta1, beta2)``."""
        lo, hi = self.witness.ends
        if self.beta1 is None or self.beta1 == lo:
            return lo, hi
        return hi, lo


def _base_terms(spec: ConstructionSpec) -> list[Term]:
    terms = [Term(c, ((i, False), (j, False))) for i, j, c in spec.quadratic]
    terms += [Term(c, ((i, False),)) for i, c in enumerate(spec.linear)]
    terms.append(Term(spec.constant))
    return terms


def build_f_10(spec: ConstructionSpec) -> Gbf:
    """Base function of the ``ten`` family on the prefix of length ``10 * 2^(m-4)``."""
    if spec.family != TEN:
        raise ConstructionError("build_f_10 needs a ten-family spec")
    m, h = spec.m, spec.q // 2
    b1 = spec.ends[0]
    z = {j: (m - j, False) for j in range(1, 5)}  # z[j] = z_{m-j}
    n = {j: (m - j, True) for j in range(1, 5)}
    zb = (b1, False)
    block = [
        (n[1], n[4], z[3]),
        (n[1], n[4], z[2]),
        (n[1], z[2], z[3]),
        (zb, n[1], z[2], n[3], n[4]),
        (zb, n[1], z[2], z[3]),
        (zb, z[1], n[2], n[3]),
    ]
    terms = _base_terms(spec) + [Term(h, lits) for lits in block]
    return Gbf(m, spec.q, tuple(terms), Domain.prefix(m, spec.length))


def build_f_13(spec: ConstructionSpec) -> Gbf:
    """Base function of the ``thirteen`` family on the prefix of length ``13 * 2^(m-4)``.

    ``variant="verbatim"`` reproduces the original formula term for term,
    including two products that vanish identically (``z_{m-5}(1 - z_{m-5})``
    and ``z_{m-2}(1 - z_{m-2})`` inside one group).  That form does not give
    complementary pairs.  ``variant="repaired"`` reads the first as
    ``z_{m-3}(1 - z_{m-5})`` and lifts ``z_{m-1} z_{m-2} ~z_{m-3} ~z_{m-4}`` out
    of the ``z_{m-1} ~z_{m-2}`` group; the high block then encodes a length-26
    Golay kernel pair and every downstream property verifies exactly.
    """
    if spec.family != THIRTEEN:
        raise ConstructionError("build_f_13 needs a thirteen-family spec")
    m, h = spec.m, spec.q // 2
    b1 = spec.ends[0]
    z = {j: (m - j, False) for j in range(1, 6)}  # z[j] = z_{m-j}
    n = {j: (m - j, True) for j in range(1, 6)}
    zb = (b1, False)
    block = [
        (zb, n[1], n[2]),
        (zb, n[1], z[2], n[3]),
        (zb, n[1], z[2], z[3], n[4], z[5]),
        (n[1], n[2], n[3], z[4], z[5]),
        (n[1], n[2], z[3], n[4], n[5]),
        (n[1], z[2], n[3], n[5]),
        (n[1], z[2], z[3], n[4]),
        (n[1], z[2], z[4], n[3], z[5]),
        (z[1], n[2], n[4], n[5]),
        (z[1], n[2], z[3], z[4]),
        (z[1], n[2], n[3], z[4], z[5]),
    ]
    if spec.variant == VERBATIM:
        block += [
            (n[1], z[2], z[4], z[5], n[5]),
            (z[1], n[2], z[1], z[2], n[3], n[4]),
        ]
    else:
        block += [
            (n[1], z[2], z[4], z[3], n[5]),
            (z[1], z[2], n[3], n[4]),
        ]
    terms = _base_terms(spec) + [Term(h, lits) for lits in block]
    return Gbf(m, spec.q, tuple(terms), Domain.prefix(m, spec.length))


def build_f(spec: ConstructionSpec) -> Gbf:
    return build_f_10(spec) if spec.family == TEN else build_f_13(spec)


def reversed_gbf(f: Gbf) -> Gbf:
    """``f(1 - z)`` on the suffix domain of the same length.

    Its sequence is the reversal of the sequence of ``f``.
    """
    return complement_literals(f)


def gcp_pair(
    f: Gbf,
    victims: Sequence[int],
    bits: Sequence[int] | None,
    beta2: int,
    c_prime: int = 0,
    graph=None,
) -> tuple[RestrictedVector, RestrictedVector]:
    """``(f|_{z=c}, (f + (q/2) z_beta2 + c')|_{z=c})``.

    When ``graph`` (the quadratic-part graph of ``f``) is given, the path
    condition after deleting ``victims`` is checked first.
    """
    victims = tuple(victims)
    bits = (0,) * len(victims) if bits is None else tuple(bits)
    if graph is not None:
        survivors = delete_vertices(graph, victims)
        problems = path_violations(survivors)
        if problems:
            raise NotAPathError(problems)
        if beta2 not in path_witness(survivors).ends:
            raise ConstructionError(f"beta2={beta2} is not an end of the surviving path")
    mate = add_linear(f, [(f.q // 2, beta2)], c_prime)
    return restrict(f, victims, bits), restrict(mate, victims, bits)


def construct_pair(spec: ConstructionSpec) -> tuple[RestrictedVector, RestrictedVector]:
    return gcp_pair(build_f(spec), spec.victims, spec.bits, spec.ends[1], spec.c_prime, spec.graph)


def _labels(k: int) -> list[tuple[int, ...]]:
    """Labels ``(a, a_0, ..., a_{k-1})`` in flock order."""
    return [tuple((j >> b) & 1 for b in range(k + 1)) for j in range(1 << (k + 1))]


def _flock(f: Gbf, victims, beta2: int, t: int, mate: bool, name: str) -> CodeSet:
    k = len(victims)
    if not 0 <= t < (1 << k):
        raise ConstructionError(f"t must lie in [0, {1 << k}), got {t}")
    h = f.q // 2
    n = [(t >> b) & 1 for b in range(k)]
    rows, labels = [], _labels(k)
    for a, *av in labels:
        lin = [(h * (av[i] + n[i]), p, mate) for i, p in enumerate(victims)]
        lin.append((h * ((1 - a) if mate else a), beta2))
        rows.append(generate_sequence(add_linear(f, lin)).exponents)
    return CodeSet.from_exponents(np.stack(rows), f.q, tuple(labels), name)


def mocs_set(f: Gbf, victims: Sequence[int], beta2: int, t: int) -> CodeSet:
    """``S_t``: rows ``f + (q/2)(sum (a_i + n_i) z_{p_i} + a z_beta2)``."""
    return _flock(f, tuple(victims), beta2, t, mate=False, name=f"S_{t}")


def mate_set(fbar: Gbf, victims: Sequence[int], beta2: int, t: int) -> CodeSet:
    """Mate ``S̄_t``: rows ``fbar + (q/2)(sum (a_i + n_i) ~z_{p_i} + (1 - a) z_beta2)``."""
    return _flock(fbar, tuple(victims), beta2, t, mate=True, name=f"Sbar_{t}")


def mocs_family(spec: ConstructionSpec) -> CodeFamily:
    f = build_f(spec)
    beta2 = spec.ends[1]
    return CodeFamily(tuple(mocs_set(f, spec.victims, beta2, t) for t in range(1 << spec.k)))


def mate_family(spec: ConstructionSpec) -> CodeFamily:
    fbar = reversed_gbf(build_f(spec))
    beta2 = spec.ends[1]
    return CodeFamily(tuple(mate_set(fbar, spec.victims, beta2, t) for t in range(1 << spec.k)))


def ccc(spec: ConstructionSpec) -> CodeFamily:
    """``{S_0, ..., S_{2^k - 1}, S̄_0, ..., S̄_{2^k - 1}}`` with ``k = len(victims)``."""
    return CodeFamily(mocs_family(spec).codes + mate_family(spec).codes)


def offset_constants(labels, perm: Sequence[int], q: int, through_flock_bit: bool = False) -> list[int]:
    """Per-row constants ``(q/2) sum a_{perm[i]} a_{perm[i+1]}``.

    With ``through_flock_bit`` the chain is extended by ``a * a_{perm[0]}``
    so the column functions have a path through all ``k + 1`` label bits.
    """
    perm = tuple(int(p) for p in perm)
    h = q // 2
    out = []
    for a, *av in labels:
        k = len(av)
        if sorted(perm) != list(range(k)):
            raise ConstructionError(f"{list(perm)} is not a permutation of range({k})")
        c = sum(av[perm[i]] * av[perm[i + 1]] for i in range(k - 1))
        if through_flock_bit and k:
            c += a * av[perm[0]]
        out.append((h * c) % q)
    return out


def pmepr_offset(cs: CodeSet, perm: Sequence[int], through_flock_bit: bool = False) -> CodeSet:
    """Add the per-row label constant; correlation verdicts are unchanged."""
    if cs.labels is None or cs.exponents is None or cs.q is None:
        raise ConstructionError("offset needs a labeled Z_q code set")
    consts = np.asarray(offset_constants(cs.labels, perm, cs.q, through_flock_bit))
    e = (cs.exponents + consts[:, None]) % cs.q
    return CodeSet.from_exponents(e, cs.q, cs.labels, cs.name)


def offset_family(family: CodeFamily, perm: Sequence[int], through_flock_bit: bool = False) -> CodeFamily:
    return CodeFamily(tuple(pmepr_offset(c, perm, through_flock_bit) for c in family))


# Reference examples (q = 2, m = 8).
K4 = ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (0, 2, 1), (1, 3, 1))

PRESETS: dict[str, ConstructionSpec] = {
    "example1": ConstructionSpec(TEN, 8, 2, K4, (1, 1, 1, 1), 0, (0, 3), (0, 0), beta1=2, c_prime=1),
    "example2": ConstructionSpec(TEN, 8, 2, K4, (1, 1, 1, 1), 0, (0, 3), beta1=2),
    "example3": ConstructionSpec(TEN, 8, 2, K4, (1, 1, 1, 1), 0, (0, 3), beta1=2),
    "example4": ConstructionSpec(
        THIRTEEN, 8, 2, ((0, 1, 1), (0, 2, 1), (1, 2, 1)), (0, 0, 0), 0, (2,), beta1=1
    ),
}
