"""Aperiodic correlations and complementary-set verdicts.

Two independent routes compute a full correlation profile: a direct
O(N^2) sum (:func:`naive_full_accf`, exact on integer input) and a
zero-padded FFT product (:func:`full_accf`).  Profiles are indexed so that
entry ``s + N - 1`` holds shift ``s`` for ``s`` in ``(-N, N)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import fft as sfft

from .gbf import RestrictedVector, ZqSequence, unit_image


def _as_vector(x) -> np.ndarray:
    if isinstance(x, (ZqSequence,)):
        return x.complex()
    if isinstance(x, RestrictedVector):
        return x.values
    return np.asarray(x)


def accf(d, e, s: int):
    """Aperiodic cross-correlation ``sum_k d_k conj(e_{k+s})`` at one shift."""
    d, e = _as_vector(d), _as_vector(e)
    n = len(d)
    if len(e) != n:
        raise ValueError(f"length mismatch: {n} vs {len(e)}")
    if abs(s) >= n:
        return 0
    if s >= 0:
        pairs = zip(d[: n - s], e[s:])
    else:
        pairs = zip(d[-s:], e[: n + s])
    total = 0
    for a, b in pairs:
        total += a * np.conj(b)
    return total.item() if hasattr(total, "item") else total


def aacf(e, s: int):
    return accf(e, e, s)


def naive_full_accf(d, e) -> np.ndarray:
    """All shifts by direct summation; integer input stays integer."""
    d, e = _as_vector(d), _as_vector(e)
    if len(d) != len(e):
        raise ValueError(f"length mismatch: {len(d)} vs {len(e)}")
    # np.correlate(d, e)[N-1-s] = C(d, e)(s)
    return np.correlate(d, e, "full")[::-1]


def full_accf(d, e) -> np.ndarray:
    """All shifts via zero-padded spectral multiplication."""
    d, e = _as_vector(d), _as_vector(e)
    n = len(d)
    if len(e) != n:
        raise ValueError(f"length mismatch: {n} vs {len(e)}")
    size = sfft.next_fast_len(2 * n - 1)
    spec = sfft.fft(d, size) * np.conj(sfft.fft(e, size))
    raw = sfft.ifft(spec)
    # raw[t] = sum_k d_{k+t} conj(e_k), so shift s sits at t = -s (mod size)
    shifts = np.arange(-(n - 1), n)
    return raw[(-shifts) % size]


@dataclass(frozen=True, eq=False)
class CodeSet:
    """An ordered flock of equal-length sequences stored as a 2-D array.

    ``exponents`` (with -1 for structural zeros) is kept when the set was
    built from Z_q data; ``labels`` records the binary label of each row
    for constructions that use one.
    """

    values: np.ndarray
    q: int | None = None
    exponents: np.ndarray | None = None
    labels: tuple[tuple[int, ...], ...] | None = None
    name: str = ""

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.ndim != 2:
            raise ValueError("a code set needs a 2-D (M, N) array of sequences")
        object.__setattr__(self, "values", v)

    @classmethod
    def from_exponents(cls, exponents, q: int, labels=None, name: str = "") -> "CodeSet":
        e = np.asarray(exponents, dtype=np.int64)
        if e.ndim != 2:
            raise ValueError("ragged or non-2-D exponent rows")
        return cls(unit_image(e, q), q, e, labels, name)

    @classmethod
    def from_sequences(cls, seqs: Sequence, name: str = "") -> "CodeSet":
        seqs = list(seqs)
        lengths = {len(s) for s in seqs}
        if len(lengths) > 1:
            raise ValueError(f"ragged set: lengths {sorted(lengths)}")
        if all(isinstance(s, (ZqSequence, RestrictedVector)) for s in seqs):
            qs = {s.q for s in seqs}
            if len(qs) == 1:
                return cls.from_exponents([s.exponents for s in seqs], qs.pop(), name=name)
        return cls(np.stack([_as_vector(s) for s in seqs]), name=name)

    @property
    def flock_size(self) -> int:
        return self.values.shape[0]

    @property
    def length(self) -> int:
        return self.values.shape[1]

    @property
    def exact(self) -> bool:
        return np.issubdtype(self.values.dtype, np.integer)

    def __len__(self) -> int:
        return self.flock_size

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True, eq=False)
class CodeFamily:
    codes: tuple[CodeSet, ...]

    def __post_init__(self):
        codes = tuple(self.codes)
        shapes = {c.values.shape for c in codes}
        if len(shapes) > 1:
            raise ValueError(f"member sets disagree on (M, N): {sorted(shapes)}")
        object.__setattr__(self, "codes", codes)

    @property
    def set_size(self) -> int:
        return len(self.codes)

    @property
    def flock_size(self) -> int:
        return self.codes[0].flock_size

    @property
    def length(self) -> int:
        return self.codes[0].length

    @property
    def q(self) -> int | None:
        return self.codes[0].q

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)


def _profile(d, e, exact: bool) -> np.ndarray:
    return naive_full_accf(d, e) if exact else full_accf(d, e)


def aacs_profile(cs: CodeSet, exact: bool | None = None) -> np.ndarray:
    exact = cs.exact if exact is None else exact
    return sum(_profile(row, row, exact) for row in cs.values)


def accs_profile(a: CodeSet, b: CodeSet, exact: bool | None = None) -> np.ndarray:
    if a.values.shape != b.values.shape:
        raise ValueError(f"flock mismatch: {a.values.shape} vs {b.values.shape}")
    exact = (a.exact and b.exact) if exact is None else exact
    return sum(_profile(x, y, exact) for x, y in zip(a.values, b.values))


def aacs(cs: CodeSet, s: int):
    return sum(aacf(row, s) for row in cs.values)


def accs(a: CodeSet, b: CodeSet, s: int):
    """Index-paired cross-correlation sum: row ``n`` of ``a`` with row ``n`` of ``b``."""
    if a.values.shape != b.values.shape:
        raise ValueError(f"flock mismatch: {a.values.shape} vs {b.values.shape}")
    return sum(accf(x, y, s) for x, y in zip(a.values, b.values))


@dataclass
class CorrelationReport:
    kind: str
    passed: bool
    worst_shift: int | None
    worst_magnitude: float
    exact: bool
    tolerance: float
    failing_shifts: tuple[int, ...] = ()
    worst_pair: tuple[int, int] | None = None
    params: dict = field(default_factory=dict)
    experimental: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "worst_shift": self.worst_shift,
            "worst_magnitude": self.worst_magnitude,
            "exact": self.exact,
            "tolerance": self.tolerance,
            "failing_shifts": list(self.failing_shifts),
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
            "params": dict(self.params),
            "experimental": self.experimental,
            "note": self.note,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        p = self.params
        shape = ",".join(str(p[k]) for k in ("K", "M", "N") if k in p)
        line = f"{status} {self.kind} ({shape})"
        if not self.passed:
            line += f" worst |value|={self.worst_magnitude:g} at shift {self.worst_shift}"
            if self.worst_pair is not None:
                line += f" sets {self.worst_pair}"
        return line


class _Tracker:
    """Collects off-peak deviations across many profiles."""

    def __init__(self, n: int, tol: float):
        self.n, self.tol = n, tol
        self.worst = 0.0
        self.worst_shift: int | None = None
        self.worst_pair: tuple[int, int] | None = None
        self.failing: set[int] = set()

    def feed(self, profile: np.ndarray, pair=None, skip_zero: bool = True):
        mags = np.abs(profile).astype(float)
        if skip_zero:
            mags[self.n - 1] = 0.0
        bad = np.flatnonzero(mags > self.tol)
        self.failing.update(int(i) - (self.n - 1) for i in bad)
        i = int(np.argmax(mags))
        if mags[i] > self.worst:
            self.worst, self.worst_shift, self.worst_pair = float(mags[i]), i - (self.n - 1), pair


def _tolerance(exact: bool, m: int, n: int, tol: float | None) -> float:
    if tol is not None:
        return float(tol)
    return 0.0 if exact else 1e-9 * m * n


def verify_cs(cs: CodeSet, tol: float | None = None, kind: str = "CS") -> CorrelationReport:
    """AACS must vanish at every shift ``s != 0``."""
    if cs.flock_size < 1:
        raise ValueError("empty code set")
    exact = cs.exact
    t = _tolerance(exact, cs.flock_size, cs.length, tol)
    tr = _Tracker(cs.length, t)
    tr.feed(aacs_profile(cs, exact))
    return CorrelationReport(
        kind=kind,
        passed=not tr.failing,
        worst_shift=tr.worst_shift,
        worst_magnitude=tr.worst,
        exact=exact,
        tolerance=t,
        failing_shifts=tuple(sorted(tr.failing)),
        params={"M": cs.flock_size, "N": cs.length},
    )


def verify_gcp(pair, tol: float | None = None) -> CorrelationReport:
    cs = pair if isinstance(pair, CodeSet) else CodeSet.from_sequences(pair)
    if cs.flock_size != 2:
        raise ValueError(f"a pair has two sequences, got {cs.flock_size}")
    return verify_cs(cs, tol, kind="GCP")


def verify_mocs(family: CodeFamily, tol: float | None = None, kind: str = "MOCS") -> CorrelationReport:
    """Every member is a CS and every ordered pair of distinct members has
    zero cross-correlation sum at every shift (including 0)."""
    if not isinstance(family, CodeFamily):
        family = CodeFamily(tuple(family))
    exact = all(c.exact for c in family)
    m, n = family.flock_size, family.length
    t = _tolerance(exact, m, n, tol)
    tr = _Tracker(n, t)
    for p, cs in enumerate(family):
        tr.feed(aacs_profile(cs, exact), pair=(p, p))
    for p, a in enumerate(family):
        for pp, b in enumerate(family):
            if p != pp:
                tr.feed(accs_profile(a, b, exact), pair=(p, pp), skip_zero=False)
    q = family.q
    return CorrelationReport(
        kind=kind,
        passed=not tr.failing,
        worst_shift=tr.worst_shift,
        worst_magnitude=tr.worst,
        exact=exact,
        tolerance=t,
        failing_shifts=tuple(sorted(tr.failing)),
        worst_pair=tr.worst_pair,
        params={"K": family.set_size, "M": m, "N": n},
        experimental=q is not None and q != 2,
        note="non-binary family: verdict is experimental" if q not in (None, 2) else "",
    )


def verify_ccc(family: CodeFamily, tol: float | None = None) -> CorrelationReport:
    if not isinstance(family, CodeFamily):
        family = CodeFamily(tuple(family))
    report = verify_mocs(family, tol, kind="CCC")
    if family.set_size != family.flock_size:
        report.passed = False
        report.note = (report.note + "; " if report.note else "") + (
            f"set size {family.set_size} != flock size {family.flock_size}"
        )
    return report

