"""JSON and CSV code files.

JSON layout (version 1)::

    {
      "format": "truncgolay-codes", "version": 1,
      "kind": "pair" | "set" | "family",
      "q": 2, "set_size": K, "flock_size": M, "length": N,
      "params": {...construction parameters, informational...},
      "sets": [
        {"name": "S_0", "labels": [[a, a_0, ...], ...] | null,
         "exponents": [[e_0, ..., e_{N-1}], ...]},
        ...
      ]
    }

Exponents are the source of truth; ``null`` marks a structural zero of a
restricted vector.  The CSV export holds the complex image, one row per
sequence: ``set,row,v_0,...,v_{N-1}``.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path

import numpy as np

from .corr import CodeFamily, CodeSet

FORMAT = "truncgolay-codes"
VERSION = 1
KINDS = ("pair", "set", "family")


class FormatError(ValueError):
    pass


def _exponent_rows(cs: CodeSet) -> list[list[int | None]]:
    if cs.exponents is None:
        raise FormatError("only Z_q code sets can be written as JSON")
    return [[None if e < 0 else int(e) for e in row] for row in cs.exponents]


def to_json(codes, kind: str, params: dict | None = None) -> str:
    family = codes if isinstance(codes, CodeFamily) else CodeFamily((codes,))
    if kind not in KINDS:
        raise FormatError(f"kind must be one of {KINDS}")
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": kind,
        "q": family.q,
        "set_size": family.set_size,
        "flock_size": family.flock_size,
        "length": family.length,
        "params": params or {},
        "sets": [
            {
                "name": cs.name,
                "labels": [list(lab) for lab in cs.labels] if cs.labels else None,
                "exponents": _exponent_rows(cs),
            }
            for cs in family
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(path, codes, kind: str, params: dict | None = None) -> Path:
    path = Path(path)
    path.write_text(to_json(codes, kind, params))
    return path


def parse_json(text: str) -> tuple[str, CodeFamily, dict]:
    """Return ``(kind, family, doc)``; a single set comes back as a 1-member family."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise FormatError(f"missing or wrong 'format' (expected {FORMAT!r})")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    q = doc.get("q")
    if not isinstance(q, int) or q < 2 or q % 2:
        raise FormatError(f"q must be an even integer >= 2, got {q!r}")
    sets = doc.get("sets")
    if not isinstance(sets, list) or not sets:
        raise FormatError("'sets' must be a non-empty list")
    codes = []
    for i, entry in enumerate(sets):
        rows = entry.get("exponents") if isinstance(entry, dict) else None
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise FormatError(f"set {i}: 'exponents' must be a list of rows")
        lengths = {len(r) for r in rows}
        if len(lengths) != 1:
            raise FormatError(f"set {i}: ragged rows with lengths {sorted(lengths)}")
        try:
            e = np.array([[-1 if v is None else int(v) for v in r] for r in rows], dtype=np.int64)
        except (TypeError, ValueError):
            raise FormatError(f"set {i}: exponents must be integers or null") from None
        if np.any(e >= q) or np.any(e < -1):
            raise FormatError(f"set {i}: exponents out of range for q={q}")
        labels = entry.get("labels")
        labels = tuple(tuple(int(b) for b in lab) for lab in labels) if labels else None
        codes.append(CodeSet.from_exponents(e, q, labels, str(entry.get("name", ""))))
    try:
        family = CodeFamily(tuple(codes))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if kind == "pair" and (family.set_size != 1 or family.flock_size != 2):
        raise FormatError("a pair file holds one set of two sequences")
    if kind == "set" and family.set_size != 1:
        raise FormatError("a set file holds exactly one set")
    for key, actual in (("set_size", family.set_size), ("flock_size", family.flock_size), ("length", family.length)):
        if key in doc and doc[key] != actual:
            raise FormatError(f"header {key}={doc[key]} disagrees with data ({actual})")
    return kind, family, doc


def read_json(path) -> tuple[str, CodeFamily, dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(str(exc)) from None
    return parse_json(text)


def _fmt(v) -> str:
    if np.iscomplexobj(v):
        return f"{v.real:.17g}{v.imag:+.17g}j"
    return str(int(v))


def to_csv(codes) -> str:
    family = codes if isinstance(codes, CodeFamily) else CodeFamily((codes,))
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["set", "row"] + list(range(family.length)))
    for p, cs in enumerate(family):
        for r, row in enumerate(cs.values):
            w.writerow([cs.name or p, r] + [_fmt(v) for v in row])
    return buf.getvalue()


def write_csv(path, codes) -> Path:
    path = Path(path)
    path.write_text(to_csv(codes))
    return path


def parse_csv(text: str) -> CodeFamily:
    """Read a CSV export back into a family of complex (or integer) sets."""
    rows = list(csv.reader(_io.StringIO(text)))
    if len(rows) < 2 or rows[0][:2] != ["set", "row"]:
        raise FormatError("CSV needs a 'set,row,...' header and at least one row")
    groups: dict[str, list[list[str]]] = {}
    for line in rows[1:]:
        groups.setdefault(line[0], []).append(line[2:])
    codes = []
    for name, body in groups.items():
        lengths = {len(r) for r in body}
        if len(lengths) != 1:
            raise FormatError(f"set {name}: ragged rows")
        try:
            if all("j" not in v for r in body for v in r):
                vals = np.array([[int(v) for v in r] for r in body], dtype=np.int64)
            else:
                vals = np.array([[complex(v) for v in r] for r in body])
        except ValueError:
            raise FormatError(f"set {name}: unparseable value") from None
        codes.append(CodeSet(vals, name=name))
    try:
        return CodeFamily(tuple(codes))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
