"""Command-line interface.

Exit codes: 0 all claimed properties hold, 1 a property check failed,
2 invalid configuration or malformed input file.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import codefile
from .construct import (
    FAMILIES,
    PRESETS,
    REPAIRED,
    TEN,
    VERBATIM,
    ConstructionError,
    ConstructionSpec,
    ccc,
    low_variable_count,
    min_m,
    mocs_family,
    offset_family,
    construct_pair,
)
from .corr import CodeFamily, CodeSet, verify_ccc, verify_cs, verify_gcp, verify_mocs
from .pmepr import DEFAULT_OVERSAMPLING, column_pmepr, row_pmepr
from .quadgraph import graph_of, path_reducing_victims

OUTPUT_ENV = "TRUNCGOLAY_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _quad(text: str | None, q: int) -> tuple[tuple[int, int, int], ...] | None:
    """``"0-1,1-2:3"``: edges ``i-j`` with optional coefficient (default q/2)."""
    if text is None:
        return None
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        edge, _, coeff = item.partition(":")
        try:
            i, j = sorted(int(v) for v in edge.split("-"))
            out.append((i, j, int(coeff) if coeff else q // 2))
        except ValueError:
            raise UsageError(f"bad quadratic term {item!r}; use i-j or i-j:c") from None
    return tuple(out)


def spec_from_args(args) -> ConstructionSpec:
    if args.preset:
        if args.preset not in PRESETS:
            raise UsageError(f"unknown preset {args.preset!r}; choose from {sorted(PRESETS)}")
        base = PRESETS[args.preset]
        fields = {}
    else:
        base = None
        fields = {"family": args.family or TEN}
    family = args.family or (base.family if base else TEN)
    if args.m is not None:
        if args.m < min_m(family):
            raise UsageError(f"m must be >= {min_m(family)} for the {family} family")
        fields["m"] = args.m
    q = args.q if args.q is not None else (base.q if base else 2)
    for name, value in (
        ("family", args.family),
        ("q", args.q),
        ("quadratic", _quad(args.quad, q)),
        ("linear", _ints(args.linear)),
        ("constant", args.constant),
        ("victims", _ints(args.victims)),
        ("bits", _ints(args.bits)),
        ("beta1", args.beta1),
        ("c_prime", getattr(args, "c_prime", None)),
        ("variant", args.variant),
    ):
        if value is not None:
            fields[name] = value
    if base is None and "m" not in fields:
        raise UsageError("--m is required without --preset")
    k = getattr(args, "k", None)
    try:
        if base is not None:
            spec = replace(base, **fields)
        else:
            if k is not None and "victims" not in fields:
                fields["victims"] = _pick_victims(fields, q, k)
            spec = ConstructionSpec(**fields)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from None
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    if k is not None and spec.k != k:
        raise UsageError(f"--k {k} disagrees with {spec.k} victims {list(spec.victims)}")
    return spec


def _pick_victims(fields: dict, q: int, k: int) -> tuple[int, ...]:
    n = low_variable_count(fields["family"], fields["m"])
    graph = graph_of(fields.get("quadratic", ()), n, q)
    options = [v for v in path_reducing_victims(graph, k) if len(v) == k]
    if not options:
        raise UsageError(f"no set of {k} vertices reduces the quadratic graph to a path")
    return options[0]


def _params(spec: ConstructionSpec) -> dict:
    return {
        "family": spec.family,
        "m": spec.m,
        "q": spec.q,
        "quadratic": [list(t) for t in spec.quadratic],
        "linear": list(spec.linear),
        "constant": spec.constant,
        "victims": list(spec.victims),
        "bits": list(spec.bits),
        "beta1": spec.ends[0],
        "beta2": spec.ends[1],
        "c_prime": spec.c_prime,
        "variant": spec.variant,
    }


def _out_dir(args) -> Path:
    out = Path(args.out or os.environ.get(OUTPUT_ENV) or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _emit(payload: dict, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _pmepr_summary(family: CodeFamily, oversampling: int) -> dict:
    rows = [row_pmepr(cs, oversampling) for cs in family]
    cols = [column_pmepr(cs, oversampling) for cs in family]
    return {
        "oversampling": oversampling,
        "row_max": max(r.max for r in rows),
        "row_bound": rows[0].bound,
        "rows_over_bound": sum(len(r.exceeding) for r in rows),
        "rows_over_stated_bound": sum(len(r.exceeding_stated) for r in rows),
        "column_max": max(c.max for c in cols),
        "column_bound": cols[0].bound,
        "columns_over_bound": sum(len(c.exceeding) for c in cols),
        "note": rows[0].note,
    }


def _gcp_artifact(spec: ConstructionSpec):
    pair = CodeSet.from_sequences(construct_pair(spec), name="pair")
    return pair, verify_gcp(pair)


def cmd_gen_gcp(args) -> int:
    spec = spec_from_args(args)
    pair, report = _gcp_artifact(spec)
    out = _out_dir(args)
    stem = args.preset or f"gcp_{spec.family}_m{spec.m}"
    files = [codefile.write_json(out / f"{stem}.json", pair, "pair", _params(spec))]
    if args.format == "csv":
        files.append(codefile.write_csv(out / f"{stem}.csv", pair))
    _emit({"files": [str(f) for f in files], "report": report.to_dict(), "summary": report.summary()})
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen_ccc(args) -> int:
    spec = spec_from_args(args)
    family = ccc(spec)
    report = verify_ccc(family)
    out = _out_dir(args)
    stem = args.preset or f"ccc_{spec.family}_m{spec.m}_k{spec.k}"
    files = [codefile.write_json(out / f"{stem}.json", family, "family", _params(spec))]
    if args.format == "csv":
        files.append(codefile.write_csv(out / f"{stem}.csv", family))
    payload = {"report": report.to_dict(), "summary": report.summary()}
    ok = report.passed
    if args.perm is not None:
        perm = _ints(args.perm)
        try:
            shifted = offset_family(family, perm, args.through_flock_bit)
        except ConstructionError as exc:
            raise UsageError(str(exc)) from None
        off_report = verify_ccc(shifted)
        params = dict(_params(spec), offset_perm=list(perm), through_flock_bit=args.through_flock_bit)
        files.append(codefile.write_json(out / f"{stem}_offset.json", shifted, "family", params))
        if args.format == "csv":
            files.append(codefile.write_csv(out / f"{stem}_offset.csv", shifted))
        payload["offset_report"] = off_report.to_dict()
        payload["offset_pmepr"] = _pmepr_summary(shifted, args.oversample)
        ok = ok and off_report.passed
    payload["pmepr"] = _pmepr_summary(family, args.oversample)
    payload["files"] = [str(f) for f in files]
    _emit(payload)
    return EXIT_OK if ok else EXIT_FAIL


def verify_loaded(kind: str, family: CodeFamily, tol: float | None = None):
    if kind == "pair":
        return verify_gcp(family.codes[0], tol)
    if kind == "set":
        return verify_cs(family.codes[0], tol)
    if family.set_size == family.flock_size:
        return verify_ccc(family, tol)
    return verify_mocs(family, tol)


def _load(path: str) -> tuple[str, CodeFamily]:
    if str(path).endswith(".csv"):
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise codefile.FormatError(str(exc)) from None
        family = codefile.parse_csv(text)
        kind = "family" if family.set_size > 1 else ("pair" if family.flock_size == 2 else "set")
        return kind, family
    kind, family, _ = codefile.read_json(path)
    return kind, family


def cmd_verify(args) -> int:
    kind, family = _load(args.input)
    report = verify_loaded(kind, family, args.tol)
    _emit({"input": str(args.input), "structure": kind, "report": report.to_dict(), "summary": report.summary()})
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_pmepr(args) -> int:
    if args.oversample == 1:
        print("warning: --oversample 1 samples only the subcarrier grid; peaks may be badly underestimated",
              file=sys.stderr)
    if args.oversample < 1:
        raise UsageError("--oversample must be >= 1")
    kind, family = _load(args.input)
    sets = []
    for p, cs in enumerate(family):
        sets.append({
            "set": cs.name or p,
            "rows": row_pmepr(cs, args.oversample).to_dict(),
            "columns": column_pmepr(cs, args.oversample, args.column_bound).to_dict(),
        })
    summary = _pmepr_summary(family, args.oversample)
    _emit({"input": str(args.input), "structure": kind, "sets": sets, "summary": summary})
    return EXIT_OK


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def run_demo(out: Path, oversampling: int = DEFAULT_OVERSAMPLING) -> dict:
    """Rebuild the four reference examples, verify them and write a manifest."""
    entries = []

    def record(name, kind, codes, report, params, extra=None):
        path = codefile.write_json(out / f"{name}.json", codes, kind, params)
        entry = {
            "name": name,
            "file": path.name,
            "sha256": _sha256(path),
            "structure": kind,
            "passed": report.passed,
            "summary": report.summary(),
            "report": report.to_dict(),
        }
        entry.update(extra or {})
        return entry

    ex1 = PRESETS["example1"]
    pair, rep = _gcp_artifact(ex1)
    entries.append(record("example1_gcp", "pair", pair, rep, _params(ex1), {"length": pair.length}))

    ex2 = PRESETS["example2"]
    fam2 = mocs_family(ex2)
    rep2 = verify_mocs(fam2)
    entries.append(record("example2_mocs", "family", fam2, rep2, _params(ex2), {"length": fam2.length}))

    ex3 = PRESETS["example3"]
    fam3 = ccc(ex3)
    rep3 = verify_ccc(fam3)
    entries.append(record("example3_ccc", "family", fam3, rep3, _params(ex3), {"length": fam3.length}))

    ex4 = PRESETS["example4"]
    fam4 = ccc(ex4)
    rep4 = verify_ccc(fam4)
    entries.append(record("example4_ccc", "family", fam4, rep4, _params(ex4), {"length": fam4.length}))

    supplementary = []
    ex4r = replace(ex4, variant=REPAIRED)
    fam4r = ccc(ex4r)
    supplementary.append(
        record("example4_ccc_repaired", "family", fam4r, verify_ccc(fam4r), _params(ex4r), {"length": fam4r.length})
    )
    for through in (False, True):
        shifted = offset_family(fam3, (0, 1), through)
        name = "example3_ccc_offset" + ("_through_flock_bit" if through else "")
        params = dict(_params(ex3), offset_perm=[0, 1], through_flock_bit=through)
        supplementary.append(
            record(name, "family", shifted, verify_ccc(shifted), params,
                   {"length": shifted.length, "pmepr": _pmepr_summary(shifted, oversampling)})
        )

    passed = sum(e["passed"] for e in entries)
    manifest = {
        "examples": entries,
        "supplementary": supplementary,
        "passed": passed,
        "total": len(entries),
        "lengths": [e["length"] for e in entries],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest


def cmd_demo(args) -> int:
    out = _out_dir(args)
    manifest = run_demo(out, args.oversample)
    for e in manifest["examples"] + manifest["supplementary"]:
        print(f"{e['name']:40s} {e['summary']}")
    print(f"{manifest['passed']}/{manifest['total']} examples pass; manifest at {out / 'manifest.json'}")
    return EXIT_OK if manifest["passed"] == manifest["total"] else EXIT_FAIL


def _add_spec_args(p: argparse.ArgumentParser, with_c_prime: bool):
    p.add_argument("--preset", help=f"one of {sorted(PRESETS)}")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, help="number of deleted vertices (picked automatically without --victims)")
    p.add_argument("--victims", help="deleted vertices, e.g. 0,3")
    p.add_argument("--quad", help="quadratic edges, e.g. 0-1,1-2 or 0-1:3")
    p.add_argument("--linear", help="linear coefficients c_0,...")
    p.add_argument("--constant", type=int)
    p.add_argument("--bits", help="fixed bits of the deleted variables")
    p.add_argument("--beta1", type=int, help="path end used inside the base function")
    p.add_argument("--variant", choices=(VERBATIM, REPAIRED),
                   help="thirteen-family block: original form or repaired form")
    if with_c_prime:
        p.add_argument("--c-prime", dest="c_prime", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="csv also writes the complex image next to the JSON file")
    p.add_argument("--out", help=f"output directory (default ${OUTPUT_ENV} or .)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncgolay", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-gcp", help="build and verify a Golay complementary pair")
    _add_spec_args(p, with_c_prime=True)
    p.set_defaults(func=cmd_gen_gcp)

    p = sub.add_parser("gen-ccc", help="build and verify a complete complementary code")
    _add_spec_args(p, with_c_prime=False)
    p.add_argument("--perm", help="offset permutation of range(k), e.g. 1,0")
    p.add_argument("--through-flock-bit", action="store_true",
                   help="extend the offset chain through the flock bit a")
    p.add_argument("--oversample", type=int, default=DEFAULT_OVERSAMPLING)
    p.set_defaults(func=cmd_gen_ccc)

    p = sub.add_parser("verify", help="verify a code file")
    p.add_argument("input")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pmepr", help="row and column PMEPR of a code file")
    p.add_argument("input")
    p.add_argument("--oversample", type=int, default=DEFAULT_OVERSAMPLING)
    p.add_argument("--column-bound", type=float, default=2.0)
    p.set_defaults(func=cmd_pmepr)

    p = sub.add_parser("demo", help="rebuild and verify the reference examples")
    p.add_argument("--out")
    p.add_argument("--oversample", type=int, default=DEFAULT_OVERSAMPLING)
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, codefile.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
