"""Command-line front end.

Subcommands: build, dl, gamma, gamma-prime, bounds, rm-table, verify.
Code inputs come either from a JSON spec file (--spec) or a named family
(--family plus parameters).  Every numeric output carries the exact form
(num/den/root) next to a decimal rendering.  Sublattice search results are
cached on disk keyed by the canonical HNF basis and rank.

Exit codes: 0 success, 1 verify failures, 2 unusable input (parse error or
rank deficiency), 3 infeasible search (enumeration cap exceeded).
"""

from __future__ import annotations

import argparse
import csv as _csv
import hashlib
import io
import json
import os
import sys
import tempfile

from . import __version__
from .codes import (
    code_document,
    code_from_document,
    extended_hamming_code,
    full_code,
    is_self_dual,
    parity_check_code,
    reed_muller_code,
    reed_muller_generators,
    zero_code,
)
from .enumeration import EnumerationCap
from .exact import Radical
from .invariants import (
    berge_martinet_invariant,
    propagate_bounds,
    rankin_invariant,
    standard_seeds,
)
from .lattices import (
    IntegralLattice,
    RankDeficient,
    construction_a,
    det_int,
    gram_matrix,
    lattice_document,
    sublattice_from_rows,
)
from .sublattice_search import SearchCertificate, minimal_sublattice
from .verify import render_report, run_checks

EXIT_OK = 0
EXIT_CHECK_FAILURES = 1
EXIT_BAD_INPUT = 2
EXIT_INFEASIBLE = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _radical_doc(value: Radical, precision: int) -> dict:
    num, den, root = value.as_triple()
    return {
        "num": num,
        "den": den,
        "root": root,
        "decimal": value.to_decimal(precision),
    }


# -- input resolution -------------------------------------------------------


def _resolve_target(args) -> tuple[object | None, IntegralLattice]:
    """(code or None, lattice) from --spec or --family arguments."""
    if args.spec:
        try:
            with open(args.spec, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot parse spec file: {exc}", EXIT_BAD_INPUT)
        if "rows" in doc:
            try:
                lat = IntegralLattice.from_rows(doc["rows"])
            except RankDeficient as exc:
                raise CliError(
                    f"rank-deficient rows: rank {exc.rank} < {exc.needed}",
                    EXIT_BAD_INPUT,
                )
            except (TypeError, ValueError) as exc:
                raise CliError(f"bad rows document: {exc}", EXIT_BAD_INPUT)
            return None, lat
        try:
            code = code_from_document(doc)
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"bad code document: {exc}", EXIT_BAD_INPUT)
        return code, construction_a(code)
    if args.family:
        try:
            if args.family == "parity_check":
                code = parity_check_code(args.n, args.q)
            elif args.family == "reed_muller":
                code = reed_muller_code(args.r, args.m)
            elif args.family == "extended_hamming":
                code = extended_hamming_code()
            elif args.family == "full":
                code = full_code(args.n, args.q)
            elif args.family == "zero":
                code = zero_code(args.n, args.q)
            else:
                raise ValueError(f"unknown family {args.family}")
        except (TypeError, ValueError) as exc:
            raise CliError(f"bad family parameters: {exc}", EXIT_BAD_INPUT)
        return code, construction_a(code)
    raise CliError("need --spec or --family", EXIT_BAD_INPUT)


# -- certificate cache ------------------------------------------------------


def _cache_dir(args) -> str:
    if args.cache:
        return args.cache
    env = os.environ.get("CODELATTICE_CACHE")
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache"))
    return os.path.join(base, "codelattice")


def _cache_key(lattice: IntegralLattice, l: int) -> str:
    blob = json.dumps([list(r) for r in lattice.basis] + [l], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_path(cache_dir: str, key: str) -> str:
    return os.path.join(cache_dir, key[:2], key + ".json")


def _cache_load(cache_dir, lattice, l) -> SearchCertificate | None:
    path = _cache_path(cache_dir, _cache_key(lattice, l))
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        rows = [list(map(int, r)) for r in doc["witness_rows"]]
        value = int(doc["value"])
        witness = sublattice_from_rows(lattice, rows)  # re-validates membership
        if witness.det_l != value or int(doc["l"]) != l:
            raise ValueError("certificate does not match its lattice")
        return SearchCertificate(
            l,
            value,
            witness,
            int(doc["per_vector_bound"]),
            int(doc["candidates_examined"]),
            bool(doc["confirmed_by_escalation"]),
        )
    except FileNotFoundError:
        return None
    except Exception as exc:
        print(f"warning: ignoring corrupt cache entry {path}: {exc}", file=sys.stderr)
        return None


def _cache_store(cache_dir, lattice, cert: SearchCertificate) -> None:
    key = _cache_key(lattice, cert.l)
    path = _cache_path(cache_dir, key)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    doc = {
        "key": key,
        "l": cert.l,
        "value": cert.value,
        "witness_rows": [list(r) for r in cert.witness.rows],
        "per_vector_bound": cert.per_vector_bound,
        "candidates_examined": cert.candidates_examined,
        "confirmed_by_escalation": cert.confirmed_by_escalation,
        "tool_version": __version__,
    }
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(_canonical_json(doc))
        os.replace(tmp, path)  # atomic publish
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _searched(args, lattice, l, hint) -> tuple[SearchCertificate, bool]:
    cache_dir = _cache_dir(args)
    cert = _cache_load(cache_dir, lattice, l)
    if cert is not None:
        return cert, True
    try:
        cert = minimal_sublattice(
            lattice, l, upper_hint=hint, cap=args.max_candidates, threads=args.threads
        )
    except EnumerationCap as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE)
    _cache_store(cache_dir, lattice, cert)
    return cert, False


# -- output -----------------------------------------------------------------


def _emit(args, doc: dict, csv_fields: list[str] | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(_canonical_json(doc))
    elif args.format == "csv":
        flat = _flatten(doc)
        fields = csv_fields or sorted(flat)
        buf = io.StringIO()
        w = _csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore")
        w.writeheader()
        w.writerow(flat)
        sys.stdout.write(buf.getvalue())
    else:
        for line in _text_lines(doc):
            print(line)


def _flatten(doc, prefix="") -> dict:
    out = {}
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out


def _text_lines(doc, indent=0):
    pad = "  " * indent
    for k, v in doc.items():
        if isinstance(v, dict):
            yield f"{pad}{k}:"
            yield from _text_lines(v, indent + 1)
        elif isinstance(v, list) and v and isinstance(v[0], (list, dict)):
            yield f"{pad}{k}:"
            for item in v:
                if isinstance(item, dict):
                    yield from _text_lines(item, indent + 1)
                    yield ""
                else:
                    yield f"{pad}  {item}"
        else:
            yield f"{pad}{k}: {v}"


# -- subcommands ------------------------------------------------------------


def _cmd_build(args) -> int:
    code, lat = _resolve_target(args)
    doc = {"lattice": lattice_document(lat)}
    if code is not None:
        doc["code"] = code_document(code)
        doc["cardinality"] = code.cardinality
    _emit(args, doc)
    return EXIT_OK


def _cmd_dl(args) -> int:
    code, lat = _resolve_target(args)
    hint = code.q ** (2 * args.l) if code is not None else None
    cert, cached = _searched(args, lat, args.l, hint)
    doc = {
        "l": cert.l,
        "value": cert.value,
        "value_exact": _radical_doc(Radical(cert.value), args.precision),
        "witness_rows": [list(r) for r in cert.witness.rows],
        "per_vector_bound": cert.per_vector_bound,
        "candidates_examined": cert.candidates_examined,
        "confirmed_by_escalation": cert.confirmed_by_escalation,
        "cached": cached,
    }
    _emit(args, doc)
    return EXIT_OK


def _cmd_gamma(args) -> int:
    code, lat = _resolve_target(args)
    hint = code.q ** (2 * args.l) if code is not None else None
    cert, cached = _searched(args, lat, args.l, hint)
    value = rankin_invariant(lat, cert)
    doc = {
        "kind": "rankin",
        "n": lat.n,
        "l": args.l,
        "value": _radical_doc(value, args.precision),
        "d_l": cert.value,
        "det_gram": lat.det_gram,
        "cached": cached,
    }
    _emit(args, doc)
    return EXIT_OK


def _cmd_gamma_prime(args) -> int:
    code, lat = _resolve_target(args)
    if code is None:
        raise CliError("gamma-prime needs a code input, not raw rows", EXIT_BAD_INPUT)

    def search(lattice, l, hint):
        cert, _ = _searched(args, lattice, l, hint)
        return cert

    try:
        value = berge_martinet_invariant(code, args.l, search=search)
    except EnumerationCap as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE)
    doc = {
        "kind": "berge_martinet",
        "n": code.n,
        "l": args.l,
        "value": _radical_doc(value, args.precision),
        "self_dual": is_self_dual(code),
    }
    _emit(args, doc)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    seeds = standard_seeds(args.n_max, threads=args.threads)
    result = propagate_bounds(args.n_max, seeds, rules=args.rules)
    rows = []
    for (kind, n, l), cell in sorted(result.cells.items()):
        rows.append(
            {
                "kind": kind,
                "n": n,
                "l": l,
                "lower": _radical_doc(cell.lower, args.precision),
                "upper": None if cell.upper is None else _radical_doc(cell.upper, args.precision),
                "exact": cell.is_exact(),
                "provenance": cell.provenance,
            }
        )
    doc = {"n_max": args.n_max, "rules": args.rules, "cells": rows}
    if args.format == "csv":
        lines = ["kind,n,l,lower,upper,exact"]
        for r in rows:
            upper = "" if r["upper"] is None else r["upper"]["decimal"]
            lines.append(
                f"{r['kind']},{r['n']},{r['l']},{r['lower']['decimal']},{upper},{r['exact']}"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(args, doc)
    return EXIT_OK


def _cmd_rm_table(args) -> int:
    rows = []
    for m in range(1, args.m_max + 1):
        for r in range(0, m):
            gens = reed_muller_generators(r, m)
            k = len(gens)
            n = 1 << m
            lat = construction_a(reed_muller_code(r, m))
            rows.append(
                {
                    "m": m,
                    "r": r,
                    "k": k,
                    "det_rows": det_int(gram_matrix(gens)),
                    "det_lattice": lat.det_gram,
                    "det_lattice_formula": (2 ** (n - k)) ** 2,
                }
            )
    if args.format == "csv":
        lines = ["m,r,k,det_rows,det_lattice,det_lattice_formula"]
        for row in rows:
            lines.append(",".join(str(row[c]) for c in ("m", "r", "k", "det_rows", "det_lattice", "det_lattice_formula")))
        sys.stdout.write("\n".join(lines) + "\n")
    elif args.format == "json":
        sys.stdout.write(_canonical_json({"rows": rows}))
    else:
        print("m r k det_rows det_lattice")
        for row in rows:
            print(f"{row['m']} {row['r']} {row['k']} {row['det_rows']} {row['det_lattice']}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    overrides = {"threads": args.threads, "cap": args.max_candidates}
    if args.random_codes is not None:
        overrides["random_codes"] = args.random_codes
    results = run_checks(args.filter, **overrides)
    sys.stdout.write(render_report(results, args.format))
    failures = sum(1 for r in results if r.status == "fail")
    return EXIT_CHECK_FAILURES if failures else EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--precision", type=int, default=6, help="decimal display digits")
    p.add_argument("--cache", default=None, help="certificate cache directory")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-candidates", type=int, default=10_000_000)


def _add_code_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", default=None, help="JSON code document or {'rows': ...}")
    p.add_argument(
        "--family",
        choices=("parity_check", "reed_muller", "extended_hamming", "full", "zero"),
        default=None,
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--m", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="codelattice",
        description="Exact lattices from linear codes and their invariants.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a lattice and print its canonical form")
    _add_common(p)
    _add_code_input(p)
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("dl", help="minimal rank-l sublattice determinant")
    _add_common(p)
    _add_code_input(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_dl)

    p = sub.add_parser("gamma", help="Rankin invariant of the code lattice")
    _add_common(p)
    _add_code_input(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("gamma-prime", help="Berge-Martinet invariant via the dual code")
    _add_common(p)
    _add_code_input(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_gamma_prime)

    p = sub.add_parser("bounds", help="exact interval table for the constants")
    _add_common(p)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--rules", choices=("published", "full"), default="published")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("rm-table", help="Reed-Muller determinant table")
    _add_common(p)
    p.add_argument("--m-max", type=int, default=5)
    p.set_defaults(fn=_cmd_rm_table)

    p = sub.add_parser("verify", help="run the reproduction checks")
    _add_common(p)
    p.add_argument("--filter", default=None)
    p.add_argument("--random-codes", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except RankDeficient as exc:
        print(f"error: rank-deficient input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except EnumerationCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
