"""Command-line front end.

Exit codes: 0 for success / a positive verdict, 1 for a negative verdict or
counterexample (including caps), 2 for usage or parse errors.  Reports are
deterministic JSON (CSV for the dimension table); wall-clock timing is
deliberately kept out of the payload so identical runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import docio
from .errors import (
    NotDistributive,
    OrdlatError,
    ParseError,
)
from .lattice import lattice_from_poset
from .duality import clopen_downset_lattice, prime_ideals, spec
from .poset import cube, down_sets, enumerate_posets
from .relation import (
    FIXED_POINT_MODES,
    cube_shift_check,
    dimension_report,
    find_fixed_points,
    relation_downset_iso,
    relation_image_witness,
    relation_lattice,
    relation_poset,
    verify_relation_primes,
)

SUITES = ("corollary", "lemma51", "fixedpoints", "shift", "dimtable")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordlat",
        description="finite posets, distributive lattices, and their duality",
    )
    p.add_argument("--max-size", type=int, default=1024,
                   help="cap on derived carrier sizes")
    p.add_argument("--max-dim-size", type=int, default=10,
                   help="cap on posets passed to the dimension search")
    p.add_argument("--threads", type=int, default=1,
                   help="worker count (execution is sequential; output is "
                        "identical for any value)")
    p.add_argument("--output", default=None, help="write the report here")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("check", "primes", "spec", "downsets", "image"):
        sp = sub.add_parser(name)
        sp.add_argument("input", help="poset document (JSON)")

    sp = sub.add_parser("phi")
    sp.add_argument("input")
    sp.add_argument("--as", dest="as_kind", choices=("poset", "lattice"),
                    default="poset")

    sp = sub.add_parser("experiments")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--n-max", type=int, default=4)

    sp = sub.add_parser("dot")
    sp.add_argument("input")
    sp.add_argument("--target", choices=("order", "hasse"), default="hasse")
    return p


def _config(args) -> dict:
    return {
        "max_size": args.max_size,
        "max_dim_size": args.max_dim_size,
        "threads": args.threads,
    }


def _report(args, result: dict, extra_args: dict | None = None) -> str:
    payload = {
        "command": args.command,
        "args": extra_args or {},
        "config": _config(args),
        "result": result,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return docio.parse_document(text)


def _witness_table(P, Q, witness) -> list[list[str]]:
    return [
        [P.labels[i], Q.labels[witness.forward[i]]] for i in range(P.n)
    ]


def cmd_check(args) -> tuple[str, int]:
    kind, P = _load(args.input)
    result: dict = {"kind": kind, "size": P.n}
    code = 0
    if kind == "lattice":
        try:
            lattice_from_poset(P)
            result["valid"] = True
            result["verdict"] = "valid lattice"
        except NotDistributive as exc:
            result["valid"] = False
            result["verdict"] = "NotDistributive"
            result["witness"] = list(exc.triple)
            code = 1
        except OrdlatError as exc:
            result["valid"] = False
            result["verdict"] = type(exc).__name__
            result["detail"] = str(exc)
            code = 1
    else:
        result["valid"] = True
        result["verdict"] = "valid poset"
    return _report(args, result, {"input": args.input}), code


def cmd_phi(args) -> tuple[str, int]:
    kind, P = _load(args.input)
    if args.as_kind == "lattice":
        L = lattice_from_poset(P)
        RL, prs = relation_lattice(L, max_size=args.max_size)
        doc = docio.poset_to_document(RL.order, kind="lattice")
    else:
        RP, prs = relation_poset(P, max_size=args.max_size)
        doc = docio.poset_to_document(RP, kind="poset")
    result = {
        "document": doc,
        "pairs": [list(pr) for pr in prs],
        "size": doc["size"],
    }
    return _report(args, result, {"input": args.input, "as": args.as_kind}), 0


def cmd_primes(args) -> tuple[str, int]:
    _, P = _load(args.input)
    L = lattice_from_poset(P)
    ideals = prime_ideals(L)
    result = {
        "count": len(ideals),
        "prime_ideals": [I.elements() for I in ideals],
    }
    return _report(args, result, {"input": args.input}), 0


def cmd_spec(args) -> tuple[str, int]:
    _, P = _load(args.input)
    L = lattice_from_poset(P)
    S = spec(L)
    result = {
        "document": docio.poset_to_document(S),
        "prime_ideals": [I.elements() for I in prime_ideals(L)],
    }
    return _report(args, result, {"input": args.input}), 0


def cmd_downsets(args) -> tuple[str, int]:
    _, P = _load(args.input)
    E = clopen_downset_lattice(P)
    result = {
        "document": docio.poset_to_document(E.order, kind="lattice"),
        "down_sets": [
            [x for x in range(P.n) if (m >> x) & 1] for m in down_sets(P)
        ],
    }
    return _report(args, result, {"input": args.input}), 0


def cmd_image(args) -> tuple[str, int]:
    _, P = _load(args.input)
    L = lattice_from_poset(P)
    found = relation_image_witness(L, max_size=args.max_size)
    if found is None:
        X = spec(L)
        reason = (
            f"spectrum has odd size {X.n}"
            if X.n % 2
            else "no factorization of the spectrum into a half times 2"
        )
        return _report(
            args, {"in_image": False, "reason": reason}, {"input": args.input}
        ), 1
    K, w = found
    RK, _ = relation_lattice(K, max_size=args.max_size)
    result = {
        "in_image": True,
        "witness_for_K": docio.poset_to_document(K.order, kind="lattice"),
        "iso": _witness_table(RK.order, L.order, w),
    }
    return _report(args, result, {"input": args.input}), 0


def _suite_corollary(n_max: int, max_size: int) -> tuple[dict, int]:
    checked = 0
    failures = []
    for size in range(1, n_max + 1):
        for idx, P in enumerate(enumerate_posets(size)):
            try:
                L = lattice_from_poset(P)
            except OrdlatError:
                continue
            checked += 1
            if not verify_relation_primes(L, max_size=max_size):
                failures.append(f"n{size}#{idx:03d}")
    result = {"checked": checked, "failures": failures,
              "all_pass": not failures}
    return result, 0 if not failures else 1


def _suite_lemma51(n_max: int, max_size: int) -> tuple[dict, int]:
    checked = []
    for size in range(1, n_max + 1):
        for idx, X in enumerate(enumerate_posets(size)):
            relation_downset_iso(X, max_size=max_size)
            checked.append(f"n{size}#{idx:03d}")
    return {"checked": checked, "all_pass": True}, 0


def _suite_fixedpoints(n_max: int, max_size: int) -> tuple[dict, int]:
    out = {}
    for mode in FIXED_POINT_MODES:
        rep = find_fixed_points(n_max, mode)
        out[mode] = {"hits": list(rep.hits), "expectation": rep.expectation}
    return {"modes": out, "all_pass": True}, 0


def _suite_shift(n_max: int, max_size: int) -> tuple[dict, int]:
    results = {}
    ok = True
    for n in range(0, min(n_max, 3) + 1):
        passed = cube_shift_check(n)
        pairs = clopen_downset_lattice(cube(n)).order.relation_count()
        results[str(n)] = {"pass": passed, "comparable_pairs": pairs}
        ok = ok and passed
    return {"cases": results, "all_pass": ok}, 0 if ok else 1


def _suite_dimtable(n_max: int, max_dim_size: int) -> str:
    rows = dimension_report(n_max, dim_cap=max_dim_size)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "size", "dim", "dim_rel", "width", "width_rel"])
    for r in rows:
        writer.writerow(
            [r["id"], r["size"], r["dim"], r["dim_rel"], r["width"], r["width_rel"]]
        )
    return buf.getvalue()


def cmd_experiments(args) -> tuple[str, int]:
    extra = {"suite": args.suite, "n_max": args.n_max}
    if args.suite == "dimtable":
        return _suite_dimtable(args.n_max, args.max_dim_size), 0
    if args.suite == "corollary":
        result, code = _suite_corollary(args.n_max, args.max_size)
    elif args.suite == "lemma51":
        result, code = _suite_lemma51(args.n_max, args.max_size)
    elif args.suite == "fixedpoints":
        result, code = _suite_fixedpoints(args.n_max, args.max_size)
    else:
        result, code = _suite_shift(args.n_max, args.max_size)
    return _report(args, result, extra), code


def cmd_dot(args) -> tuple[str, int]:
    _, P = _load(args.input)
    return docio.dot_export(P, target=args.target), 0


HANDLERS = {
    "check": cmd_check,
    "phi": cmd_phi,
    "primes": cmd_primes,
    "spec": cmd_spec,
    "downsets": cmd_downsets,
    "image": cmd_image,
    "experiments": cmd_experiments,
    "dot": cmd_dot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        text, code = HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrdlatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
