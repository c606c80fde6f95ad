"""Command-line front end: ``qverona <command> --n N --m M --v V ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import numpy as np

from . import autos
from .basis import enumerate_basis, star
from .center import central_mask, central_monomials_up_to, in_M_array
from .discriminant import (
    basis_discriminant,
    basis_elements,
    discriminant_report,
    equal_up_to_unit,
    gram_discriminant,
    p_power_discriminant,
)
from .skew_ring import RingParams, veronese_monomials_up_to

SCHEMA = "qverona/1"


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text else []


def _params(args) -> RingParams:
    return RingParams(args.n, args.m, args.v)


def cmd_center(args) -> tuple[dict, bool]:
    P = _params(args)
    D = 2 * P.v if args.deg is None else args.deg
    mons = central_monomials_up_to(D, P)
    S = np.array(veronese_monomials_up_to(D, P), dtype=np.int64)
    agree = bool((in_M_array(S, P) == central_mask(S, P)).all())
    return {"deg": D, "monomials": [list(s) for s in mons], "oracle_agreement": agree}, agree


def cmd_basis(args) -> tuple[dict, bool]:
    Q = enumerate_basis(_params(args))
    return {
        "w": Q.w,
        "representatives": [list(b) for b in Q.reps],
        "star": [star(i, Q) for i in range(Q.w)],
    }, True


def cmd_discriminant(args) -> tuple[dict, bool]:
    P = _params(args)
    rep = discriminant_report(P, args.p, args.check_theorem, args.stability or 0)
    ok = True
    if args.check_theorem and rep["hypothesis"]:
        ok = rep["theorem_match"] and rep["flag"]
    if args.stability and rep.get("stability") is False:
        ok = False
    for k in ("n", "m", "v"):
        rep.pop(k)
    return rep, ok


def _auto_cases(P: RingParams) -> list[tuple[str, autos.AutoSpec]]:
    cases: list[tuple[str, autos.AutoSpec]] = [
        (f"scaling[{i}]", g) for i, g in enumerate(autos.sample_scalings(P))
    ]
    if P.m <= 2:
        cases += [(f"permutation{list(g.perm)}", g) for g in autos.all_permutations(P)]
    if (2 * P.v) % P.m == 0:
        cases += [(f"twisted_shift[{g.shift}]", g) for g in autos.all_twisted_shifts(P)]
    try:
        g1, g2 = autos.free_generators(P)
        cases += [("exp_d1", g1), (f"exp_{g2.d.name}", g2)]
    except autos.InapplicableAutomorphism:
        pass
    return cases


def cmd_auto_verify(args) -> tuple[dict, bool]:
    P = _params(args)
    D = 4 * P.v if args.deg is None else args.deg
    if D < 2 * P.v:
        raise ValueError("--deg must be at least 2v")
    Q = enumerate_basis(P)
    witness_ok = p_power_discriminant(args.p, Q).in_veronese_flag
    results, ok = [], True
    for name, g in _auto_cases(P):
        hom = autos.verify_homomorphism(g, D)
        inv = autos.check_discriminant_invariance(g, Q, args.p) if witness_ok else None
        ok = ok and hom and inv is not False
        results.append({"auto": name, "homomorphism": hom, "discriminant_invariant": inv})
    return {"deg": D, "p": args.p, "automorphisms": results}, ok


def cmd_free_check(args) -> tuple[dict, bool]:
    P = _params(args)
    if not ((P.odd and P.g == 1) or (P.n == 2 and P.v % P.m == 0)):
        raise ValueError(
            "free-check needs gcd(m, v) = 1 with n odd, or n = 2 with m dividing v"
        )
    g1, g2 = autos.free_generators(P)
    D = 4 * P.v if args.deg is None else args.deg
    words = autos.reduced_words(args.maxlen)
    bad = autos.free_word_check(g1, g2, args.maxlen, D)
    return {
        "deg": D,
        "maxlen": args.maxlen,
        "words_checked": len(words),
        "collapsing": [autos.word_label(w) for w in bad],
    }, not bad


def run_cell(cell: tuple[int, int, int, int], stability: int = 3) -> dict:
    """All per-cell checks of the theorem grid."""
    n, m, v, p = cell
    t0 = time.perf_counter()
    P = RingParams(n, m, v)
    Q = enumerate_basis(P)
    rep = discriminant_report(P, p, True, 0)
    out = {"n": n, "m": m, "v": v, "p": p, "w": Q.w, "flag": rep["flag"]}
    if not rep["hypothesis"]:
        out["status"] = "skipped"
    else:
        B = basis_elements(Q)
        checks = {
            "theorem": rep["theorem_match"] and rep["flag"],
            "gram": equal_up_to_unit(gram_discriminant(B, B, Q), basis_discriminant(Q)),
            "stability": discriminant_report(P, p, False, stability)["stability"] is True,
        }
        out["exponent"] = rep["exponent"]
        out["checks"] = checks
        out["status"] = "pass" if all(checks.values()) else "fail"
    out["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def cmd_verify_all(args) -> tuple[dict, bool]:
    grid = list(product(_int_list(args.ns), _int_list(args.ms), _int_list(args.vs), _int_list(args.ps)))
    for n, m, v, p in grid:
        if n < 2 or m < 2 or v < 1 or p < 1:
            raise ValueError(f"invalid grid cell (n={n}, m={m}, v={v}, p={p})")
    if args.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            cells = list(ex.map(run_cell, grid))
    else:
        cells = [run_cell(c) for c in grid]
    if not args.timing:
        for c in cells:
            c.pop("seconds")
    summary = {s: sum(c["status"] == s for c in cells) for s in ("pass", "fail", "skipped")}
    return {"cells": cells, "summary": summary}, summary["fail"] == 0


COMMANDS = {
    "center": cmd_center,
    "basis": cmd_basis,
    "discriminant": cmd_discriminant,
    "auto-verify": cmd_auto_verify,
    "free-check": cmd_free_check,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qverona",
        description="Centers, discriminants and automorphisms of Veronese subrings of q-skew polynomial rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring(sp, need_ring=True):
        if need_ring:
            sp.add_argument("--n", type=int, required=True, help="number of variables (>= 2)")
            sp.add_argument("--m", type=int, required=True, help="order of the root of unity q (>= 2)")
            sp.add_argument("--v", type=int, default=1, help="Veronese index (default 1)")
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("center", help="central monomials up to a degree bound")
    ring(sp)
    sp.add_argument("--deg", type=int, help="degree bound (default 2v)")

    sp = sub.add_parser("basis", help="quasi-basis coset representatives")
    ring(sp)

    sp = sub.add_parser("discriminant", help="p-power discriminant over the center")
    ring(sp)
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--check-theorem", action="store_true", help="compare with the closed form")
    sp.add_argument("--stability", type=int, metavar="IMAX", help="check d^[ip] = (d^[p])^i for i <= IMAX")

    sp = sub.add_parser("auto-verify", help="verify the automorphism families that exist for (n, m, v)")
    ring(sp)
    sp.add_argument("--deg", type=int, help="degree bound for the homomorphism check (default 4v)")
    sp.add_argument("--p", type=int, default=1)

    sp = sub.add_parser("free-check", help="search for short relations between the free-subgroup generators")
    ring(sp)
    sp.add_argument("--maxlen", type=int, default=4)
    sp.add_argument("--deg", type=int, help="test monomials up to this degree (default 4v)")

    sp = sub.add_parser("verify-all", help="run the theorem checks over a parameter grid")
    ring(sp, need_ring=False)
    sp.add_argument("--ns", default="2,3", help="comma-separated n values")
    sp.add_argument("--ms", default="2,3,4")
    sp.add_argument("--vs", default="1,2,3")
    sp.add_argument("--ps", default="1,2")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include per-cell wall time (not reproducible)")
    return parser


def _validate(parser, args):
    if args.command != "verify-all":
        if args.n < 2:
            parser.error("--n must be at least 2")
        if args.m < 2:
            parser.error("--m must be at least 2")
        if args.v < 1:
            parser.error("--v must be at least 1")
    for name in ("p", "maxlen", "jobs", "stability"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            parser.error(f"--{name} must be positive")
    if getattr(args, "deg", None) is not None and args.deg < 0:
        parser.error("--deg must be nonnegative")


def _table(payload: dict) -> str:
    lines = []
    for key, val in payload.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            cols = list(val[0])
            rows = [[json.dumps(r.get(c), sort_keys=True) for c in cols] for r in val]
            widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
            lines.append(f"{key}:")
            lines.append("  " + "  ".join(c.ljust(wd) for c, wd in zip(cols, widths)))
            lines += ["  " + "  ".join(x.ljust(wd) for x, wd in zip(r, widths)) for r in rows]
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        body, ok = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"qverona {args.command}: error: {exc}", file=sys.stderr)
        return 2
    payload = {"schema": SCHEMA, "command": args.command}
    if args.command != "verify-all":
        payload.update(n=args.n, m=args.m, v=args.v)
    payload.update(body)
    payload["ok"] = ok
    if args.format == "table":
        print(_table(payload))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
