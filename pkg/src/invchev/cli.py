"""
Command-line interface.

    invchev expand --type A1 --weight eps:1 --elt "1"
    invchev verify --type A2 --scope all
    invchev qbg --type A2 --format dot
    invchev walks --type A1 --weight w:1 --elt "1"

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .chevalley import (inverse_chevalley, inverse_chevalley_algebraic, minuscule_decomposition,
                        row, scalar_multiply_general)
from .heisenberg import IntegralityError, KClass, to_basis_form
from .oracle import NegativeOrderError, verify_row
from .qbg import edges, edges_to_json, export_dot
from .rootsystem import RootSystem, RootSystemError, build_root_system
from .walks import DegreeIntegralityError, enumerate_decorations, enumerate_quantum_walks, walk_to_json
from .weyl import (UnsupportedWeightError, WeylElt, datum_failures, element, element_failures,
                   elements, identity, minuscule_datum, parse_elt, simple_reflection, weyl_order)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3

FULL_ENUMERATION_LIMIT = 1000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- argument parsing -------------------------------------------------------------

def parse_weight(rs: RootSystem, text: str):
    """``w:c1,...,cr`` (fundamental coordinates) or ``eps:i`` (type A)."""
    text = text.strip()
    if text.startswith("eps:"):
        if rs.cartan.family != "A":
            raise UsageError("eps:i weights are only available in type A")
        from .type_a import epsilon_weight
        try:
            return epsilon_weight(rs.rank, int(text[4:]))
        except ValueError as e:
            raise UsageError(str(e)) from None
    if text.startswith("w:"):
        text = text[2:]
    try:
        coords = tuple(int(c) for c in text.replace(" ", ",").split(",") if c)
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None
    return rs.check(coords)


def parse_coords(rs: RootSystem, text: str | None):
    if not text:
        return rs.zero()
    try:
        coords = tuple(int(c) for c in text.replace(" ", ",").split(",") if c)
    except ValueError:
        raise UsageError(f"cannot parse coordinates {text!r}") from None
    if len(coords) != rs.rank:
        raise UsageError(f"expected {rs.rank} coordinates, got {text!r}")
    return coords


def sample_pairs(rs: RootSystem, k: int, seed: int):
    """``k`` seeded (minuscule weight, Weyl element) pairs."""
    rng = random.Random(seed)
    ms = rs.minuscule_weights()
    out = []
    for _ in range(k):
        lam = rng.choice(ms)
        w = identity(rs)
        for _ in range(2 * rs.npos):
            w = w * simple_reflection(rs, rng.randint(1, rs.rank))
        out.append((lam, w))
    return out


def all_pairs(rs: RootSystem):
    return [(lam, w) for lam in rs.minuscule_weights() for w in elements(rs)]


def _pairs(rs, args):
    if args.weight and args.elt:
        return [(parse_weight(rs, args.weight), parse_elt(rs, args.elt))]
    if args.weight:
        lam = parse_weight(rs, args.weight)
        if weyl_order(rs) <= FULL_ENUMERATION_LIMIT and not args.samples:
            return [(lam, w) for w in elements(rs)]
        return [(lam, w) for _, w in sample_pairs(rs, args.samples or 25, args.seed)]
    if weyl_order(rs) <= FULL_ENUMERATION_LIMIT and not args.samples:
        return all_pairs(rs)
    return sample_pairs(rs, args.samples or 25, args.seed)


# -- commands ---------------------------------------------------------------------

def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_expand(args) -> int:
    rs = build_root_system(args.type)
    lam = parse_weight(rs, args.weight)
    w = parse_elt(rs, args.elt)
    xi = rs.from_root_coords(parse_coords(rs, args.translation))
    mu = parse_coords(rs, args.bundle)
    c = KClass(rs, {(w, xi, mu): 1})
    meta = {}
    if lam == rs.zero():
        out = c
    elif rs.is_minuscule(lam):
        d = minuscule_datum(rs, lam)
        meta = d.metadata()
        out = inverse_chevalley(rs, lam, c)
    else:
        parts = minuscule_decomposition(rs, lam)
        meta = {"lambda": list(lam), "parts": [list(p) for p in parts]}
        out = scalar_multiply_general(rs, lam, c)
    if not out.is_integral():
        raise IntegralityError("expansion has fractional q-exponents")
    obj = {"type": str(rs), "lambda": list(lam), "start": {
        "w": list(w.word), "t": list(rs.root_lattice_coords(xi)), "x": list(mu)},
        "metadata": meta, "terms": out.to_json()}
    head = " ".join(f"{k}={v}" for k, v in meta.items())
    _emit(obj, args.format, (f"# {head}\n" if head else "") + out.to_text())
    return EXIT_OK


def _row_task(type_str, lam, key):
    rs = build_root_system(type_str)
    rep = verify_row(rs, lam, element(rs, key))
    return rep.ok, rep.to_json()


def _theorem_task(type_str, lam, key):
    rs = build_root_system(type_str)
    w = element(rs, key)
    a = to_basis_form(inverse_chevalley_algebraic(rs, lam, w))
    b = row(rs, lam, w)
    return a == b, {"lambda": list(lam), "w": list(w.word), "match": a == b}


def _run(tasks, fn, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, *zip(*tasks)))
    return [fn(*t) for t in tasks]


def cmd_verify(args) -> int:
    rs = build_root_system(args.type)
    scopes = ["row", "theorems", "toda", "propL"] if args.scope == "all" else [args.scope]
    report = {"type": str(rs), "scope": args.scope, "seed": args.seed, "checks": []}
    ok = True
    for scope in scopes:
        if scope == "toda":
            if rs.cartan.family != "A":
                if args.scope == "toda":
                    raise UsageError("the q-Toda check is only defined in type A")
                continue
            from .type_a import q_toda_check
            rep = q_toda_check(rs.rank)
            ok &= rep.ok
            report["checks"].append({"scope": "toda", "ok": rep.ok, "report": rep.to_json()})
            continue
        pairs = _pairs(rs, args)
        tasks = [(str(rs), lam, w.key) for lam, w in pairs]
        if scope == "row":
            res = _run(tasks, _row_task, args.jobs)
        elif scope == "theorems":
            res = _run(tasks, _theorem_task, args.jobs)
        else:
            res = []
            for lam, w in pairs:
                d = minuscule_datum(rs, lam)
                bad = datum_failures(d) + element_failures(d, w)
                res.append((not bad, {"lambda": list(lam), "w": list(w.word), "failures": bad}))
        good = all(r[0] for r in res)
        ok &= good
        report["checks"].append({"scope": scope, "ok": good, "count": len(res),
                                 "results": [r[1] for r in res]})
    report["ok"] = ok
    print(json.dumps(report, indent=2))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_qbg(args) -> int:
    rs = build_root_system(args.type)
    es = edges(rs)
    if args.format == "dot":
        sys.stdout.write(export_dot(es, name=str(rs)))
    elif args.format == "json":
        print(json.dumps(edges_to_json(es), indent=2))
    else:
        nb = sum(1 for e in es if e.kind == "B")
        print(f"{rs}: {len(es)} edges ({nb} Bruhat, {len(es) - nb} quantum)")
    return EXIT_OK


def cmd_walks(args) -> int:
    rs = build_root_system(args.type)
    lam = parse_weight(rs, args.weight)
    w = parse_elt(rs, args.elt)
    d = minuscule_datum(rs, lam)
    walks = enumerate_quantum_walks(d, w)
    data = [walk_to_json(wk, enumerate_decorations(wk)) for wk in walks]
    obj = {"type": str(rs), "metadata": d.metadata(), "walks": data}
    lines = [f"# x={list(d.x_word)} y={list(d.y_word)} walks={len(walks)} "
             f"decorated={sum(len(x['decorations']) for x in data)}"]
    for x in data:
        lines.append(f"{x['steps']}  vertices={x['vertices']}")
        for dec in x["decorations"]:
            lines.append(f"    b={dec['b']} sign={dec['sign']:+d} wt={dec['wt']} deg={dec['deg']}")
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invchev", description="Inverse Chevalley expansions and checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weight=True, elt=True):
        sp.add_argument("--type", required=True, help="Cartan type, e.g. A2, D4, E6")
        if weight:
            sp.add_argument("--weight", help="w:c1,..,cr or eps:i")
        if elt:
            sp.add_argument("--elt", help='Weyl element: "1 2 1", "w0" or "e"')

    e = sub.add_parser("expand", help="expand e^lam * [O(w t_xi)(mu)]")
    common(e)
    e.add_argument("--translation", help="root-lattice coordinates of xi")
    e.add_argument("--bundle", help="fundamental coordinates of mu")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--jobs", type=int, default=1)

    v = sub.add_parser("verify", help="run verification suites")
    common(v)
    v.add_argument("--scope", choices=["row", "theorems", "toda", "propL", "all"], default="all")
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)

    q = sub.add_parser("qbg", help="dump the quantum Bruhat graph")
    common(q, weight=False, elt=False)
    q.add_argument("--format", choices=["text", "json", "dot"], default="dot")

    w = sub.add_parser("walks", help="list decorated quantum walks")
    common(w)
    w.add_argument("--format", choices=["text", "json"], default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("expand", "walks") and (not args.weight or args.elt is None):
            raise UsageError("--weight and --elt are required")
        return {"expand": cmd_expand, "verify": cmd_verify,
                "qbg": cmd_qbg, "walks": cmd_walks}[args.command](args)
    except (UsageError, RootSystemError, UnsupportedWeightError, ValueError) as e:
        print(f"invchev: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (NegativeOrderError, DegreeIntegralityError, IntegralityError, AssertionError) as e:
        print(f"invchev: internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
