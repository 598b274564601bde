"""Command-line front end: ``oddarc <command> --n N ...``.

Exit status is 0 when every check passes, 1 when a check fails (a JSON
witness goes to stdout) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional

from .algebra import OddArcAlgebra, nonassoc_witness
from .chronology import ChoiceC, canonical_choice, reversed_choice
from .diagrams import MAX_N, SizeError, enumerate_matchings

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def load_choice(spec: str, n: int) -> ChoiceC:
    if spec == "canonical":
        return canonical_choice(n)
    if spec == "reversed":
        return reversed_choice(n)
    try:
        with open(spec) as fh:
            choice = ChoiceC.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read choice from {spec!r}: {exc}")
    if choice.n != n:
        raise UsageError(f"choice file is for n={choice.n}, not n={n}")
    return choice


def dump(obj, fmt: str = "json"):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        for k in sorted(obj):
            sys.stdout.write(f"{k}: {obj[k]}\n")


def _ext_json(e) -> List:
    return e.to_json()


def _center_json(elems) -> List:
    return [[[b, a, m, str(c)] for (b, a, m), c in z.terms()] for z in elems]


def _rank_poly(ranks: Dict[int, int]) -> str:
    parts = []
    for q, r in sorted(ranks.items()):
        mono = "" if q == 0 else ("q" if q == 1 else f"q^{q}")
        parts.append(f"{r}{mono}" if mono and r != 1 else (mono or str(r)))
    return " + ".join(parts) or "0"


# -- commands ---------------------------------------------------------------

def cmd_enumerate(args) -> int:
    B = enumerate_matchings(args.n)
    if args.format == "json":
        dump({"n": args.n, "matchings": [{"id": i, "arcs": m.to_json()} for i, m in enumerate(B)]})
    else:
        for i, m in enumerate(B):
            sys.stdout.write(f"{i} {' '.join(f'({x},{y})' for x, y in m.to_json())}\n")
    return 0


def cmd_table(args) -> int:
    from .tables import n2_table, render_text
    if args.n != 2:
        alg = OddArcAlgebra(args.n, load_choice(args.choice, args.n))
        out = []
        for c in range(alg.size):
            for b in range(alg.size):
                for a in range(alg.size):
                    for (mx, my), p in sorted(alg.table(c, b, a).items()):
                        if p:
                            out.append([c, b, a, mx, my, _ext_json(p)])
        dump({"n": args.n, "structure_constants": out})
        return 0
    tau = None
    if args.tau:
        tau = _load_tau(args.tau, 2)
    sides = [args.side] if args.side else ["a", "b"]
    tables = [n2_table(s, args.kind, load_choice(args.choice, 2), tau) for s in sides]
    if args.format == "json":
        dump(tables if len(tables) > 1 else tables[0])
    else:
        sys.stdout.write("\n".join(render_text(t) for t in tables))
    return 0


def _parse_vector(text: str, n: int):
    """``b,a,mask`` or, for n = 2, a table name such as ``a1`` or ``_b1_a``."""
    if n == 2 and "," not in text:
        from .tables import lookup
        try:
            return lookup(text)
        except KeyError:
            raise UsageError(f"unknown basis name {text!r}")
    try:
        b, a, m = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"basis vector must be 'b,a,mask', got {text!r}")
    return b, a, m


def cmd_multiply(args) -> int:
    alg = OddArcAlgebra(args.n, load_choice(args.choice, args.n))
    xs = [_parse_vector(t, args.n) for t in args.vectors]
    for b, a, m in xs:
        if not (0 <= b < alg.size and 0 <= a < alg.size and 0 <= m < 1 << alg.ncircles(b, a)):
            raise UsageError(f"({b},{a},{m}) is not a basis vector")
    acc = alg.element(*xs[0])
    for v in xs[1:]:
        acc = alg.multiply(acc, alg.element(*v))
    dump({"n": args.n, "factors": [list(v) for v in xs],
          "product": [[b, a, m, c] for (b, a, m), c in acc.terms()]}, args.format)
    return 0


def cmd_center(args) -> int:
    from .center import even_center, graded_rank, odd_center
    if args.twisted:
        from .twist import non_iso_checks
        if args.n != 2:
            raise UsageError("the twisted center is computed for n = 2 only")
        rep = non_iso_checks()
        dump({k: (v if not isinstance(v, dict) else {str(q): r for q, r in v.items()})
              for k, v in rep.items()})
        return 0 if rep["ok"] else 1
    if args.even:
        basis = even_center(args.n)
        ranks = graded_rank(basis)
        dump({"n": args.n, "kind": "even", "graded_rank": {str(q): r for q, r in ranks.items()},
              "polynomial": _rank_poly(ranks),
              "basis": {str(q): [sorted([list(k) + [v] for k, v in z.items()]) for z in zs]
                        for q, zs in sorted(basis.items())}})
        return 0
    res = odd_center(args.n, OddArcAlgebra(args.n, load_choice(args.choice, args.n)))
    ranks = res.graded_rank()
    free = all(d == 1 for ds in res.divisors.values() for d in ds)
    dump({"n": args.n, "kind": "odd", "rank": res.rank, "free": free,
          "graded_rank": {str(q): r for q, r in ranks.items()}, "polynomial": _rank_poly(ranks),
          "basis": {str(q): _center_json(zs) for q, zs in sorted(res.basis.items())}})
    return 0 if free else 1


def cmd_springer(args) -> int:
    from .springer import TorsionError, admissible, epsilon, quotient_basis, word
    try:
        qb = quotient_basis(args.n)
    except TorsionError as exc:
        dump({"n": args.n, "ok": False, "witness": str(exc)})
        return 1
    ranks = qb.graded_rank()
    leftover = [[r, list(S)] for r, S in admissible(args.n) if qb.normal_form(epsilon(args.n, r, S))]
    out = {"n": args.n, "rank": qb.rank, "graded_rank": {str(q): r for q, r in ranks.items()},
           "polynomial": _rank_poly(ranks), "ok": not leftover,
           "basis": [word(m) for d in sorted(qb.representatives) for m in qb.representatives[d]]}
    if leftover:
        out["witness"] = leftover[:5]
    if args.relations:
        out["relations"] = {str(2 * d): {"columns": [word(m) for m in qb.columns[d]],
                                         "rows": qb.relation_matrix(d)} for d in sorted(qb.columns)}
    if args.format == "json":
        dump(out)
    else:
        sys.stdout.write(f"rank {qb.rank}: {out['polynomial']}\n")
        sys.stdout.write(" ".join(out["basis"]) + "\n")
    return 0 if not leftover else 1


def cmd_verify_iso(args) -> int:
    from .center import verify_iso
    rep = verify_iso(args.n, OddArcAlgebra(args.n, load_choice(args.choice, args.n)))
    dump(rep.to_json())
    return 0 if rep.ok else 1


def _associator(n: int, choice_spec: str):
    from .twist import TWIST_MAX_N, Associator
    if n > TWIST_MAX_N:
        raise UsageError(f"associator computations are limited to n <= {TWIST_MAX_N}")
    return Associator(OddArcAlgebra(n, load_choice(choice_spec, n)))


def cmd_associator(args) -> int:
    from .twist import verify_cocycle, verify_quasi_associativity
    assoc = _associator(args.n, args.choice)
    sample = None if args.n <= 2 else args.samples
    cocycle = verify_cocycle(assoc)
    quasi = verify_quasi_associativity(assoc, sample, args.seed)
    out = {"n": args.n, "choice": args.choice, "cocycle": cocycle, "quasi_associativity": quasi,
           "determined": len(assoc.determined), "completed": len(assoc.completed),
           "nonzero_ch": sorted([list(q) for q, v in assoc.ch.items() if v])}
    dump(out)
    return 0 if cocycle["ok"] and quasi["ok"] else 1


def _load_tau(path: str, n: int):
    from .twist import Twist
    try:
        with open(path) as fh:
            tau = Twist.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read twist from {path!r}: {exc}")
    if tau.n != n:
        raise UsageError(f"twist file is for n={tau.n}, not n={n}")
    return tau


def cmd_twist(args) -> int:
    from .twist import CocycleError, explicit_twist_n2, sign_twist_search, solve_twist
    if args.explicit:
        if args.n != 2 or args.choice != "canonical":
            raise UsageError("the explicit twist is for n = 2 with the canonical choice")
        tau = explicit_twist_n2()
    else:
        assoc = _associator(args.n, args.choice)
        try:
            tau = sign_twist_search(assoc) if args.signs else solve_twist(assoc)
        except CocycleError as exc:
            dump({"n": args.n, "ok": False, "witness": str(exc)})
            return 1
        if tau is None:
            dump({"n": args.n, "ok": False, "witness": "no sign twist within the ansatz"})
            return 1
    text = json.dumps(tau.to_json(), indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_twist(args) -> int:
    from .twist import verify_twist, verify_twisted_associativity
    assoc = _associator(args.n, args.choice)
    tau = _load_tau(args.tau, args.n)
    cob = verify_twist(assoc, tau, args.degrees)
    sample = None if args.n <= 2 else args.samples
    tw = verify_twisted_associativity(assoc.alg, tau, sample, args.seed)
    dump({"n": args.n, "coboundary": cob, "twisted_associativity": tw})
    return 0 if cob["ok"] and tw["ok"] else 1


def cmd_classify(args) -> int:
    from .twist import classify, classify_all, classify_twisted, solve_twist
    if args.all:
        if args.n != 2:
            raise UsageError("--all is available for n = 2")
        rep = classify_all(2)
        dump(rep)
        return 0 if rep["ok"] else 1
    first = _associator(args.n, args.choice)
    second = _associator(args.n, args.other)
    quasi = classify(first, second)
    tw = classify_twisted(first, solve_twist(first), second, solve_twist(second))
    ok = tw.status == "isomorphic" and tw.verified and (
        quasi.status == "associators differ" or (quasi.status == "isomorphic" and quasi.verified))
    dump({"n": args.n, "quasi": quasi.to_json(), "twisted": tw.to_json(),
          "twisted_mu": [[list(k), v] for k, v in sorted(tw.lam.items()) if v], "ok": ok})
    return 0 if ok else 1


def verify_all(n: int, seed: int = DEFAULT_SEED, samples: int = 20000) -> Dict[str, object]:
    """Every check that applies at this ``n``; ``report["ok"]`` is the verdict."""
    from .algebra import diagonal_subalgebra
    from .center import verify_iso
    from .springer import quotient_basis
    from .twist import (TWIST_MAX_N, Associator, non_iso_checks, explicit_twist_n2, solve_twist,
                        verify_cocycle, verify_quasi_associativity, verify_twist,
                        verify_twisted_associativity)
    rep: Dict[str, object] = {"n": n}
    alg = OddArcAlgebra(n)
    rep["diagonal_exterior"] = all(diagonal_subalgebra(alg).values())
    if n >= 2:
        x, y, z, lhs, rhs = nonassoc_witness(n)
        rep["nonassociative_witness"] = bool(lhs) and lhs == -rhs
    if n <= 4:
        rep["verify_iso"] = verify_iso(n, alg, quotient_basis(n)).ok
    if n <= TWIST_MAX_N:
        assoc = Associator(alg)
        sample = None if n <= 2 else samples
        rep["cocycle"] = verify_cocycle(assoc)["ok"]
        rep["quasi_associativity"] = verify_quasi_associativity(assoc, sample, seed)["ok"]
        tau = solve_twist(assoc)
        rep["twist"] = verify_twist(assoc, tau)["ok"]
        rep["twisted_associativity"] = verify_twisted_associativity(alg, tau, sample, seed)["ok"]
    if n == 2:
        from .tables import n2_table
        from .twist import classify_all
        rep["explicit_twist"] = verify_twist(Associator(alg), explicit_twist_n2(), "even")["ok"]
        rep["non_isomorphism"] = non_iso_checks()["ok"]
        rep["classification"] = classify_all(2)["ok"]
        rep["tables_computed"] = all(n2_table(s, k) for s in "ab" for k in ("odd", "even", "twisted"))
    rep["ok"] = all(v for k, v in rep.items() if k != "n")
    return rep


def cmd_verify_all(args) -> int:
    rep = verify_all(args.n, args.seed, args.samples)
    dump(rep)
    return 0 if rep["ok"] else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddarc", description="Odd arc algebras, their centers and twists.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--choice", default="canonical", help="canonical, reversed or a JSON file")
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        s.add_argument("--samples", type=int, default=20000, help="sampled checks for n >= 3")
        s.set_defaults(func=func)
        return s

    s = common("enumerate", cmd_enumerate, "list crossingless matchings")
    s.set_defaults(format="text")
    s = common("table", cmd_table, "multiplication tables")
    s.add_argument("--side", choices=("a", "b"))
    s.add_argument("--kind", choices=("odd", "even", "twisted"), default="odd")
    s.add_argument("--tau", help="twist JSON for --kind twisted")
    s.set_defaults(format="text")
    s = common("multiply", cmd_multiply, "multiply basis vectors left to right")
    s.add_argument("vectors", nargs="+", help="'b,a,mask' (or a table name for n = 2)")
    s = common("center", cmd_center, "odd center (default), even center or twisted centers")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--odd", action="store_true")
    g.add_argument("--even", action="store_true")
    g.add_argument("--twisted", action="store_true")
    s = common("springer", cmd_springer, "odd Springer cohomology")
    s.add_argument("--relations", action="store_true", help="include relation matrices")
    common("verify-iso", cmd_verify_iso, "check the map from the Springer quotient to the odd center")
    common("associator", cmd_associator, "chronology signs and the cocycle checks")
    s = common("twist", cmd_twist, "solve for a twist")
    s.add_argument("--out")
    s.add_argument("--explicit", action="store_true", help="the explicit n = 2 twist")
    s.add_argument("--signs", action="store_true", help="search for a twist with sign values only")
    s = common("verify-twist", cmd_verify_twist, "check a twist")
    s.add_argument("--tau", required=True)
    s.add_argument("--degrees", choices=("all", "even"), default="all")
    s = common("classify", cmd_classify, "isomorphisms between choices")
    s.add_argument("--other", default="reversed")
    s.add_argument("--all", action="store_true")
    common("verify-all", cmd_verify_all, "run every applicable check")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not 1 <= args.n <= MAX_N:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"oddarc: error: --n must be in 1..{MAX_N}\n")
        return 2
    try:
        return args.func(args)
    except (UsageError, SizeError, ValueError) as exc:
        sys.stderr.write(f"oddarc: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
