"""Command-line interface. Every subcommand prints one JSON document.

Exit codes: 0 success, 1 invalid input, 2 resource budget exhausted.
"""
from __future__ import annotations

import argparse
import itertools
import json
import signal
import sys
from typing import Sequence

from . import __version__
from .burau import BraidWord, burau, burau_matrix, reduced_burau
from .complexes import (
    DEFAULT_MAX_SIMPLICES,
    DEFAULT_MAX_VERTICES,
    ComplexSpec,
    Family,
    FiniteComplex,
    act,
    build_complex,
    standard_tuple,
)
from .errors import BudgetExceeded
from .homology import chain_complex, cone, homology
from .lattice import Convention, braiding, matrix_to_json
from .orbits import WordSampler, necessity_experiment, reachability_search
from .weights import (
    Partition,
    coset_reps_WP,
    exterior_multiplicity,
    fit_polynomial,
    kostant_cohomology,
    pieri_shift,
    sp_shift,
    symbolic_dot_action,
    trivial_summand_degrees,
)
from .weights.partitions import multiset_to_json

OK, INVALID, BUDGET = 0, 1, 2

FIXTURES = {
    "boundary-tetrahedron": list(itertools.combinations(range(4), 3)),
    "rp2": [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
        (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
    ],
    "two-points": [(0,), (1,)],
}


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise InputError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _vectors(text: str) -> tuple[tuple[int, ...], ...]:
    """'1,0,0;0,1,0' -> two vectors."""
    return tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip())


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddsymp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    common.add_argument("--table", action="store_true", help="also print a human-readable table to stderr")
    common.add_argument(
        "--time-budget", type=_positive, metavar="SECONDS", help="abort with exit code 2 after this long"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=text, parents=[common])

    p = add("burau", "Burau matrix of a braid word")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--word", required=True, help="comma-separated signed generator indices, e.g. 1,2,-1")

    p = add("braiding", "braiding matrix b_(n,m)")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--m", type=_nonnegative, required=True)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="eq31")

    p = add("complex", "build a truncated complex and save it as JSON")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--box", type=_nonnegative, default=2)
    p.add_argument("--relative-to", type=_vectors, help="simplex sigma as '1,0,0;0,1,0'")
    p.add_argument("--relation", choices=["orthogonal", "left"], default="orthogonal")
    p.add_argument("--max-vertices", type=_positive, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--max-simplices", type=_positive, default=DEFAULT_MAX_SIMPLICES)
    p.add_argument("--save", help="file for the full complex (the report only has the f-vector)")

    p = add("homology", "homology of a saved complex or a fixture")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="complex JSON written by `complex --save`")
    src.add_argument("--fixture", choices=sorted(FIXTURES))
    p.add_argument("--coefficients", default="Q,F2,Z", help="subset of Q,F2,Z")
    p.add_argument("--unreduced", action="store_true")
    p.add_argument("--cone", action="store_true", help="take the cone first")

    p = add("kostant", "Kostant rows for Sp_2n-1 in Sp_2n")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = add("pieri", "horizontal-strip shift of a partition")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--sp", action="store_true", help="apply the rule twice (Sp shift)")

    p = add("multiplicity", "multiplicity of V_lambda in (wedge V_g)^(tensor r)")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--r", type=_nonnegative, required=True)

    p = add("polyfit", "exact polynomial through a series")
    p.add_argument("--points", help="'x:y,x:y,...'")
    p.add_argument("--lambda", dest="lam", type=_partition, help="fit exterior multiplicities instead")
    p.add_argument("--r", type=_nonnegative)
    p.add_argument("--g-range", help="'first:last' (inclusive); the argument is 2g+1")
    p.add_argument("--max-degree", type=_nonnegative)

    p = add("orbit-necessity", "random Burau images of the standard simplex")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--p", type=_nonnegative, required=True)
    p.add_argument("--trials", type=_nonnegative, default=1000)
    p.add_argument("--seed", type=_nonnegative, default=0)
    p.add_argument("--family", choices=["X", "IX"], default="X")
    p.add_argument("--mean-length", type=float, default=8.0)

    p = add("orbit-search", "bounded search for a word reaching a target")
    p.add_argument("--n", type=_positive, required=True)
    tgt = p.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--target", type=_vectors, help="vectors as '0,1,0;0,0,1'")
    tgt.add_argument("--plant", type=_nonnegative, metavar="SEED", help="plant a random target from this seed")
    p.add_argument("--p", type=_nonnegative, default=0, help="simplex dimension for --plant")
    p.add_argument("--family", choices=["X", "IX"], default="X")
    p.add_argument("--plant-length", type=_nonnegative, default=3)
    p.add_argument("--max-depth", type=_nonnegative, default=4)
    return parser


# ---------------------------------------------------------------------------
# subcommands: each returns (report, table-or-None)


def _cmd_burau(a):
    word = BraidWord.parse(a.n, a.word)
    img = burau(word)
    report = {
        "command": "burau",
        "n": a.n,
        "word": list(word.to_ints()),
        "matrix": matrix_to_json(img.matrix),
        "level": str(img.element.level),
        "permutation": [i + 1 for i in word.permutation()],
        "reduced_burau": matrix_to_json(reduced_burau(word)) if a.n >= 2 else [],
    }
    return report, "\n".join(" ".join(f"{x:>4}" for x in row) for row in img.matrix)


def _cmd_braiding(a):
    el = braiding(a.n, a.m, a.convention)
    report = {
        "command": "braiding",
        "n": a.n,
        "m": a.m,
        "convention": a.convention,
        "matrix": matrix_to_json(el.matrix),
        "level": str(el.level),
    }
    return report, "\n".join(" ".join(f"{x:>4}" for x in row) for row in el.matrix)


def _cmd_complex(a):
    spec = ComplexSpec(
        Family(a.family),
        a.n,
        a.box,
        relative_to=a.relative_to,
        max_vertices=a.max_vertices,
        max_simplices=a.max_simplices,
        relation=a.relation,
    )
    fc = build_complex(spec)
    if a.save:
        with open(a.save, "w") as fh:
            fh.write(fc.to_json())
    report = {
        "command": "complex",
        "family": fc.family,
        "n": fc.n,
        "box": fc.box,
        "relative_to": None if a.relative_to is None else [list(v) for v in a.relative_to],
        "f_vector": list(fc.f_vector()),
        "saved_to": a.save,
    }
    return report, f"{fc.family} n={fc.n} box={fc.box} f-vector {fc.f_vector()}"


def _cmd_homology(a):
    coeffs = [c.strip() for c in a.coefficients.split(",") if c.strip()]
    bad = [c for c in coeffs if c not in ("Q", "F2", "Z")]
    if bad:
        raise InputError(f"unknown coefficients {bad}")
    if a.fixture:
        fc = FiniteComplex.from_facets(FIXTURES[a.fixture], family=a.fixture)
        source = a.fixture
    else:
        try:
            with open(a.input) as fh:
                fc = FiniteComplex.from_json(fh.read())
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise InputError(f"cannot read complex from {a.input}: {exc}") from None
        source = a.input
    if a.cone:
        fc = cone(fc)
    rep = homology(chain_complex(fc), coeffs, reduced=not a.unreduced)
    report = {"command": "homology", "source": source, "cone": a.cone} | rep.as_dict()
    return report, rep.table()


def _cmd_kostant(a):
    rows = kostant_cohomology(a.lam, a.n)
    reps = {rep.c: rep.w for rep in coset_reps_WP(a.n)}
    table = ["deg  w          w^-1(rho)        Levi weight"]
    out = []
    for r in rows:
        d = r.as_dict()
        d["symbolic"] = list(symbolic_dot_action(reps[r.c].inverse()))
        out.append(d)
        table.append(f"{r.length:>3}  {str(r.w):<10} {str(list(r.c)):<16} {list(r.levi_weight)}")
    report = {
        "command": "kostant",
        "lambda": list(a.lam.parts),
        "n": a.n,
        "rows": out,
        "trivial_summand_degrees": trivial_summand_degrees(a.lam, a.n),
    }
    return report, "\n".join(table)


def _cmd_pieri(a):
    ms = sp_shift(a.lam) if a.sp else pieri_shift(a.lam)
    report = {"command": "pieri", "lambda": list(a.lam.parts), "sp": a.sp, "shift": multiset_to_json(ms)}
    table = "\n".join(f"{k} x ({p})" for p, k in sorted(ms.items()))
    return report, table


def _cmd_multiplicity(a):
    if a.lam.length > a.g:
        raise InputError(f"l(lambda) = {a.lam.length} exceeds g = {a.g}")
    m = exterior_multiplicity(a.lam, a.g, a.r)
    report = {"command": "multiplicity", "lambda": list(a.lam.parts), "g": a.g, "r": a.r, "multiplicity": m}
    return report, str(m)


def _parse_points(text: str):
    pts = []
    for item in text.split(","):
        if not item.strip():
            continue
        x, sep, y = item.partition(":")
        if not sep:
            raise InputError(f"point {item!r} is not of the form x:y")
        pts.append((int(x), int(y)))
    return pts


def _cmd_polyfit(a):
    if a.points is not None:
        if a.lam is not None or a.r is not None or a.g_range is not None:
            raise InputError("give either --points or --lambda/--r/--g-range")
        pts = _parse_points(a.points)
        series = None
    else:
        if a.lam is None or a.r is None or a.g_range is None:
            raise InputError("--lambda, --r and --g-range are required without --points")
        first, sep, last = a.g_range.partition(":")
        if not sep:
            raise InputError("--g-range must look like first:last")
        g0, g1 = int(first), int(last)
        if g0 < max(a.lam.length, 1) or g1 < g0:
            raise InputError(f"invalid g range {a.g_range} for lambda = ({a.lam})")
        pts = [(2 * g + 1, exterior_multiplicity(a.lam, g, a.r)) for g in range(g0, g1 + 1)]
        series = {"lambda": list(a.lam.parts), "r": a.r, "g_range": [g0, g1]}
    if len(pts) < 2:
        raise InputError("need at least two points")
    fit = fit_polynomial(pts, a.max_degree)
    report = {
        "command": "polyfit",
        "points": [[str(x), str(y)] for x, y in pts],
        "series": series,
    } | fit.as_dict()
    return report, f"degree {fit.degree}: {fit}"


def _cmd_orbit_necessity(a):
    res = necessity_experiment(a.n, a.p, a.trials, a.seed, a.family, a.mean_length)
    return {"command": "orbit-necessity"} | res.as_dict(), "pass" if res.passed else "FAIL"


def _cmd_orbit_search(a):
    planted = None
    if a.target is not None:
        target = a.target
        family = None
    else:
        sampler = WordSampler(a.n, float(a.plant_length), a.plant)
        word = sampler.word(0)
        word = BraidWord(a.n, word.letters[: a.plant_length])
        target = act(burau_matrix(word), standard_tuple(a.family, a.n, a.p))
        family = a.family
        planted = list(word.to_ints())
    res = reachability_search(target, a.n, a.max_depth, family)
    report = {"command": "orbit-search", "planted_word": planted} | res.as_dict()
    return report, ("found " + str(res.witness)) if res.found else f"not found within depth {res.depth}"


COMMANDS = {
    "burau": _cmd_burau,
    "braiding": _cmd_braiding,
    "complex": _cmd_complex,
    "homology": _cmd_homology,
    "kostant": _cmd_kostant,
    "pieri": _cmd_pieri,
    "multiplicity": _cmd_multiplicity,
    "polyfit": _cmd_polyfit,
    "orbit-necessity": _cmd_orbit_necessity,
    "orbit-search": _cmd_orbit_search,
}


def _alarm(signum, frame):
    raise BudgetExceeded("time budget exhausted")


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    """Parse, run and return (exit code, report)."""
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"oddsymp: error: {exc}", file=sys.stderr)
        return INVALID, None
    if args.time_budget:
        signal.signal(signal.SIGALRM, _alarm)
        signal.alarm(args.time_budget)
    try:
        report, table = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"oddsymp: budget exhausted: {exc}", file=sys.stderr)
        return BUDGET, None
    except (ValueError, OSError) as exc:  # InputError, DimensionError, NotACharacter, ...
        print(f"oddsymp: error: {exc}", file=sys.stderr)
        return INVALID, None
    finally:
        if args.time_budget:
            signal.alarm(0)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.table and table:
        print(table, file=sys.stderr)
    return OK, report


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
