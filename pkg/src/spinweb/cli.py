"""Command-line interface: classify, verify, dims, generate, census.

Exit codes: classify returns 0 for a spin model, 1 for not, 2 on error;
verify returns 0 iff all four relations hold; census returns 1 when an
asserted equivalence finds a counterexample.  ``--graph6 -`` reads graph6
lines from stdin, one verdict per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from .classifier import (Verdict, classify_symmetric, classify_tournament)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .graphs import (BadOrder, Graph, Tournament, circulant_tournament,
                     clebsch, complete, cycle, paley, petersen, union_complete)
from .statesum import ZeroGenerator, dim_v3, full_report

FIXTURE_ENV = "SPINWEB_FIXTURES"
_FIXTURE_GENERATORS = ("higman_sims", "schlafli", "mclaughlin")


class CliError(ValueError):
    pass


def _fixture_dir() -> str:
    return os.environ.get(FIXTURE_ENV, os.path.join(".", "fixtures"))


def _load_fixture(name: str) -> Graph:
    path = os.path.join(_fixture_dir(), f"{name}.g6")
    try:
        with open(path, "rb") as handle:
            return parse_graph6(handle.readline())
    except FileNotFoundError:
        raise CliError(
            f"fixture {name!r} not found at {path}; set {FIXTURE_ENV}") from None


def build_generator(spec: str):
    """Resolve 'name' or 'name:a,b,...' (integer arguments) to a graph."""
    name, _, argtext = spec.partition(":")
    args = []
    if argtext:
        try:
            args = [int(a) for a in argtext.split(",")]
        except ValueError:
            raise CliError(f"generator arguments must be integers: {argtext!r}")
    try:
        if name == "complete":
            return complete(*args)
        if name == "union_complete":
            return union_complete(*args)
        if name == "cycle":
            return cycle(*args)
        if name == "paley":
            return paley(*args)
        if name == "clebsch":
            return clebsch(*args)
        if name == "petersen":
            return petersen(*args)
        if name == "circulant_tournament":
            if len(args) < 1:
                raise CliError("circulant_tournament needs n and the outset")
            return circulant_tournament(args[0], set(args[1:]))
        if name in _FIXTURE_GENERATORS:
            if args:
                raise CliError(f"{name} takes no arguments")
            return _load_fixture(name)
    except (BadOrder, TypeError) as exc:
        raise CliError(f"bad generator {spec!r}: {exc}") from None
    raise CliError(f"unknown generator {name!r}")


def _inputs(ns) -> list[tuple[str, Graph | Tournament]]:
    """Resolve the (unique) input source to a list of (label, graph) pairs."""
    if (ns.graph6 is None) == (ns.gen is None):
        raise CliError("provide exactly one of --graph6 and --gen")
    if ns.gen is not None:
        obj = build_generator(ns.gen)
        if ns.tournament and not isinstance(obj, Tournament):
            raise CliError("--tournament given but the generator makes a graph")
        if isinstance(obj, Tournament) and not ns.tournament:
            raise CliError("tournament generators need the --tournament flag")
        return [(ns.gen, obj)]
    if ns.tournament:
        raise CliError("graph6 encodes undirected graphs; --tournament needs --gen")
    if ns.graph6 == "-":
        pairs = []
        for raw in sys.stdin.buffer.read().splitlines():
            line = raw.strip()
            if line:
                pairs.append((line.decode("latin-1"), parse_graph6(line)))
        if not pairs:
            raise CliError("no graph6 lines on stdin")
        return pairs
    return [(ns.graph6, parse_graph6(ns.graph6))]


def _family_json(verdict: Verdict):
    if verdict.family is None:
        return None
    return {"kind": verdict.family.kind.value,
            "dims": list(verdict.family.dims),
            "untabulated": verdict.family.untabulated}


def _dim_text(verdict: Verdict, exact: int | None) -> str:
    if exact is not None:
        return f"dim V3 = {exact}"
    if verdict.family is None:
        return ""
    if len(verdict.family.dims) == 1:
        return f"dim V3 = {verdict.family.dims[0]}"
    if verdict.family.dims:
        return "dim V3 in {" + ",".join(map(str, verdict.family.dims)) + "}"
    return "dim V3 untabulated (use --exact-dim)"


def cmd_classify(ns) -> int:
    worst = 0
    for label, obj in _inputs(ns):
        verdict = (classify_tournament(obj) if isinstance(obj, Tournament)
                   else classify_symmetric(obj))
        exact = None
        if ns.exact_dim and verdict.is_spin_model:
            exact = dim_v3(obj)
        if ns.json:
            print(json.dumps({
                "input": label, "n": obj.n,
                "is_spin_model": verdict.is_spin_model,
                "case": verdict.case.value,
                "applied_to": verdict.applied_to.value if verdict.applied_to else None,
                "family": _family_json(verdict),
                "dim_v3": exact,
                "q_value": verdict.q_value,
                "reason": verdict.reason,
            }))
        elif verdict.is_spin_model:
            parts = [f"spin model: {verdict.case.value} case",
                     f"family {verdict.family.kind.value}"]
            dim_text = _dim_text(verdict, exact)
            if dim_text:
                parts.append(dim_text)
            print("; ".join(parts))
        else:
            print(f"not a spin model: {verdict.reason}")
        worst = max(worst, 0 if verdict.is_spin_model else 1)
    return worst


def cmd_verify(ns) -> int:
    worst = 0
    for label, obj in _inputs(ns):
        report = full_report(obj)
        if ns.json:
            print(json.dumps({
                "input": label, "n": obj.n, "directed": report.directed,
                "relations": dict(zip(("1b", "2b", "3a", "3b"),
                                      report.booleans())),
                "is_spin_model": report.is_spin_model,
                "coefficients": {
                    rel: ({key: str(value) for key, value in check.coefficients.items()}
                          if check.coefficients else None)
                    for rel, check in zip(("1b", "2b", "3a", "3b"),
                                          (report.r1b, report.r2b, report.r3a, report.r3b))},
                "witnesses": {
                    rel: (None if check.witness is None else {
                        "site": list(check.witness.site),
                        "lhs": str(check.witness.lhs),
                        "rhs": str(check.witness.rhs),
                        "detail": check.witness.detail})
                    for rel, check in zip(("1b", "2b", "3a", "3b"),
                                          (report.r1b, report.r2b, report.r3a, report.r3b))},
            }))
        else:
            print(f"{label}:")
            for rel, check in zip(("1b", "2b", "3a", "3b"),
                                  (report.r1b, report.r2b, report.r3a, report.r3b)):
                if check.holds:
                    coeff = ""
                    if rel in ("1b", "2b") and check.coefficients:
                        coeff = " (" + ", ".join(
                            f"{key}={value}" for key, value in check.coefficients.items()) + ")"
                    print(f"  {rel}: holds{coeff}")
                else:
                    print(f"  {rel}: FAILS  [{check.witness.detail}]")
            print(f"  spin model: {'yes' if report.is_spin_model else 'no'}")
        worst = max(worst, 0 if report.is_spin_model else 1)
    return worst


def cmd_dims(ns) -> int:
    for label, obj in _inputs(ns):
        value = dim_v3(obj)
        if ns.json:
            print(json.dumps({"input": label, "n": obj.n, "dim_v3": value}))
        else:
            print(value)
    return 0


def cmd_generate(ns) -> int:
    obj = build_generator(ns.gen)
    if isinstance(obj, Tournament):
        raise CliError("graph6 encodes undirected graphs only")
    sys.stdout.write(write_graph6(obj).decode() + "\n")
    return 0


def cmd_census(ns) -> int:
    if ns.tournament:
        result = census_mod.run_tournament_census(
            ns=tuple(int(x) for x in ns.ns.split(",")) if ns.ns else (3, 5),
            assert_equivalence=ns.mode == "assert_equivalence")
    else:
        stream = sys.stdin.buffer if ns.input == "-" else ns.input
        try:
            if stream is not None:
                result = census_mod.scan_stream(stream, ns.mode)
            else:
                cfg = census_mod.CensusConfig(
                    max_n=ns.max_n, mode=ns.mode, workers=ns.workers)
                result = census_mod.run_census(cfg)
        except census_mod.CounterexampleFound as exc:
            print(f"COUNTEREXAMPLE: {exc}", file=sys.stderr)
            return 1
    for hit in result.hits:
        fam = hit.verdict.family.kind.value if hit.verdict.family else "-"
        dims = ",".join(map(str, hit.verdict.family.dims)) if hit.verdict.family else "-"
        flags = " ".join(f"{rel}={'T' if ok else 'F'}"
                         for rel, ok in zip(("1b", "2b", "3a", "3b"),
                                            hit.report.booleans()))
        name = hit.graph6 or f"n={hit.n}#{hit.index}"
        print(f"{name}\t{hit.verdict.case.value}\t{fam}\tdim={dims or '-'}\t{flags}")
    for lineno, message in result.line_errors:
        print(f"line {lineno}: {message}", file=sys.stderr)
    disagreements = 1 if result.disagreement else 0
    status = "OK" if disagreements == 0 else "FAIL"
    print(f"{status}, {result.graphs_seen} graphs, {disagreements} disagreements")
    return 1 if disagreements else 0


def _add_input_flags(sub, tournament=True):
    sub.add_argument("--graph6", help="graph6 string, or '-' for stdin lines")
    sub.add_argument("--gen", help="generator name[:a,b,...], e.g. cycle:5")
    if tournament:
        sub.add_argument("--tournament", action="store_true",
                         help="treat the generated object as a tournament")
    sub.add_argument("--json", action="store_true",
                     help="one JSON object per input line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinweb",
        description="spin-model classification for graphs and tournaments")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classify", help="closed-form spin-model verdict")
    _add_input_flags(sub)
    sub.add_argument("--exact-dim", action="store_true",
                     help="compute dim V3 with the state-sum oracle")
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("verify", help="state-sum oracle relation report")
    _add_input_flags(sub)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("dims", help="dim V3 by exact rank computation")
    _add_input_flags(sub)
    sub.set_defaults(func=cmd_dims)

    sub = subs.add_parser("generate", help="print a named graph as graph6")
    sub.add_argument("--gen", required=True)
    sub.set_defaults(func=cmd_generate)

    sub = subs.add_parser("census", help="exhaustive or stream census")
    sub.add_argument("--max-n", type=int, default=7)
    sub.add_argument("--input", help="graph6 stream path, or '-' for stdin")
    sub.add_argument("--mode", default="assert_equivalence",
                     choices=[m.value for m in census_mod.CensusMode])
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--tournament", action="store_true",
                     help="tournament census instead of graphs")
    sub.add_argument("--ns", help="comma-separated tournament sizes (default 3,5)")
    sub.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (CliError, Graph6Error, BadOrder, ZeroGenerator, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
