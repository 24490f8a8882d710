"""Command line entry point: ``schubert-toric {classify,verify,export}``.

Reports go to stdout and are byte-identical between runs; wall time goes to
stderr so that it never disturbs the report.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .admissibility import classify
from .demazure import demazure_character, dimension
from .errors import NotCovered
from .hibi import export_ideal, hilbert_component, verify_rewriting
from .straighten import export_relations, verify_conditions
from .wedge import verify_pair_basis
from .weights import (
    Report,
    sample_multiset_quadruples,
    verify_multiset_lemma,
    verify_redexp_transfer,
    verify_weight_additivity,
)
from .weyl import Permutation, format_one_line, format_word, parse_one_line, parse_permutation, parse_word
from .wlattice import (
    build_lattice,
    count_standard_monomials,
    order_mismatches,
    transitivity_witnesses,
    verify_axioms,
)

CHECKS = ("lattice", "weights", "multiset", "redexp", "straighten", "pairbasis", "hilbert")
EXPORT_FORMATS = {"ideal": ("m2", "singular", "json"), "hasse": ("dot",), "relations": ("text", "json")}
MAX_WITNESSES = 5
EXHAUSTIVE_MULTISET_MAX_N = 3


class UsageError(Exception):
    pass


@dataclass
class CheckResult:
    checked: int = 0
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def add(self, name: str, rep: Report) -> None:
        res = self.checks.setdefault(name, CheckResult())
        res.checked += rep.checked
        res.failed += len(rep.failures)
        for f in rep.failures[: max(0, MAX_WITNESSES - len(self.witnesses))]:
            self.witnesses.append({"check": name, "w": rep.w, "detail": f})

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "checks": {k: dict(asdict(v), passed=v.passed) for k, v in sorted(self.checks.items())},
            "witnesses": self.witnesses,
            "passed": self.passed,
        }
        if self.results:
            out["results"] = self.results
        return out


# -- argument helpers --------------------------------------------------------


def resolve_w(text: str, n: int | None) -> Permutation:
    """A word, a one-line permutation, or ``word=one-line`` (checked to agree)."""
    try:
        if "=" in text:
            word, line = (part.strip() for part in text.split("=", 1))
            from_line = parse_one_line(line)
            if n is not None and n != from_line.n:
                raise UsageError(f"one-line {line!r} has n={from_line.n}, but --n is {n}")
            from_word = parse_word(word, from_line.n)
            if from_word != from_line:
                raise UsageError(f"{word} is {format_one_line(from_word)}, not {line}")
            return from_line
        if text.strip()[:1] in ("s", "e") and n is None:
            raise UsageError("a word such as s2*s1 needs --n")
        return parse_permutation(text, n)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_checks(text: str | None) -> list[str]:
    if not text or text == "all":
        return list(CHECKS)
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    return [c for c in CHECKS if c in names]


def parse_degrees(text: str | None, n: int) -> list[tuple[int, ...]]:
    """Explicit degree vectors ``1,1;2,0`` or, by default, every vector of total at most 2."""
    if text:
        out = []
        for chunk in text.split(";"):
            try:
                d = tuple(int(x) for x in chunk.split(","))
            except ValueError:
                raise UsageError(f"bad degree vector {chunk!r}") from None
            if len(d) != n or min(d) < 0:
                raise UsageError(f"degree vector {chunk!r} needs {n} non-negative entries")
            out.append(d)
        return out
    return [d for d in itertools.product(range(3), repeat=n) if sum(d) <= 2]


def default_jobs() -> int:
    return os.cpu_count() or 1


# -- checks ------------------------------------------------------------------


def _lattice_check(w: Permutation) -> Report:
    L = build_lattice(w, check=False)
    rep = Report("lattice", str(w))
    rep.checked = len(L) ** 3
    rep.failures = list(L.failures) + verify_axioms(L)
    mism = order_mismatches(L)
    rep.checked += len(L) ** 2
    rep.failures += [dict(m, axiom="order-equivalence") for m in mism]
    return rep


def _hilbert_one(args) -> tuple[tuple[int, ...], int, int, int]:
    one_line, degrees = args
    w = Permutation(one_line, len(one_line) - 1)
    L = build_lattice(w)
    return (degrees, hilbert_component(L, degrees), count_standard_monomials(L, degrees),
            dimension(demazure_character(w, degrees)))


def _hilbert_check(w: Permutation, degrees: list[tuple[int, ...]], jobs: int) -> list[Report]:
    tasks = [(w.one_line, d) for d in degrees]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            rows = list(pool.map(_hilbert_one, tasks))
    else:
        rows = [_hilbert_one(t) for t in tasks]
    rep = Report("hilbert", str(w))
    for d, h, c, dim in sorted(rows):
        rep.checked += 1
        if not h == c == dim:
            rep.failures.append({"degrees": list(d), "hilbert": h, "standard_monomials": c,
                                 "demazure": dim})
    return [rep, verify_rewriting(build_lattice(w))]


def run_check(name: str, w: Permutation, degrees, jobs: int, seed: int) -> list[Report]:
    if name == "lattice":
        return [_lattice_check(w)]
    if name == "hilbert":
        return _hilbert_check(w, degrees, jobs)
    L = build_lattice(w)
    if name == "weights":
        return [verify_weight_additivity(L)]
    if name == "multiset":
        if w.n <= EXHAUSTIVE_MULTISET_MAX_N:
            return [verify_multiset_lemma(w)]
        return [sample_multiset_quadruples(w, 10_000, random.Random(seed))]
    if name == "redexp":
        return [verify_redexp_transfer(L)]
    if name == "straighten":
        return [verify_conditions(L)]
    if name == "pairbasis":
        return [verify_pair_basis(L, i, j) for i in range(1, w.n + 1) for j in range(i, w.n + 1)]
    raise UsageError(f"unknown check {name!r}")


def not_covered_witness(w: Permutation) -> list[list[str]]:
    for ascending in (True, False):
        found = transitivity_witnesses(w, ascending=ascending, limit=1)
        if found:
            return [[str(x) for x in found[0]]]
    return []


# -- commands ----------------------------------------------------------------


def cmd_classify(n: int, jobs: int = 1) -> RunReport:
    result = classify(n, jobs=jobs)
    rep = RunReport("classify", {"n": n})
    rep.results = result.to_json()
    return rep


def cmd_verify(w: Permutation, checks: list[str], degrees=None, jobs: int = 1, seed: int = 0) -> RunReport:
    degrees = parse_degrees(None, w.n) if degrees is None else degrees
    rep = RunReport("verify", {"w": format_one_line(w), "word": format_word(w), "n": w.n,
                               "checks": checks, "degrees": [list(d) for d in degrees] if "hilbert" in checks else None,
                               "seed": seed})
    build_lattice(w)  # NotCovered surfaces before any check runs
    for name in checks:
        for r in run_check(name, w, degrees, jobs, seed):
            rep.add(name, r)
    return rep


def cmd_export(w: Permutation, what: str, fmt: str | None = None) -> str:
    if what not in EXPORT_FORMATS:
        raise UsageError(f"unknown export target {what!r}")
    fmt = fmt or EXPORT_FORMATS[what][0]
    if fmt not in EXPORT_FORMATS[what]:
        raise UsageError(f"{what} can be written as {', '.join(EXPORT_FORMATS[what])}, not {fmt!r}")
    L = build_lattice(w)
    if what == "ideal":
        return export_ideal(L, fmt)
    if what == "hasse":
        return L.hasse_dot()
    return export_relations(L, fmt)


# -- text rendering ----------------------------------------------------------


def render_text(rep: RunReport) -> str:
    lines = []
    if rep.command == "classify":
        res = rep.results
        lines.append(f"n = {res['n']}: {res['covered_count']} covered, {len(res['exceptions'])} exceptions")
        lines += [f"  {line}  {word}" for line, word in res["exceptions"]]
    else:
        lines.append(f"w = {rep.parameters['w']} ({rep.parameters['word']})")
        for name, res in rep.checks.items():
            status = "PASS" if res.passed else "FAIL"
            lines.append(f"  {name:<11}{status}  {res.checked} checked, {res.failed} failed")
        for wit in rep.witnesses:
            lines.append(f"  witness [{wit['check']}]: {json.dumps(wit['detail'], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _emit(rep: RunReport, as_json: bool, out: str | None) -> None:
    text = json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n" if as_json else render_text(rep)
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default: all cores)")
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="schubert-toric",
                                description="Lattices, straightening relations and toric degenerations of Schubert varieties in SL(n+1)/B.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="split S_{n+1} into covered elements and exceptions")
    c.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification checks for one w")
    v.add_argument("--w", required=True, help='word "s2*s1", one-line "3,1,2" or both as "s2*s1=3,1,2"')
    v.add_argument("--n", type=int, help="rank; required when --w is a word")
    v.add_argument("--checks", default="all", help=f"comma separated subset of {','.join(CHECKS)}")
    v.add_argument("--degrees", help='degree vectors for the hilbert check, e.g. "1,1;2,0"')
    v.add_argument("--seed", type=int, default=0, help="seed for the sampled multiset check (n >= 4)")

    e = sub.add_parser("export", parents=[common], help="write an ideal, a Hasse diagram or relations")
    e.add_argument("target", choices=sorted(EXPORT_FORMATS))
    e.add_argument("--w", required=True)
    e.add_argument("--n", type=int)
    e.add_argument("--format")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if args.command == "classify":
            try:
                rep = cmd_classify(args.n, args.jobs)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            _emit(rep, args.json, args.out)
            code = 0
        elif args.command == "verify":
            w = resolve_w(args.w, args.n)
            rep = cmd_verify(w, parse_checks(args.checks), parse_degrees(args.degrees, w.n),
                             args.jobs, args.seed)
            _emit(rep, args.json, args.out)
            code = 0 if rep.passed else 1
        else:
            w = resolve_w(args.w, args.n)
            text = cmd_export(w, args.target, args.format)
            if args.out:
                Path(args.out).write_text(text, encoding="utf-8", newline="\n")
            else:
                sys.stdout.write(text)
            code = 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotCovered as exc:
        print(f"error: w = {exc.w} ({format_word(exc.w)}) is not covered by any admissibility condition",
              file=sys.stderr)
        for a, b, c in not_covered_witness(exc.w):
            print(f"non-transitivity witness: {a} <= {b} <= {c} lift pairwise, {a} <= {c} does not",
                  file=sys.stderr)
        return 2
    print(f"wall time {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
