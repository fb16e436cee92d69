"""weylift command line: root-data tables, verification suites and closures.

Exit codes: 0 when every check passes, 1 on any failed check (or a closure
whose order differs from --expect, or an exceeded cap), 2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from typing import Callable

import click

from weylift import __version__
from weylift.closure import DEFAULT_CAP, ClosureCapExceeded, ClosureResult
from weylift.report import SuiteReport
from weylift.rootdata import MIN_RANK, build_root_datum, fundamental_group, generate_root_system

TYPES = ("A", "B", "C", "D")
SUITES = ("gl", "classical", "sl", "so", "pin", "spin", "quat", "adjoint", "serre", "all")


def _dump(doc, out_path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _fs(q) -> str:
    return f"{q.numerator}/{q.denominator}"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="weylift")
def main() -> None:
    """Exact Weyl-group lifts into classical groups and their verification."""


# ---------------------------------------------------------------------------
# rootdata


@main.command("rootdata")
@click.option("--type", "type_label", type=click.Choice(TYPES), required=True)
@click.option("--rank", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
def cmd_rootdata(type_label: str, rank: int, out_path: str | None) -> None:
    """Print the root datum of a classical type as JSON."""
    try:
        datum = build_root_datum(type_label, rank)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = datum.to_json()
    doc["roots"] = [[_fs(x) for x in r] for r in generate_root_system(datum)]
    doc["fundamental_group"] = fundamental_group(type_label, rank)
    _dump(doc, out_path)


# ---------------------------------------------------------------------------
# verify


def _need(value, what: str, suite: str):
    if value is None:
        raise click.UsageError(f"suite {suite!r} needs --{what}")
    return value


def _suite_runners(suite: str, type_label: str | None, rank: int | None) -> list[Callable[[], SuiteReport]]:
    """Closures producing the reports for one suite (validated up front)."""
    from weylift import clifford, liealg, lifts, quat

    def check_rank(t: str, r: int) -> None:
        if r < MIN_RANK[t]:
            raise click.UsageError(f"type {t} needs rank >= {MIN_RANK[t]}")

    if suite == "gl":
        r = _need(rank, "rank", suite)
        if r < 1:
            raise click.UsageError("rank must be >= 1")
        return [lambda: lifts.verify_gl_tits_presentation(r + 1), lambda: clifford.verify_pin_gl_relations(r + 1)]
    if suite == "classical":
        t, r = _need(type_label, "type", suite), _need(rank, "rank", suite)
        if t not in ("B", "C", "D"):
            raise click.UsageError("classical suite needs --type B, C or D")
        check_rank(t, r)
        runners = [lambda: lifts.verify_classical_suite(t, r), lambda: lifts.theta_action_on_gl(t, r)]
        if t == "D":
            runners.append(lambda: lifts.outer_rep_D(r).report)
        return runners
    if suite == "sl":
        r = _need(rank, "rank", suite)
        check_rank("A", r)
        return [lambda: lifts.sl_lift(r).report]
    if suite == "so":
        r = _need(rank, "rank", suite)
        check_rank("B", r)
        return [lambda: lifts.so_odd_lift(r).report]
    if suite == "pin":
        t, r = _need(type_label, "type", suite), _need(rank, "rank", suite)
        if t not in ("B", "D"):
            raise click.UsageError("pin suite needs --type B or D")
        check_rank(t, r)
        return [lambda: clifford.pin_weyl_lift(t, r)[1]]
    if suite == "spin":
        r = _need(rank, "rank", suite)
        check_rank("B", r)
        return [lambda: clifford.spin_lift_B(r)[1]]
    if suite == "quat":
        r = rank if rank is not None else 2
        if not 1 <= r <= 3:
            raise click.UsageError("quat suite needs 1 <= rank <= 3")
        return [lambda: quat.verify_quat_suite(r)]
    if suite in ("adjoint", "serre"):
        t, r = _need(type_label, "type", suite), _need(rank, "rank", suite)
        check_rank(t, r)
        fn = liealg.verify_adjoint_suite if suite == "adjoint" else liealg.verify_serre
        return [lambda: fn(t, r)]
    # all
    r = _need(rank, "rank", suite)
    types = [type_label] if type_label else list(TYPES)
    runners: list[Callable[[], SuiteReport]] = []
    if not type_label or type_label == "A":
        runners += _suite_runners("gl", None, r) + _suite_runners("sl", None, r)
    for t in types:
        if r < MIN_RANK[t]:
            continue
        runners += _suite_runners("serre", t, r) + _suite_runners("adjoint", t, r)
        if t in ("B", "C", "D"):
            runners += _suite_runners("classical", t, r)
        if t in ("B", "D"):
            runners += _suite_runners("pin", t, r)
        if t == "B":
            runners += _suite_runners("so", None, r) + _suite_runners("spin", None, r)
        if t == "C" and r <= 3:
            runners += _suite_runners("quat", None, r)
    return runners


def _run(runner: Callable[[], SuiteReport], suite: str) -> SuiteReport:
    try:
        return runner()
    except (ArithmeticError, ValueError, AssertionError) as exc:
        rep = SuiteReport(suite, None, None)
        rep.run("suite construction", lambda: (_ for _ in ()).throw(exc))
        return rep.finish()


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES), required=True)
@click.option("--type", "type_label", type=click.Choice(TYPES), default=None)
@click.option("--rank", type=int, default=None)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
def cmd_verify(suite: str, type_label: str | None, rank: int | None, as_json: bool, out_path: str | None) -> None:
    """Run verification suites; exit 1 if any check fails."""
    runners = _suite_runners(suite, type_label, rank)
    reports = [_run(r, suite) for r in runners]
    ok = all(r.passed for r in reports)
    if as_json or out_path:
        doc = {"passed": ok, "reports": [r.to_json() for r in reports]}
        _dump(doc, out_path)
    if not as_json:
        for r in reports:
            click.echo(r.to_text())
        n_fail = sum(len(r.failures()) for r in reports)
        click.echo(f"overall: {'PASS' if ok else 'FAIL'} ({n_fail} failing checks)")
    sys.exit(0 if ok else 1)


# ---------------------------------------------------------------------------
# closure


def _catalog() -> dict[str, tuple[str, Callable[[int], tuple[list, str]]]]:
    """name -> (description, rank -> (generators, element kind))."""
    from weylift import clifford, lifts, quat

    def gl_weyl(r):
        return list(lifts.gl_generators(r + 1).S), "matrix"

    def gl_tits(r):
        g = lifts.gl_generators(r + 1)
        return list(g.S) + list(g.T), "matrix"

    def classical(t):
        return lambda r: (list(lifts.classical_generators(t, r).Sg), "matrix")

    def c_stilde(r):
        lift = lifts.classical_generators("C", r)
        return [lift.Stilde1] + list(lift.Sg[1:]), "matrix"

    return {
        "gl-weyl": ("S_i in GL_{r+1}", gl_weyl),
        "gl-tits": ("S_i and T_k in GL_{r+1}", gl_tits),
        "B-weyl-lift": ("S^B_i in GL_{2r+1}", classical("B")),
        "C-tits": ("S^C_i in GL_{2r}", classical("C")),
        "C-stilde": ("Stilde^C_1 and S^C_k, k > 1", c_stilde),
        "D-weyl-lift": ("S^D_i in GL_{2r}", classical("D")),
        "sl-lift": ("sigma_i in SL_{r+1}", lambda r: (lifts.sl_lift(r, closure_max_rank=0).generators, "matrix")),
        "so-odd": ("sigma_i in SO_{2r+1}", lambda r: (lifts.so_odd_lift(r, closure_max_rank=0).generators, "matrix")),
        "pin-b": ("Pin lift of W(B_r)", lambda r: (clifford._weyl_lift_elements("B", r), "clifford")),
        "pin-d": ("Pin lift of W(D_r)", lambda r: (clifford._weyl_lift_elements("D", r), "clifford")),
        "spin-b": ("Spin lift of W(B_r)", lambda r: (clifford.spin_lift_B(r, closure_max_rank=0)[0], "clifford")),
        "quat-c": ("permutations and diag(.., j, ..) in GL_r(H)", lambda r: (r, "quat")),
    }


def _closure(gens, kind: str, cap: int, words: bool) -> ClosureResult:
    from weylift.clifford import clifford_closure
    from weylift.exactmat import group_closure
    from weylift.quat import quat_weyl_closure

    if kind == "matrix":
        return group_closure(gens, cap=cap, track_words=words)
    if kind == "clifford":
        return clifford_closure(gens, cap=cap, track_words=words)
    res, _ = quat_weyl_closure(gens, cap=cap)
    return res


@main.command("closure")
@click.option("--set", "set_arg", required=True, help="Catalog entry NAME:RANK, e.g. C-tits:2.")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@click.option("--expect", type=int, default=None, help="Exit 1 unless the order equals this value.")
@click.option("--words", is_flag=True, help="Include a shortest generator word per element (JSON only).")
@click.option("--full", is_flag=True, help="Include every element in the JSON output.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
def cmd_closure(
    set_arg: str, cap: int, expect: int | None, words: bool, full: bool, as_json: bool, out_path: str | None
) -> None:
    """Order of the group generated by a catalogued generator set."""
    catalog = _catalog()
    name, sep, rank_s = set_arg.partition(":")
    if not sep or name not in catalog or not rank_s.isdigit():
        raise click.UsageError(f"--set must be NAME:RANK with NAME in {', '.join(sorted(catalog))}")
    rank = int(rank_s)
    if cap < 1:
        raise click.UsageError("--cap must be positive")
    try:
        gens, kind = catalog[name][1](rank)
    except (ValueError, KeyError) as exc:
        raise click.UsageError(str(exc)) from exc
    try:
        res = _closure(gens, kind, cap, words)
    except ClosureCapExceeded as exc:
        doc = {"set": set_arg, "error": "cap exceeded", "cap": exc.cap, "partial": exc.partial}
        if as_json or out_path:
            _dump(doc, out_path)
        else:
            click.echo(f"{set_arg}: cap {exc.cap} exceeded (partial count {exc.partial})")
        sys.exit(1)
    ok = expect is None or res.order == expect
    doc = {"set": set_arg, "order": res.order}
    if expect is not None:
        doc["expect"] = expect
        doc["match"] = ok
    if words and res.words is not None:
        doc["words"] = [list(w) for w in res.words]
    if full:
        doc["elements"] = [g.to_json() for g in res.elements]
    if as_json or out_path:
        _dump(doc, out_path)
    else:
        line = f"{set_arg}: order {res.order}"
        if expect is not None:
            line += f" ({'matches' if ok else 'differs from'} expected {expect})"
        click.echo(line)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":  # pragma: no cover
    main()
