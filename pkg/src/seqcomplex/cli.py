"""Command line interface.

One subcommand per analysis: lc, klc, celcs, decompose, structure, mcrit,
count, construct-stable, verify.  Sequence commands take --seq or --file
(one record per corpus line, errors tagged with the line number) and emit
text, JSON (schema "seqcomplex/1"), or CSV where it fits.  Exit codes:
0 success, 1 input error, 2 verification mismatch, 3 budget exceeded.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

import click

from .counting import (
    ENUM_CAP,
    class_lc,
    count_cubes,
    count_hypercubes,
    count_sequences_with_lc,
    enumerate_cubes,
    enumerate_hypercubes,
)
from .errors import (
    BudgetExceeded,
    NoEligibleExponent,
    NotACube,
    NotAHypercube,
    SeqComplexError,
)
from .hypercube import (
    cube_lc,
    extract_structure,
    lc_from_structure,
    next_lower_hypercube_lc,
    standard_decompose,
)
from .kerror import (
    DEFAULT_CAP,
    celcs,
    construct_stable,
    first_critical_bruteforce,
    first_critical_m,
    k_error_lc_bruteforce,
    kurosawa_m,
    meidl_upper_bound,
)
from .lincomp import lc, lc_form_decompose
from .sequences import Modulus, PeriodicSequence, parse_corpus, parse_sequence
from .verify import SUITES, run_suites

SCHEMA = "seqcomplex/1"

__all__ = ["cli", "main"]


# -- plumbing -------------------------------------------------------------------

def _mod_options(f):
    f = click.option("--n", type=int, required=True, help="period exponent: the period is p^n")(f)
    f = click.option("--p", type=int, required=True, help="prime base of the period")(f)
    return f


def _input_options(f):
    f = click.option(
        "--file", "path", type=click.Path(exists=True, dir_okay=False),
        help="corpus file: one sequence per line, # comments and blanks skipped",
    )(f)
    f = click.option("--seq", "literal", help="sequence literal of 0/1 characters")(f)
    return f


def _output_options(formats=("text", "json")):
    def deco(f):
        f = click.option("--out", type=click.Path(dir_okay=False), help="write the report to this file")(f)
        f = click.option(
            "--format", "fmt", type=click.Choice(formats), default="text", show_default=True
        )(f)
        return f
    return deco


def _jobs_option(f):
    return click.option(
        "--jobs", type=int, default=1, show_default=True,
        help="worker processes for corpus inputs",
    )(f)


def _load(modulus: Modulus, literal: str | None, path: str | None):
    if (literal is None) == (path is None):
        raise click.UsageError("exactly one of --seq or --file is required")
    if literal is not None:
        return [(None, parse_sequence(literal, modulus))]
    lines = Path(path).read_text().splitlines()
    return list(parse_corpus(lines, modulus))


def _with_line(e: SeqComplexError, no: int | None) -> SeqComplexError:
    return e if no is None else type(e)(f"line {no}: {e}")


def _map_rows(worker, rows, jobs: int):
    """Apply worker to each sequence, in input order, optionally in parallel."""
    out = []
    if jobs > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [(no, s, pool.submit(worker, s)) for no, s in rows]
            for no, s, fut in futures:
                try:
                    out.append((no, s, fut.result()))
                except SeqComplexError as e:
                    raise _with_line(e, no)
    else:
        for no, s in rows:
            try:
                out.append((no, s, worker(s)))
            except SeqComplexError as e:
                raise _with_line(e, no)
    return out


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        click.echo(payload)
    else:
        Path(out).write_text(payload + "\n")


def _envelope(command: str, modulus: Modulus | None, results) -> str:
    doc: dict = {"schema": SCHEMA, "command": command}
    if modulus is not None:
        doc["p"] = modulus.p
        doc["n"] = modulus.n
    doc["results"] = results
    return json.dumps(doc, indent=2)


def _render(command, modulus, mapped, fmt, out, text_line) -> None:
    if fmt == "json":
        results = [rec if no is None else {"line": no, **rec} for no, _, rec in mapped]
        _emit(_envelope(command, modulus, results), out)
        return
    lines = []
    for no, s, rec in mapped:
        prefix = f"line {no}: " if no is not None else ""
        lines.append(prefix + text_line(s, rec))
    _emit("\n".join(lines), out)


# -- per-sequence workers (top level so process pools can pickle them) -----------

def _lc_record(s: PeriodicSequence) -> dict:
    form = lc_form_decompose(lc(s), s.modulus)
    return {"L": form.value, "canonical_form": str(form), "weight": s.weight}


def _klc_record(s: PeriodicSequence, k: int, cap: int) -> dict:
    return {"k": k, "L_k": k_error_lc_bruteforce(s, k, cap=cap)}


def _celcs_record(s: PeriodicSequence, mode: str, cap: int) -> dict:
    if mode == "both":
        f = [[pt.k, pt.L] for pt in celcs(s, mode="formula", cap=cap)]
        b = [[pt.k, pt.L] for pt in celcs(s, mode="brute", cap=cap)]
        return {"mode": mode, "points": b, "formula_points": f, "agree": f == b}
    pts = celcs(s, mode=mode, cap=cap)
    return {"mode": mode, "points": [[pt.k, pt.L] for pt in pts]}


def _structure_record(s: PeriodicSequence) -> dict:
    if s.modulus.p == 2:
        try:
            m, edges, L = cube_lc(s)
        except NotACube as e:
            return {"is_hypercube": False, "reason": str(e)}
        return {"is_hypercube": True, "m": m, "edges": list(edges), "vertex": "element", "L": L}
    try:
        st = extract_structure(s)
    except NotAHypercube as e:
        return {"is_hypercube": False, "reason": str(e)}
    rec = {
        "is_hypercube": True,
        "m": st.m,
        "edges": list(st.edges),
        "vertex": str(st.vertex),
        "epsilon": st.epsilon,
        "L": lc_from_structure(st, s.modulus),
    }
    try:
        rec["next_lower_hypercube_lc"] = next_lower_hypercube_lc(st, s.modulus)
    except NoEligibleExponent:
        rec["next_lower_hypercube_lc"] = None
    return rec


def _decompose_record(s: PeriodicSequence) -> dict:
    dec = standard_decompose(s)
    return {
        "parts": [
            {"seq": part.to01(), "L": L, "structure": str(st)}
            for part, st, L in zip(dec.parts, dec.structures, dec.complexities)
        ]
    }


def _mcrit_record(s: PeriodicSequence, mode: str, cap: int) -> dict:
    rec: dict = {"mode": mode}
    if mode in ("formula", "both"):
        if s.modulus.p == 2:
            rec.update(m=kurosawa_m(s), L_after=None, m1=None, vertex_j=None, bound=None)
        else:
            rep = first_critical_m(s)
            rec.update(
                m=rep.m_s, L_after=rep.L_after, m1=rep.m1_s,
                vertex_j=rep.vertex_j, bound=meidl_upper_bound(s),
            )
    if mode in ("brute", "both"):
        rep = first_critical_bruteforce(s, cap=cap)
        brute = {"m": rep.m_s, "L_after": rep.L_after, "m1": rep.m1_s}
        if mode == "brute":
            rec.update(brute)
            rec["vertex_j"] = None
            rec["bound"] = meidl_upper_bound(s) if s.modulus.p != 2 else None
        else:
            rec["brute"] = brute
            rec["agree"] = rec["m"] == brute["m"]
    return rec


# -- commands ---------------------------------------------------------------------

class _Cli(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (SeqComplexError, click.ClickException, click.Abort, SystemExit):
            raise
        except Exception as e:
            raise click.ClickException(f"internal error: {e!r}")


@click.group(cls=_Cli)
@click.version_option(package_name="seqcomplex")
def cli() -> None:
    """Analyze p^n-periodic binary sequences."""


@cli.command("lc")
@_mod_options
@_input_options
@_output_options()
@_jobs_option
def lc_cmd(p, n, literal, path, fmt, out, jobs):
    """Exact linear complexity of each input sequence."""
    modulus = Modulus(p, n)
    mapped = _map_rows(_lc_record, _load(modulus, literal, path), jobs)
    _render("lc", modulus, mapped, fmt, out, lambda s, rec: str(rec["L"]))


@cli.command("klc")
@_mod_options
@_input_options
@click.option("--k", type=int, required=True, help="error budget")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="largest tolerated error-pattern enumeration")
@_output_options()
@_jobs_option
def klc_cmd(p, n, literal, path, k, cap, fmt, out, jobs):
    """k-error linear complexity L_k by exhaustive error enumeration."""
    modulus = Modulus(p, n)
    worker = partial(_klc_record, k=k, cap=cap)
    mapped = _map_rows(worker, _load(modulus, literal, path), jobs)
    _render("klc", modulus, mapped, fmt, out, lambda s, rec: str(rec["L_k"]))


def _celcs_text(s: PeriodicSequence, rec: dict) -> str:
    body = " ".join(f"({k},{L})" for k, L in rec["points"])
    if rec["mode"] == "both":
        body += " agree" if rec["agree"] else " MISMATCH"
    return body


def _celcs_csv(mapped) -> str:
    corpus = any(no is not None for no, _, _ in mapped)
    lines = ["seq,k,L_k" if corpus else "k,L_k"]
    for no, _, rec in mapped:
        for k, L in rec["points"]:
            lines.append(f"{no},{k},{L}" if corpus else f"{k},{L}")
    return "\n".join(lines)


@cli.command("celcs")
@_mod_options
@_input_options
@click.option("--mode", type=click.Choice(["brute", "formula", "both"]), default="brute",
              show_default=True, help="formula modes need a hypercube input")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@_output_options(("text", "json", "csv"))
@_jobs_option
def celcs_cmd(p, n, literal, path, mode, cap, fmt, out, jobs):
    """Critical points (k, L_k) of the k-error complexity spectrum."""
    modulus = Modulus(p, n)
    worker = partial(_celcs_record, mode=mode, cap=cap)
    mapped = _map_rows(worker, _load(modulus, literal, path), jobs)
    if fmt == "csv":
        _emit(_celcs_csv(mapped), out)
        return
    _render("celcs", modulus, mapped, fmt, out, _celcs_text)


@cli.command("structure")
@_mod_options
@_input_options
@_output_options()
@_jobs_option
def structure_cmd(p, n, literal, path, fmt, out, jobs):
    """Hypercube (or p=2 cube) structure: dimension, edges, vertex."""
    modulus = Modulus(p, n)
    mapped = _map_rows(_structure_record, _load(modulus, literal, path), jobs)

    def text(s, rec):
        if not rec["is_hypercube"]:
            return f"not a hypercube: {rec['reason']}"
        edges = ",".join(map(str, rec["edges"])) or "-"
        return f"m={rec['m']} edges={edges} vertex={rec['vertex']} L={rec['L']}"

    _render("structure", modulus, mapped, fmt, out, text)


@cli.command("decompose")
@_mod_options
@_input_options
@_output_options()
@_jobs_option
def decompose_cmd(p, n, literal, path, fmt, out, jobs):
    """Decompose into hypercubes with strictly decreasing complexities."""
    modulus = Modulus(p, n)
    mapped = _map_rows(_decompose_record, _load(modulus, literal, path), jobs)

    def text(s, rec):
        ls = ", ".join(str(part["L"]) for part in rec["parts"])
        head = f"{len(rec['parts'])} parts, L = {ls}"
        if len(mapped) == 1 and mapped[0][0] is None:
            details = "\n".join(
                f"  L={part['L']} [{part['structure']}] {part['seq']}"
                for part in rec["parts"]
            )
            return head + "\n" + details
        return head

    _render("decompose", modulus, mapped, fmt, out, text)


@cli.command("mcrit")
@_mod_options
@_input_options
@click.option("--mode", type=click.Choice(["formula", "brute", "both"]), default="formula",
              show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@_output_options()
@_jobs_option
def mcrit_cmd(p, n, literal, path, mode, cap, fmt, out, jobs):
    """First critical error count m(s), witness complexity, second point."""
    modulus = Modulus(p, n)
    worker = partial(_mcrit_record, mode=mode, cap=cap)
    mapped = _map_rows(worker, _load(modulus, literal, path), jobs)

    def text(s, rec):
        body = f"m={rec['m']}"
        if rec.get("L_after") is not None:
            body += f" L_m={rec['L_after']}"
        if rec.get("m1") is not None:
            body += f" m1={rec['m1']}"
        if rec.get("bound") is not None:
            body += f" bound={rec['bound']}"
        if "agree" in rec:
            body += " agree" if rec["agree"] else " MISMATCH"
        return body

    _render("mcrit", modulus, mapped, fmt, out, text)


def _parse_edges(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise click.UsageError(f"--edges must be comma-separated integers, got {text!r}")


@cli.group("count")
def count_group() -> None:
    """Counting formulas, optionally cross-checked by enumeration."""


@count_group.command("lc")
@_mod_options
@click.option("--L", "L", type=int, required=True, help="target linear complexity")
@_output_options()
def count_lc_cmd(p, n, L, fmt, out):
    """How many sequences have complexity exactly L (odd p)."""
    modulus = Modulus(p, n)
    res = count_sequences_with_lc(modulus, L)
    if fmt == "json":
        _emit(_envelope("count lc", modulus,
                        [{"L": L, "count": res.value, "expression": res.expression}]), out)
    else:
        _emit(str(res), out)


@count_group.command("hypercubes")
@_mod_options
@click.option("--edges", default="", help="comma-separated edge exponents, e.g. 0,1")
@click.option("--l", "l", type=int, default=None,
              help="vertex weight for the length-0 tuple class; omit for element vertices")
@click.option("--enumerate", "do_enum", is_flag=True, help="list every member")
@click.option("--cap", type=int, default=ENUM_CAP, show_default=True)
@_output_options()
def count_hypercubes_cmd(p, n, edges, l, do_enum, cap, fmt, out):
    """How many hypercubes share the given edge exponents and vertex class."""
    modulus = Modulus(p, n)
    es = _parse_edges(edges)
    res = count_hypercubes(modulus, es, l)
    L = class_lc(modulus, es, l)
    members = enumerate_hypercubes(modulus, es, l, cap=cap) if do_enum else None
    if fmt == "json":
        rec = {"edges": list(es), "l": l, "count": res.value,
               "expression": res.expression, "L": L}
        if members is not None:
            rec["members"] = [s.to01() for s in members]
        _emit(_envelope("count hypercubes", modulus, [rec]), out)
        return
    lines = [f"{res} (L = {L})"]
    if members is not None:
        lines += [s.to01() for s in members]
    _emit("\n".join(lines), out)


@count_group.command("cubes")
@_mod_options
@click.option("--edges", default="", help="comma-separated edge exponents")
@click.option("--enumerate", "do_enum", is_flag=True, help="list every member")
@click.option("--cap", type=int, default=ENUM_CAP, show_default=True)
@_output_options()
def count_cubes_cmd(p, n, edges, do_enum, cap, fmt, out):
    """How many p=2 cubes share the given edge exponents."""
    modulus = Modulus(p, n)
    es = _parse_edges(edges)
    res = count_cubes(modulus, es)
    L = class_lc(modulus, es, None)
    members = enumerate_cubes(modulus, es, cap=cap) if do_enum else None
    if fmt == "json":
        rec = {"edges": list(es), "count": res.value, "expression": res.expression, "L": L}
        if members is not None:
            rec["members"] = [s.to01() for s in members]
        _emit(_envelope("count cubes", modulus, [rec]), out)
        return
    lines = [f"{res} (L = {L})"]
    if members is not None:
        lines += [s.to01() for s in members]
    _emit("\n".join(lines), out)


@cli.command("construct-stable")
@_mod_options
@click.option("--k", type=int, required=True, help="error budget the complexity must survive")
@_output_options()
def construct_stable_cmd(p, n, k, fmt, out):
    """Build the maximal-complexity sequence whose L_k equals its L."""
    modulus = Modulus(p, n)
    s = construct_stable(modulus, k)
    l = 0
    while p**l <= k:
        l += 1
    rec = {
        "seq": s.to01(),
        "L": lc(s),
        "stable_through": p**l - 1,
        "first_drop": p**l,
    }
    if fmt == "json":
        _emit(_envelope("construct-stable", modulus, [{"k": k, **rec}]), out)
    else:
        _emit(
            f"{rec['seq']} L={rec['L']} stable_through={rec['stable_through']} "
            f"first_drop={rec['first_drop']}",
            out,
        )


@cli.command("verify")
@click.option("--p", type=int, default=None, help="restrict sweeps to this prime base")
@click.option("--n", type=int, default=None, help="restrict sweeps to this period exponent")
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)),
              help="suite to run; repeatable; default all")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True)
@_output_options()
def verify_cmd(p, n, suites, seed, cap, fmt, out):
    """Cross-check the closed forms against brute force; exit 2 on mismatch."""
    if (p is None) != (n is None):
        raise click.UsageError("--p and --n must be given together")
    modulus = Modulus(p, n) if p is not None else None
    reports = run_suites(list(suites) or None, modulus=modulus, seed=seed, cap=cap)
    if fmt == "json":
        results = [
            {"suite": r.name, "checks": r.checks, "agreements": r.agreements,
             "failures": r.failures, "counterexamples": r.details}
            for r in reports
        ]
        _emit(_envelope("verify", modulus, results), out)
    else:
        lines = []
        for r in reports:
            lines.append(str(r))
            lines.extend(f"  counterexample: {d}" for d in r.details)
        _emit("\n".join(lines), out)
    if any(not r.ok for r in reports):
        raise SystemExit(2)


def main(argv: list[str] | None = None) -> int:
    """Entry point mapping domain errors to the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.Abort:
        click.echo("aborted", err=True)
        return 130
    except click.ClickException as e:
        e.show()
        return 1
    except BudgetExceeded as e:
        click.echo(f"error: {e}", err=True)
        return 3
    except SeqComplexError as e:
        click.echo(f"error: {e}", err=True)
        return 1
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 0 if code is None else 1
