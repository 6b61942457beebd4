"""Command line interface.

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
Results go to stdout; diagnostics to stderr.
"""

from __future__ import annotations

import functools
import json
import warnings

import click

from .enumeration import enumerate_topologies
from .epi import is_epi_bruteforce, is_epi_dense, non_epi_witness
from .errors import FintopError, TopologyAxiomError
from .io import load_map, load_space, map_to_document, space_to_document
from .maps import ContinuousMap, image
from .quotient import STRATEGIES, factor_through_reflection, hausdorff_reflection
from .space import (
    closure,
    format_set,
    is_dense,
    mask_of,
    members,
    separation_axioms,
    validate_topology,
)
from .suite import FAULTS, run_suite

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2


def _emit(output: str, payload: dict, text: str) -> None:
    click.echo(json.dumps(payload) if output == "json" else text)


def _parse_set(value: str) -> int:
    value = value.strip()
    if not value:
        return 0
    try:
        return mask_of(int(tok) for tok in value.split(","))
    except ValueError:
        raise FintopError(f"cannot parse point set {value!r}; expected e.g. 0,2") from None


def _map_text(f: ContinuousMap) -> str:
    return "[" + ", ".join(f"{a}->{b}" for a, b in enumerate(f.assignment)) + "]"


output_option = click.option(
    "--output", type=click.Choice(["text", "json"]), default="text", show_default=True,
    help="Result format.",
)


def command(fn):
    """Map library input errors to exit status 2."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except FintopError as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(EXIT_INPUT_ERROR)
    return wrapper


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Finite topological spaces: closure, Hausdorff reflection, epimorphisms."""
    warnings.simplefilter("default")


@cli.command()
@click.argument("space")
@output_option
@command
def validate(space, output):
    """Check the topology axioms; exit 1 if they fail."""
    try:
        s = load_space(space)
    except TopologyAxiomError as exc:
        _emit(output, {"valid": False, "error": type(exc).__name__, "message": str(exc)},
              f"invalid: {type(exc).__name__}: {exc}")
        raise SystemExit(EXIT_CHECK_FAILED)
    s = validate_topology(s.n, s.opens)
    _emit(output, {"valid": True, "space": space_to_document(s)},
          f"valid: {s.n} points, {len(s.opens)} opens")


@cli.command(name="closure")
@click.argument("space")
@click.option("--set", "points", required=True, help="Comma-separated point indices.")
@output_option
@command
def closure_cmd(space, points, output):
    """Closure of a point set."""
    s = load_space(space)
    c = closure(s, _parse_set(points))
    _emit(output, {"closure": members(c)}, format_set(c))


@cli.command()
@click.argument("space")
@click.option("--set", "points", required=True, help="Comma-separated point indices.")
@output_option
@command
def dense(space, points, output):
    """Whether a point set is dense."""
    s = load_space(space)
    m = _parse_set(points)
    result = is_dense(s, m)
    _emit(output, {"dense": result, "closure": members(closure(s, m))}, "dense" if result else "not dense")


@cli.command()
@click.argument("space")
@output_option
@command
def hausdorff(space, output):
    """Separation axioms T0, T1, T2."""
    s = load_space(space)
    ax = separation_axioms(s)
    _emit(output, {"hausdorff": ax.t2, "t0": ax.t0, "t1": ax.t1, "t2": ax.t2},
          f"hausdorff: {ax.t2} (T0={ax.t0}, T1={ax.t1})")


@cli.command()
@click.argument("space")
@click.option("--strategy", type=click.Choice(STRATEGIES), default="components", show_default=True)
@output_option
@command
def reflect(space, strategy, output):
    """Hausdorff reflection H(C) and its projection."""
    s = load_space(space)
    refl = hausdorff_reflection(s, strategy)
    payload = {
        "blocks": refl.partition.as_lists(),
        "space": space_to_document(refl.space),
        "projection": list(refl.projection.assignment),
    }
    text = "\n".join([
        f"H(C) has {refl.space.n} points",
        "blocks: " + " ".join(format_set(b) for b in refl.partition.blocks),
        "r = " + _map_text(refl.projection),
    ])
    _emit(output, payload, text)


@cli.command()
@click.argument("space")
@click.argument("map_file", metavar="MAP")
@output_option
@command
def factor(space, map_file, output):
    """Factor a map into a Hausdorff space through H(C)."""
    s = load_space(space)
    f = load_map(map_file)
    if f.dom != s:
        raise FintopError("map domain does not match the given space")
    fbar = factor_through_reflection(hausdorff_reflection(s), f)
    _emit(output, {"factor": map_to_document(fbar)}, "fbar = " + _map_text(fbar))


@cli.command()
@click.argument("map_file", metavar="MAP")
@click.option("--category", type=click.Choice(["haus", "top"]), default="haus", show_default=True)
@click.option("--bound", type=int, default=None, help="Largest codomain size for brute force.")
@click.option("--brute-force", is_flag=True, help="Search parallel pairs instead of testing density.")
@output_option
@command
def epi(map_file, category, bound, brute_force, output):
    """Decide whether a map is an epimorphism."""
    f = load_map(map_file)
    if category == "haus" and not brute_force:
        verdict = is_epi_dense(f)
    else:
        verdict = is_epi_bruteforce(f, category, bound)
    payload = {"epi": verdict.is_epi, "method": verdict.method, "category": category}
    text = f"{'epi' if verdict.is_epi else 'not epi'} ({verdict.method}, {category})"
    if verdict.counterexample is not None:
        g, h = verdict.counterexample.g, verdict.counterexample.h
        payload["counterexample"] = {"g": map_to_document(g), "h": map_to_document(h)}
        text += f"\ng = {_map_text(g)}\nh = {_map_text(h)}"
    _emit(output, payload, text)


@cli.command()
@click.argument("map_file", metavar="MAP")
@output_option
@command
def witness(map_file, output):
    """Parallel pair showing a non-dense map is not epi in Haus."""
    f = load_map(map_file)
    pair = non_epi_witness(f)
    if pair is None:
        _emit(output, {"witness": None, "image": members(image(f))}, "image is dense; no witness")
        return
    _emit(output, {"witness": {"g": map_to_document(pair.g), "h": map_to_document(pair.h)}},
          f"g = {_map_text(pair.g)}\nh = {_map_text(pair.h)}")


@cli.command(name="enumerate")
@click.option("--n", "n", type=int, required=True, help="Number of points.")
@click.option("--up-to-homeo", is_flag=True, help="One representative per homeomorphism class.")
@click.option("--allow-large", is_flag=True, help="Permit n=5.")
@output_option
@command
def enumerate_cmd(n, up_to_homeo, allow_large, output):
    """List the topologies on n points."""
    spaces = enumerate_topologies(n, up_to_homeo, allow_large)
    payload = {"n": n, "count": len(spaces), "spaces": [space_to_document(s) for s in spaces]}
    text = "\n".join([f"{len(spaces)} topologies"] + [
        " ".join(format_set(o) for o in s.opens) for s in spaces
    ])
    _emit(output, payload, text)


@cli.command()
@click.option("--max-n", type=int, default=3, show_default=True)
@click.option("--inject-fault", type=click.Choice(sorted(FAULTS)), default=None,
              help="Run with a deliberately broken reflection (self-test of the suite).")
@output_option
@command
def suite(max_n, inject_fault, output):
    """Run every property check exhaustively; exit 1 on any failure."""
    report = run_suite(max_n, reflect=FAULTS[inject_fault] if inject_fault else None)
    click.echo(report.to_json() if output == "json" else report.to_text())
    if not report.passed:
        raise SystemExit(EXIT_CHECK_FAILED)


def main(argv=None):
    cli.main(args=argv, prog_name="fintop")


if __name__ == "__main__":
    main()
