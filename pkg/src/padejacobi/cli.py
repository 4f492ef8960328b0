"""Command-line interface.

Function specifications are INI files with ``[measure]``,
``[perturbation]`` (optional) and ``[run]`` (optional defaults)
sections::

    [measure]
    density   = lebesgue          ; arcsine | lebesgue | table | none
    intervals = -1:-2/5, 3/10:1   ; lo:hi pairs, comma separated
    center    = 0                 ; arcsine recentering
    atoms     = -1/2:1/3          ; location:weight pairs
    table     = -1:0.5, 0:1, 1:0.5
    normalize = false
    t_weight  = false

    [perturbation]
    q1 = 1                        ; polynomial coefficients, ascending
    w1 = 1
    q2 = 0
    w2 = 1

    [run]
    depth = 10
    precision_bits = 256
"""

from __future__ import annotations

import configparser
import sys
from fractions import Fraction
from pathlib import Path

import click
from mpmath import mp

from .defclass import DSeries, classify
from .errors import ConfigError, PadeJacobiError
from .gapgeometry import GapSpec, harmonic_measure, pole_forecast
from .measures import (FunctionSpec, MeasureSpec, RationalPerturbation,
                       assemble_series, eval_exact)
from .pade import (definitizable_diagonal, diagonal, modified_diagonal,
                   subdiagonal, verify_contact)
from .pfraction import build_gjm, expand_pfraction
from .poly import Poly
from .recurrence import poly_pair
from .scalars import (as_decimal_string, parse_scalar, set_precision, to_mpf)
from .scenarios import SCENARIOS, run_scenario


def _parse_pairs(text, what):
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(":")
        if len(parts) != 2:
            raise ConfigError(f"malformed {what} entry {chunk!r}")
        out.append((parse_scalar(parts[0]), parse_scalar(parts[1])))
    return tuple(out)


def _parse_poly(text):
    return Poly([parse_scalar(tok) for tok in text.split()])


def load_spec(path):
    """Read a FunctionSpec (and run defaults) from an INI file."""
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigError(f"cannot read config file {path}")
    if "measure" not in cp:
        raise ConfigError("config needs a [measure] section")
    m = cp["measure"]
    density = m.get("density", fallback="none").strip().lower()
    if density in ("none", ""):
        density = None
    try:
        mspec = MeasureSpec(
            intervals=_parse_pairs(m.get("intervals", ""), "interval"),
            density=density,
            arcsine_center=parse_scalar(m.get("center", "0")),
            table=_parse_pairs(m.get("table", ""), "table"),
            atoms=_parse_pairs(m.get("atoms", ""), "atom"),
            normalize=m.getboolean("normalize", fallback=False),
        )
    except (ValueError, PadeJacobiError) as exc:
        raise ConfigError(str(exc)) from exc
    pert = None
    if "perturbation" in cp:
        p = cp["perturbation"]
        pert = RationalPerturbation(
            q1=_parse_poly(p.get("q1", "1")),
            w1=_parse_poly(p.get("w1", "1")),
            q2=_parse_poly(p.get("q2", "0")),
            w2=_parse_poly(p.get("w2", "1")),
        )
    spec = FunctionSpec(mspec, pert,
                        t_weight=m.getboolean("t_weight", fallback=False))
    run = dict(cp["run"]) if "run" in cp else {}
    return spec, run


def _apply_precision(ctx_precision, run):
    bits = ctx_precision or int(run.get("precision_bits", 0)) or 256
    set_precision(bits)
    return bits


def _depth(opt, run, default=10):
    return opt or int(run.get("depth", 0)) or default


def _emit(text, out):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
        click.echo(f"wrote {out}")
    else:
        click.echo(text)


@click.group()
@click.option("--precision-bits", type=int, default=None,
              help="Working precision in bits (default 256 or [run]).")
@click.pass_context
def main(ctx, precision_bits):
    """Pade approximants of Markov-type functions via P-fractions."""
    ctx.ensure_object(dict)
    ctx.obj["precision_bits"] = precision_bits


@main.command("moments")
@click.argument("config", type=click.Path(exists=True))
@click.option("--count", type=int, default=12, help="How many coefficients.")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def moments_cmd(ctx, config, count, out):
    """Series coefficients s_j of the configured function."""
    spec, run = load_spec(config)
    _apply_precision(ctx.obj["precision_bits"], run)
    F = assemble_series(spec, count)
    lines = [f"s_{j} = {as_decimal_string(c)}"
             for j, c in enumerate(F.coeffs)]
    _emit("\n".join(lines), out)


@main.command("pfraction")
@click.argument("config", type=click.Path(exists=True))
@click.option("--depth", type=int, default=None)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def pfraction_cmd(ctx, config, depth, out):
    """P-fraction expansion and its generalized Jacobi matrix (JSON)."""
    spec, run = load_spec(config)
    _apply_precision(ctx.obj["precision_bits"], run)
    depth = _depth(depth, run)
    F = assemble_series(spec, 2 * depth + 2)
    pf = expand_pfraction(F, depth)
    _emit(build_gjm(pf).to_json(), out)


@main.command("pade")
@click.argument("config", type=click.Path(exists=True))
@click.option("--depth", type=int, default=None)
@click.option("--kind",
              type=click.Choice(["diagonal", "subdiagonal",
                                 "definitizable", "modified"]),
              default="diagonal")
@click.option("--at", "at_", default=None,
              help="Also evaluate the approximant at this point.")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def pade_cmd(ctx, config, depth, kind, at_, out):
    """Numerator/denominator of the requested approximant."""
    spec, run = load_spec(config)
    _apply_precision(ctx.obj["precision_bits"], run)
    depth = _depth(depth, run)
    F = assemble_series(spec, 2 * depth + 2)
    pair = poly_pair(expand_pfraction(F, depth))
    builder = {"diagonal": diagonal, "subdiagonal": subdiagonal,
               "definitizable": definitizable_diagonal,
               "modified": modified_diagonal}[kind]
    r = builder(pair, pair.depth)
    lines = [f"kind: {r.kind}",
             f"contact order: {r.contact_order}",
             "numerator (ascending): "
             + " ".join(as_decimal_string(c) for c in r.num.coeffs),
             "denominator (ascending): "
             + " ".join(as_decimal_string(c) for c in r.den.coeffs)]
    if at_ is not None:
        lam = parse_scalar(at_)
        lines.append(f"value at {at_}: "
                     f"{as_decimal_string(r.evaluate(lam))}")
    _emit("\n".join(lines), out)


@main.command("converge")
@click.argument("config", type=click.Path(exists=True))
@click.option("--depth", type=int, default=None)
@click.option("--grid", default="2, -2, 3",
              help="Comma-separated evaluation points off the support.")
@click.option("--tol", default="1e-20",
              help="Error the deepest approximant must reach.")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def converge_cmd(ctx, config, depth, grid, tol, out):
    """Error table |F - F^[n/n]| over a point grid; exit 1 when the
    deepest diagonal misses --tol at some grid point."""
    spec, run = load_spec(config)
    _apply_precision(ctx.obj["precision_bits"], run)
    depth = _depth(depth, run)
    F = assemble_series(spec, 2 * depth + 2)
    pair = poly_pair(expand_pfraction(F, depth))
    pts = [parse_scalar(p.strip()) for p in grid.split(",") if p.strip()]
    tolv = to_mpf(parse_scalar(tol))
    lines, ok = [], True
    for lam in pts:
        ref = eval_exact(spec, lam)
        for j in range(1, pair.depth + 1):
            err = abs(to_mpf(diagonal(pair, j).evaluate(lam)) - ref)
            lines.append(f"lambda={lam}  j={j}  error={mp.nstr(err, 12)}")
        ok = ok and err <= tolv
    lines.append("PASS" if ok else "FAIL")
    _emit("\n".join(lines), out)
    if not ok:
        sys.exit(1)


@main.command("gap")
@click.option("--config", type=click.Path(exists=True), default=None,
              help="Take the gap from a configured two-band measure.")
@click.option("--alpha", default=None, help="Left gap endpoint (< 0).")
@click.option("--beta", default=None, help="Right gap endpoint (> 0).")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def gap_cmd(ctx, config, alpha, beta, out):
    """Harmonic measure of a gapped support and the pole forecast."""
    _apply_precision(ctx.obj["precision_bits"], {})
    if config is not None:
        spec, run = load_spec(config)
        g = spec.gap()
        if g is None:
            raise click.ClickException("configured support has no gap")
        alpha, beta = g
    elif alpha is None or beta is None:
        raise click.ClickException("need --config or both --alpha/--beta")
    else:
        alpha, beta = parse_scalar(alpha), parse_scalar(beta)
    gap = GapSpec(alpha, beta)
    hm = harmonic_measure(gap)
    fc = pole_forecast(gap)
    lines = [
        f"modulus k            = {mp.nstr(to_mpf(hm.modulus), 30)}",
        f"K(k)                 = {mp.nstr(to_mpf(hm.K), 30)}",
        f"omega(infinity)      = {mp.nstr(to_mpf(hm.omega_infinity), 30)}",
        f"omega(0)             = {mp.nstr(to_mpf(hm.omega_zero), 30)}",
        f"rationality verdict  = {fc.verdict_infinity.verdict}",
        f"best approximation   = {fc.verdict_infinity.approximation}",
        f"pole-limit forecast  = {fc.forecast}",
    ]
    _emit("\n".join(lines), out)


@main.group("scenario")
def scenario_grp():
    """Named end-to-end case studies."""


@scenario_grp.command("list")
def scenario_list():
    """Names of the available scenarios."""
    for name, fn in SCENARIOS.items():
        click.echo(f"{name:20s} {fn.__doc__ or ''}".rstrip())


@scenario_grp.command("run")
@click.argument("name")
@click.option("--depth", type=int, default=None)
@click.option("--out", type=click.Path(), default=None,
              help="Directory for the exported report.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json")
@click.pass_context
def scenario_run(ctx, name, depth, out, fmt):
    """Run one scenario; exits 1 when an internal check fails."""
    bits = ctx.obj.get("precision_bits") if ctx.obj else None
    set_precision(bits or 256)
    kwargs = {"depth": depth} if depth else {}
    try:
        rep = run_scenario(name, **kwargs)
    except PadeJacobiError as exc:
        raise click.ClickException(str(exc))
    for label, ok in rep.checks:
        click.echo(f"[{'ok' if ok else 'FAIL'}] {label}")
    for line in rep.summary:
        click.echo(line)
    if out:
        for p in rep.write(out, fmt):
            click.echo(f"wrote {p}")
    if not rep.passed():
        sys.exit(1)


if __name__ == "__main__":
    main()
