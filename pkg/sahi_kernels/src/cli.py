"""CLI interface for sahi-kernels."""

import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import click
import typer
from loguru import logger

try:  # newer typer vendors its own click; catch whichever it raises
    from typer._click import exceptions as _typer_click_exceptions
except ImportError:  # pragma: no cover
    _typer_click_exceptions = click.exceptions

_UsageErrors = (click.exceptions.UsageError, _typer_click_exceptions.UsageError)
_ExitErrors = (click.exceptions.Exit, _typer_click_exceptions.Exit)

from sahi_kernels.src.config import Config, load_config
from sahi_kernels.src.errors import InapplicableError, ParseError, SahiKernelsError
from sahi_kernels.src.gammaval import set_pole_epsilon
from sahi_kernels.src.jack import eval_at_ones, jack_laurent
from sahi_kernels.src.kernel import (
    KernelSpec,
    L_lambda,
    Space,
    c_lambda,
    c_lambda_reduced,
    selberg_value,
)
from sahi_kernels.src.oracle import (
    QuadratureSpec,
    gram_matrix,
    torus_integral_exact,
    torus_integral_numeric,
)
from sahi_kernels.src.partitions import (
    format_rational,
    format_signature,
    parse_rational,
    parse_real,
    parse_signature,
)
from sahi_kernels.src.positivity import (
    definite_predicate,
    minimal_witness_radius,
    region_grid,
    report_from_census,
    sign_census,
    st_to_sigma_tau,
)
from sahi_kernels.src.sobolev import (
    direct_form_quadrature,
    expand_in_jack,
    form_value,
    form_value_reduced,
    l2_degeneration_report,
)
from sahi_kernels.src.storage.io import dumps_payload, write_manifest, write_payload, write_table_csv
from sahi_kernels.src.sympoly import parse_sympoly, render
from sahi_kernels.src.validate.schemas import validate_region_grid, validate_scan_census


app = typer.Typer(help="Jack polynomials, determinant-kernel eigenvalues and positivity checks")

LOG_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"
    text = "text"


@dataclass
class CommandResult:
    """What every command emits: status, payload and diagnostics."""

    status: str
    payload: Dict[str, Any]
    diagnostics: List[str] = field(default_factory=list)
    exit_code: Optional[int] = None

    def __post_init__(self) -> None:
        if self.exit_code is None:
            self.exit_code = 0 if self.status == "ok" else 1

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status, "payload": self.payload, "diagnostics": self.diagnostics}


def _setup(config_file: Optional[Path], verbose: bool) -> Config:
    """Load configuration and install the stderr log sink."""
    config = load_config(config_file=config_file)
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else config.log_level, format=LOG_FORMAT)
    set_pole_epsilon(config.pole_epsilon)
    return config


_last_result: Optional[CommandResult] = None


def _finish(result: CommandResult, fmt: OutputFormat = OutputFormat.json, text: Optional[str] = None) -> None:
    global _last_result
    _last_result = result
    if fmt == OutputFormat.text and text is not None and result.status == "ok":
        typer.echo(text)
    else:
        typer.echo(dumps_payload(result.to_dict()))
    if result.exit_code:
        raise typer.Exit(result.exit_code)


def _guarded(body: Callable[[], None]) -> None:
    """Run a command body; domain errors become status "error" with exit code 1."""
    try:
        body()
    except SahiKernelsError as e:
        logger.error(f"{type(e).__name__}: {e}")
        _finish(CommandResult("error", {"error": type(e).__name__, "message": str(e)}))


def _param(text: str, name: str):
    try:
        return parse_real(text)
    except ParseError as e:
        raise typer.BadParameter(str(e), param_hint=name)


def _space(text: str) -> Space:
    try:
        return Space.parse(text)
    except ParseError as e:
        raise typer.BadParameter(str(e), param_hint="--space")


def _sigma_tau(
    space: Space, n: int, sigma: Optional[str], tau: Optional[str], s: Optional[str], t: Optional[str]
) -> Tuple[Any, Any]:
    if s is not None or t is not None:
        if s is None or t is None or sigma is not None or tau is not None:
            raise typer.BadParameter("Give either --sigma/--tau or --s/--t", param_hint="--s/--t")
        return st_to_sigma_tau(space, n, _param(s, "--s"), _param(t, "--t"))
    if sigma is None or tau is None:
        raise typer.BadParameter("Both --sigma and --tau are required", param_hint="--sigma/--tau")
    return _param(sigma, "--sigma"), _param(tau, "--tau")


def _signature(text: str, n: int, hint: str = "--lambda"):
    try:
        sig = parse_signature(text)
    except ParseError as e:
        raise typer.BadParameter(str(e), param_hint=hint)
    if len(sig) != n:
        raise typer.BadParameter(f"{text} has {len(sig)} parts, expected {n}", param_hint=hint)
    return sig


def _rational(text: str, hint: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def _sympoly(text: str, n: int, hint: str):
    try:
        return parse_sympoly(text, n)
    except ParseError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


def _range(text: str, hint: str) -> Tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise typer.BadParameter(f"Range '{text}' must look like lo:hi", param_hint=hint)
    return _rational(lo, hint), _rational(hi, hint)


ConfigOption = typer.Option(None, "--config", "-c", help="Path to config YAML file")
VerboseOption = typer.Option(False, "--verbose", "-v", help="Enable verbose logging")


@app.command()
def jack(
    lam: str = typer.Option(..., "--lambda", help="Signature, e.g. 2,0"),
    n: int = typer.Option(..., "--n", help="Number of variables"),
    kappa: str = typer.Option(..., "--kappa", help="Rational kappa > 0, e.g. 1/2"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="text | json"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Print the Jack polynomial in the monomial basis and its value at 1ⁿ."""
    _setup(config_file, verbose)
    sig = _signature(lam, n)
    kappa_value = _rational(kappa, "--kappa")

    def body() -> None:
        poly = jack_laurent(sig, n, kappa_value)
        rendering = render(poly.expansion)
        ones = format_rational(eval_at_ones(poly))
        payload = {
            "lambda": format_signature(sig),
            "n": n,
            "kappa": format_rational(poly.kappa),
            "expansion": rendering,
            "eval_at_ones": ones,
        }
        _finish(CommandResult("ok", payload), fmt, f"{rendering}\nP(1^n) = {ones}")

    _guarded(body)


@app.command()
def eigen(
    space: str = typer.Option(..., "--space", help="UN | UO | USp"),
    n: int = typer.Option(..., "--n", help="Torus rank"),
    lam: str = typer.Option(..., "--lambda", help="Signature, e.g. 2,-1"),
    sigma: Optional[str] = typer.Option(None, "--sigma"),
    tau: Optional[str] = typer.Option(None, "--tau"),
    s: Optional[str] = typer.Option(None, "--s", help="Shifted parameter s (instead of sigma)"),
    t: Optional[str] = typer.Option(None, "--t", help="Shifted parameter t (instead of tau)"),
    reduced: bool = typer.Option(False, "--reduced", help="Drop the λ-independent prefactor"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Kernel eigenvalue c_λ(σ, τ) as {sign, log_abs, exact}."""
    _setup(config_file, verbose)
    space_value = _space(space)
    sig = _signature(lam, n)
    sigma_value, tau_value = _sigma_tau(space_value, n, sigma, tau, s, t)

    def body() -> None:
        spec = KernelSpec(space_value, n, sigma_value, tau_value)
        value = c_lambda_reduced(sig, spec) if reduced else c_lambda(sig, spec)
        payload = {**value.to_dict(), "lambda": format_signature(sig), "spec": spec.to_dict(), "reduced": reduced}
        _finish(CommandResult("ok", payload))

    _guarded(body)


@app.command()
def selberg(
    space: str = typer.Option(..., "--space", help="UN | UO | USp"),
    n: int = typer.Option(..., "--n", help="Torus rank"),
    sigma: Optional[str] = typer.Option(None, "--sigma"),
    tau: Optional[str] = typer.Option(None, "--tau"),
    s: Optional[str] = typer.Option(None, "--s"),
    t: Optional[str] = typer.Option(None, "--t"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """𝓛₀(κ; σ, τ): the λ = 0 eigenvalue, i.e. the Cauchy-type Selberg integral."""
    _setup(config_file, verbose)
    space_value = _space(space)
    sigma_value, tau_value = _sigma_tau(space_value, n, sigma, tau, s, t)

    def body() -> None:
        spec = KernelSpec(space_value, n, sigma_value, tau_value)
        payload = {
            **selberg_value(spec).to_dict(),
            "lambda": format_signature((0,) * n),
            "spec": spec.to_dict(),
            "annotation": "Cauchy-type Selberg integral",
        }
        _finish(CommandResult("ok", payload))

    _guarded(body)


@app.command()
def scan(
    space: str = typer.Option(..., "--space", help="UN | UO | USp"),
    n: int = typer.Option(..., "--n", help="Torus rank"),
    sigma: Optional[str] = typer.Option(None, "--sigma"),
    tau: Optional[str] = typer.Option(None, "--tau"),
    s: Optional[str] = typer.Option(None, "--s"),
    t: Optional[str] = typer.Option(None, "--t"),
    box: Optional[int] = typer.Option(None, "--box", help="Box radius M (default from config)"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write payload JSON and census CSV here"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Sign-constancy scan over signatures with parts in [−M, M]."""
    config = _setup(config_file, verbose)
    space_value = _space(space)
    sigma_value, tau_value = _sigma_tau(space_value, n, sigma, tau, s, t)
    radius = box if box is not None else config.box_radius
    if radius < 1:
        raise typer.BadParameter("Box radius must be positive", param_hint="--box")

    def body() -> None:
        spec = KernelSpec(space_value, n, sigma_value, tau_value)
        census = sign_census(spec, radius, threads=config.threads)
        validation = validate_scan_census(census)
        if not validation["valid"]:
            _finish(CommandResult("error", {"spec": spec.to_dict(), "validation": validation}, validation["errors"]))
            return
        report = report_from_census(spec, census, radius)
        payload = {**report.to_dict(), "spec": spec.to_dict(), "witness_radius": minimal_witness_radius(report)}
        try:
            payload["predicate"] = definite_predicate(space_value, n, sigma_value, tau_value)
        except InapplicableError as e:
            payload["predicate"] = None
            payload["predicate_note"] = str(e)
        if output is not None:
            path = write_payload(payload, config.output_path(output))
            census_path = write_table_csv(census, path.with_suffix(".census.csv"))
            write_manifest({"scan": path, "census": census_path}, config, "scan", path.with_suffix(".manifest.json"))
        _finish(CommandResult("ok", payload))

    _guarded(body)


@app.command()
def region(
    space: str = typer.Option(..., "--space", help="UN | UO | USp"),
    n: int = typer.Option(..., "--n", help="Torus rank"),
    s_range: str = typer.Option(..., "--s-range", help="lo:hi"),
    t_range: str = typer.Option(..., "--t-range", help="lo:hi"),
    step: str = typer.Option(..., "--step", help="Rational grid step, e.g. 1/4"),
    offset: Optional[str] = typer.Option(None, "--offset", help="Grid offset (default step/2)"),
    box: Optional[int] = typer.Option(None, "--box", help="Box radius M"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write CSV here"),
    fmt: OutputFormat = typer.Option(OutputFormat.csv, "--format", help="csv | json"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Predicate vs scan verdicts on an (s, t) grid, as CSV with columns s,t,predicate,scan."""
    config = _setup(config_file, verbose)
    space_value = _space(space)
    step_value = _rational(step, "--step")
    if step_value <= 0:
        raise typer.BadParameter("Step must be positive", param_hint="--step")
    offset_value = _rational(offset, "--offset") if offset is not None else None
    s_bounds, t_bounds = _range(s_range, "--s-range"), _range(t_range, "--t-range")

    def body() -> None:
        grid = region_grid(
            space_value,
            n,
            s_bounds,
            t_bounds,
            step_value,
            offset=offset_value,
            box_radius=box if box is not None else config.box_radius,
            threads=config.threads,
        )
        validation = validate_region_grid(grid)
        status = "ok" if validation["valid"] else "error"
        if output is not None:
            path = write_table_csv(grid, config.output_path(output))
            write_manifest({"region": path}, config, "region", path.with_suffix(".manifest.json"))
        if fmt == OutputFormat.json:
            payload = {"rows": grid.to_dict(orient="records"), "validation": validation}
            _finish(CommandResult(status, payload, validation["errors"]))
            return
        global _last_result
        _last_result = CommandResult(status, {"rows": len(grid)}, validation["errors"])
        typer.echo(grid.to_csv(index=False), nl=False)
        if status != "ok":
            for error in validation["errors"]:
                logger.error(error)
            raise typer.Exit(1)

    _guarded(body)


@app.command()
def verify(
    n: int = typer.Option(..., "--n", help="Torus rank (1, 2 or 3)"),
    kappa: str = typer.Option(..., "--kappa"),
    sigma: str = typer.Option(..., "--sigma"),
    tau: str = typer.Option(..., "--tau"),
    lam: str = typer.Option(..., "--lambda"),
    points: Optional[int] = typer.Option(None, "--N", help="Nodes per dimension"),
    tolerance: float = typer.Option(1e-4, "--tolerance", help="Accepted relative error"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Closed form 𝓛_λ against torus quadrature."""
    config = _setup(config_file, verbose)
    sig = _signature(lam, n)
    kappa_value = _rational(kappa, "--kappa")
    sigma_value, tau_value = _param(sigma, "--sigma"), _param(tau, "--tau")

    def body() -> None:
        quad = QuadratureSpec(
            points_per_dim=points or config.quad_points,
            n=n,
            shifts=config.mc_shifts,
            seed=config.seed,
        )
        closed = L_lambda(sig, kappa_value, sigma_value, tau_value).to_float()
        result = torus_integral_numeric(sig, kappa_value, sigma_value, tau_value, quad, config.quad_tolerance)
        scale = abs(closed) if closed != 0 else 1.0
        rel_err = abs(result.value - closed) / scale
        payload = {
            "closed_form": closed,
            "quadrature": [result.value.real, result.value.imag],
            "rel_err": rel_err,
            "error_estimate": result.error_estimate,
            "points": result.points,
        }
        status = "ok" if rel_err <= tolerance else "error"
        _finish(CommandResult(status, payload, result.warnings))

    _guarded(body)


@app.command("verify-exact")
def verify_exact(
    n: int = typer.Option(..., "--n"),
    kappa: str = typer.Option(..., "--kappa"),
    sigma: str = typer.Option(..., "--sigma"),
    tau: str = typer.Option(..., "--tau"),
    lam: str = typer.Option(..., "--lambda"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Closed form 𝓛_λ/(2π)ⁿ against the exact constant term, bit for bit."""
    _setup(config_file, verbose)
    sig = _signature(lam, n)
    kappa_value = _rational(kappa, "--kappa")
    sigma_value, tau_value = _rational(sigma, "--sigma"), _rational(tau, "--tau")

    def body() -> None:
        closed = L_lambda(sig, kappa_value, sigma_value, tau_value)
        rational = closed.rational_part(n)
        closed_rational = None if rational is None else rational / 2 ** n
        constant_term = torus_integral_exact(sig, kappa_value, sigma_value, tau_value)
        equal = closed_rational is not None and closed_rational == constant_term
        payload = {
            "closed_form_rational": None if closed_rational is None else format_rational(closed_rational),
            "constant_term_rational": format_rational(constant_term),
            "equal": equal,
        }
        _finish(CommandResult("ok" if equal else "error", payload))

    _guarded(body)


@app.command()
def gram(
    n: int = typer.Option(..., "--n"),
    kappa: str = typer.Option(..., "--kappa"),
    lambdas: str = typer.Option(..., "--lambdas", help="Semicolon-separated signatures, e.g. '1,0;2,0'"),
    method: str = typer.Option("exact", "--method", help="exact | numeric"),
    points: Optional[int] = typer.Option(None, "--N"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Gram matrix of Jack polynomials under the torus pairing."""
    config = _setup(config_file, verbose)
    sigs = [_signature(text, n, "--lambdas") for text in lambdas.split(";") if text.strip()]
    kappa_value = _rational(kappa, "--kappa")
    if method not in ("exact", "numeric"):
        raise typer.BadParameter("Method must be exact or numeric", param_hint="--method")

    def body() -> None:
        matrix = gram_matrix(sigs, n, kappa_value, method, points or config.quad_points)
        payload = {
            "lambdas": [format_signature(sig) for sig in sigs],
            "method": method,
            "matrix": [[entry.to_dict() for entry in row] for row in matrix],
        }
        _finish(CommandResult("ok", payload))

    _guarded(body)


@app.command()
def form(
    space: str = typer.Option(..., "--space"),
    n: int = typer.Option(..., "--n"),
    f: str = typer.Option(..., "--f", help='Symmetric polynomial, e.g. "1 + 2*m[1]"'),
    g: str = typer.Option(..., "--g"),
    sigma: Optional[str] = typer.Option(None, "--sigma"),
    tau: Optional[str] = typer.Option(None, "--tau"),
    s: Optional[str] = typer.Option(None, "--s"),
    t: Optional[str] = typer.Option(None, "--t"),
    reduced: bool = typer.Option(False, "--reduced", help="Drop the λ-independent prefactor"),
    direct: bool = typer.Option(False, "--direct", help="Also evaluate the double integral (n = 1)"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Hermitian form ⟨F, G⟩_{σ,τ} through the Jack expansion."""
    config = _setup(config_file, verbose)
    space_value = _space(space)
    sigma_value, tau_value = _sigma_tau(space_value, n, sigma, tau, s, t)

    f_poly, g_poly = _sympoly(f, n, "--f"), _sympoly(g, n, "--g")

    def body() -> None:
        spec = KernelSpec(space_value, n, sigma_value, tau_value)
        F = expand_in_jack(f_poly, spec.kappa)
        G = expand_in_jack(g_poly, spec.kappa)
        evaluate = form_value_reduced if reduced else form_value
        value = evaluate(F, G, spec, config.quad_points)
        payload = {"real": value.real, "imag": value.imag, "spec": spec.to_dict(), "reduced": reduced}
        if direct:
            check = direct_form_quadrature(F, G, spec)
            payload["direct"] = {"real": check.real, "imag": check.imag}
        _finish(CommandResult("ok", payload))

    _guarded(body)


@app.command("l2-check")
def l2_check(
    space: str = typer.Option(..., "--space"),
    n: int = typer.Option(..., "--n"),
    box: int = typer.Option(4, "--box"),
    config_file: Optional[Path] = ConfigOption,
    verbose: bool = VerboseOption,
) -> None:
    """Check that c_λ is λ-independent at s = t = 0."""
    _setup(config_file, verbose)
    space_value = _space(space)

    def body() -> None:
        report = l2_degeneration_report(space_value, n, box)
        _finish(CommandResult("ok" if report.passed else "error", report.to_dict()))

    _guarded(body)


def run(argv: List[str]) -> CommandResult:
    """Run the CLI on argv in-process and return what the command emitted.

    Usage errors come back as status "usage" with exit code 2.
    """
    global _last_result
    _last_result = None
    command = typer.main.get_command(app)
    try:
        code = command.main(args=argv, prog_name="sahi-kernels", standalone_mode=False)
    except _UsageErrors as e:
        e.show()
        return CommandResult("usage", {"message": e.format_message()}, exit_code=2)
    except _ExitErrors as e:
        code = e.exit_code
    if _last_result is None:
        return CommandResult("ok" if not code else "error", {}, exit_code=code or 0)
    return _last_result


if __name__ == "__main__":
    app()
