"""Main CLI entry point for the Minkowski angle toolkit."""

import csv
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

import click
from rich.console import Console
from rich.panel import Panel

from .angles import ANGLE_FUNCTIONS, AngleFn, ang_euclid_ref, angle, wilson_scan
from .bisectors import busemann_bisector, daf_bisector, glogovskii_bisector, measure_bisector
from .config import (
    CATALOG_DIR, DEFAULT_SEED, MIN_DEKSTER_QUAD, MIN_QUAD, OUTPUT_DIR, PLOT_LAYERS,
    QUIET, SIGNIFICANT_DIGITS, WITNESS_GRID, validate_config,
)
from .errors import DetectorDisagreement, MinkowskiError
from .functionals import g_functional, lambda_functional, q_functional, quasi_inner_residual, sine, star_pair
from .laws import (
    Sampler, audit_axioms, audit_congruence, characterization_suite, daf_equivalence_probe,
    display_characterization, display_reports, dyadic_probe, measure_probes,
)
from .measures import (
    antinorm_proportionality, build_measure, density_table, dekster_tau, equiframed_ratio, triangle_angle_sum,
)
from .norm_core import NormedPlane, Vec2, load_plane
from .orthogonality import ORTHOGONALITY_TYPES, orthogonality
from .plotting import plot as plot_svg

console = Console(stderr=True, quiet=QUIET)

# CLI names of the measure kinds
MEASURE_ALIASES = {
    "arclen": "arc_length",
    "area": "sector_area",
    "antinorm": "antinorm_arc",
    "dekster": "dekster_normalized",
}
FUNCTIONALS = ["sine", "q", "tstar", "lambda", "g", "quasi"]
CLI_ANGLES = [fn.value for fn in ANGLE_FUNCTIONS if fn is not AngleFn.EUCLID_REF]


class VectorType(click.ParamType):
    """A plane vector written as ``a,b``."""

    name = "vector"

    def convert(self, value, param, ctx):
        if isinstance(value, Vec2):
            return value
        try:
            return Vec2.parse(value)
        except ValueError as e:
            self.fail(f"{value!r} is not a vector a,b ({e})", param, ctx)


VECTOR = VectorType()


def _rounded(value):
    """Round floats to SIGNIFICANT_DIGITS; NaN and infinities become null."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(format(value, f".{SIGNIFICANT_DIGITS}g"))
    if isinstance(value, dict):
        return {key: _rounded(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rounded(item) for item in value]
    return _rounded(float(value))


def emit(data):
    """Write one JSON document to stdout."""
    click.echo(json.dumps(_rounded(data)))


def _vec(v: Vec2):
    return list(v.as_tuple())


norm_option = click.option(
    "--norm", "norm_path", required=True, type=click.Path(exists=True, dir_okay=False),
    help="JSON norm specification",
)
x_option = click.option("--x", "x", required=True, type=VECTOR, help="First vector a,b")
y_option = click.option("--y", "y", required=True, type=VECTOR, help="Second vector c,d")


@click.group()
def cli():
    """
    Angles, orthogonality, angle measures and bisectors in normed planes.

    Example:
        python -m src.main angle --norm catalog/hexagon.json --fn p --x 1,0 --y 0.5,0.866025403784
    """


@cli.command()
@norm_option
@click.option("--type", "kind", required=True, type=click.Choice(ORTHOGONALITY_TYPES), help="Orthogonality type")
@x_option
@y_option
@click.option("--tol", type=click.FloatRange(min=0.0, min_open=True), default=None, help="Residual tolerance")
def ortho(norm_path: str, kind: str, x: Vec2, y: Vec2, tol: Optional[float]):
    """Test x orthogonal to y."""
    plane = load_plane(norm_path)
    result = orthogonality(plane, kind, x, y, tol)
    emit({"type": kind, "residual": result.residual, "orthogonal": result.orthogonal, "tol": result.tol})


@cli.command()
@norm_option
@click.option("--which", required=True, type=click.Choice(FUNCTIONALS), help="Functional to evaluate")
@x_option
@y_option
@click.option("--samples", type=click.IntRange(min=4), default=None, help="Sample count for q")
def functional(norm_path: str, which: str, x: Vec2, y: Vec2, samples: Optional[int]):
    """Evaluate a scalar functional at (x, y)."""
    plane = load_plane(norm_path)
    if which == "tstar":
        pair = star_pair(plane, x, y)
        emit({"which": which, "t_star": pair.t_star, "t_star_star": pair.t_star_star, "min_value": pair.min_value})
        return
    value = {
        "sine": lambda: sine(plane, x, y),
        "q": lambda: q_functional(plane, x, y, samples),
        "lambda": lambda: lambda_functional(plane, x, y),
        "g": lambda: g_functional(plane, x, y),
        "quasi": lambda: quasi_inner_residual(plane, x, y),
    }[which]()
    emit({"which": which, "value": value})


def _parse_ratios(text: Optional[str]) -> Optional[Tuple[float, ...]]:
    if text is None:
        return None
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a comma-separated list of ratios", param_hint="--ratio-grid")


@cli.command("angle")
@norm_option
@click.option("--fn", required=True, type=click.Choice(CLI_ANGLES), help="Angle function")
@x_option
@y_option
@click.option("--ratio-grid", default=None, help="Ratios for the Wilson scan, e.g. 0.5,1,2")
def angle_command(norm_path: str, fn: str, x: Vec2, y: Vec2, ratio_grid: Optional[str]):
    """Evaluate an angle function at (x, y)."""
    plane = load_plane(norm_path)
    if fn == AngleFn.WILSON.value:
        ratios = _parse_ratios(ratio_grid)
        scan = wilson_scan(plane, x, y) if ratios is None else wilson_scan(plane, x, y, ratios)
        radians = scan.value_at_equal_ratio
        emit({"fn": fn, "radians": radians, "degrees": math.degrees(radians),
              "spread": scan.spread, "values": list(scan.values)})
        return
    radians = angle(plane, fn, x, y)
    emit({"fn": fn, "radians": radians, "degrees": math.degrees(radians)})


@cli.command()
@norm_option
@click.option("--kind", required=True, type=click.Choice(list(MEASURE_ALIASES)), help="Angle measure")
@click.option("--n-quad", type=click.IntRange(min=MIN_QUAD), default=MIN_DEKSTER_QUAD, help="Quadrature subdivision limit")
@click.option("--tau", is_flag=True, help="Report the Dekster constant tau")
@click.option("--triangle", type=VECTOR, nargs=3, default=None, help="Vertices a b c for the angle sum")
@click.option("--dump-density", type=click.IntRange(min=1), default=None, help="Write n (theta, density) rows as CSV")
def measure(norm_path: str, kind: str, n_quad: int, tau: bool, triangle, dump_density: Optional[int]):
    """Build an angle measure and report its properties."""
    plane = load_plane(norm_path)
    if tau:
        emit({"tau": dekster_tau(plane, max(n_quad, MIN_DEKSTER_QUAD))})
        return

    built = build_measure(plane, MEASURE_ALIASES[kind], n_quad)
    if dump_density is not None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["theta", "density"])
        for theta, value in density_table(built, dump_density):
            writer.writerow([format(theta, f".{SIGNIFICANT_DIGITS}g"), format(value, f".{SIGNIFICANT_DIGITS}g")])
        return
    if triangle:
        emit({"kind": kind, "angle_sum": triangle_angle_sum(built, *triangle)})
        return

    equiframed = equiframed_ratio(plane)
    antinorm = antinorm_proportionality(plane)
    emit({
        "kind": kind,
        "total": built.total,
        "equiframed_ratio": {"min_ratio": equiframed.min_ratio, "max_ratio": equiframed.max_ratio},
        "antinorm_ratio": {"min_ratio": antinorm.min_ratio, "max_ratio": antinorm.max_ratio},
    })


def _bisector(plane: NormedPlane, kind: str, x: Vec2, y: Vec2):
    if kind == "busemann":
        return busemann_bisector(plane, x, y)
    if kind == "glogovskii":
        return glogovskii_bisector(plane, x, y)
    if kind == "daf":
        return daf_bisector(plane, x, y)
    _, _, alias = kind.partition(":")
    alias = alias or "arclen"
    if not kind.startswith("measure") or alias not in MEASURE_ALIASES:
        raise click.BadParameter(
            f"{kind!r}; expected busemann, glogovskii, daf or measure:<{'|'.join(MEASURE_ALIASES)}>",
            param_hint="--kind",
        )
    return measure_bisector(build_measure(plane, MEASURE_ALIASES[alias]), x, y)


@cli.command()
@norm_option
@click.option("--kind", default="busemann", help="busemann, glogovskii, daf or measure:<kind>")
@x_option
@y_option
@click.option("--compare", is_flag=True, help="Emit all four bisectors and their pairwise gaps")
def bisect(norm_path: str, kind: str, x: Vec2, y: Vec2, compare: bool):
    """Construct the angular bisector of the angle between x and y."""
    plane = load_plane(norm_path)
    if not compare:
        ray = _bisector(plane, kind, x, y)
        emit({"kind": kind, "direction": _vec(ray.direction), "ambiguous": ray.ambiguous})
        return

    names = ["busemann", "glogovskii", "measure:arclen", "daf"]
    rays = {name: _bisector(plane, name, x, y) for name in names}
    gaps = {
        f"{a}/{b}": ang_euclid_ref(rays[a].direction, rays[b].direction)
        for i, a in enumerate(names) for b in names[i + 1:]
    }
    emit({
        "bisectors": {name: _vec(ray.direction) for name, ray in rays.items()},
        "gaps": gaps,
    })


@cli.command()
@norm_option
@click.option("--fn", default="p", type=click.Choice(CLI_ANGLES), help="Angle function to audit")
@click.option("--axioms", is_flag=True, help="Audit axioms 1-8")
@click.option("--congruence", is_flag=True, help="Audit congruence properties 9 and 10")
@click.option("--characterize", is_flag=True, help="Run the characterization detectors")
@click.option("--daf", is_flag=True, help="Probe the D-A-F angle equivalences")
@click.option("--dyadic", is_flag=True, help="Probe ang = pi/2 and pi/4 against the Euclidean angle")
@click.option("--measure", "measure_kind", type=click.Choice(list(MEASURE_ALIASES)), default=None,
              help="Probe I-, T- and B-measure properties of this measure")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Seed of the random part of the sampler")
@click.option("--grid", type=click.IntRange(min=4), default=WITNESS_GRID, help="Directions per axis")
def laws(norm_path: str, fn: str, axioms: bool, congruence: bool, characterize: bool, daf: bool,
         dyadic: bool, measure_kind: Optional[str], seed: int, grid: int):
    """Audit laws and characterizations on a plane."""
    plane = load_plane(norm_path)
    sampler = Sampler(grid=grid, seed=seed)
    if not any((axioms, congruence, characterize, daf, dyadic, measure_kind)):
        axioms = True

    report = {"plane": plane.name, "fn": fn, "seed": seed}
    audits = []
    if axioms:
        audits.extend(audit_axioms(plane, fn, sampler))
    if congruence:
        audits.extend(audit_congruence(plane, fn, sampler))
    if daf:
        audits.extend(daf_equivalence_probe(plane, sampler))
    if dyadic:
        audits.append(dyadic_probe(plane, fn, sampler))
    if measure_kind:
        audits.extend(measure_probes(plane, build_measure(plane, MEASURE_ALIASES[measure_kind]), sampler))
    if audits:
        display_reports(audits, title=f"Laws on {plane.name}")
        report["reports"] = [r.to_dict() for r in audits]
    if characterize:
        result = characterization_suite(plane, sampler)
        display_characterization(result)
        report.update({
            "strictly_convex": result.strictly_convex,
            "radon": result.radon,
            "euclidean": result.euclidean,
            "detectors": result.to_dict()["detectors"],
        })
    emit(report)


@cli.command()
@norm_option
@click.option("--layers", default="unit_circle,antinorm_circle", help=f"Comma-separated subset of {PLOT_LAYERS}")
@click.option("--x", "x", type=VECTOR, default=None, help="First leg for the bisectors layer")
@click.option("--y", "y", type=VECTOR, default=None, help="Second leg for the bisectors layer")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None, help="SVG output path")
def plot(norm_path: str, layers: str, x: Optional[Vec2], y: Optional[Vec2], out_path: Optional[str]):
    """Draw the plane as a deterministic SVG figure."""
    plane = load_plane(norm_path)
    selected = [layer.strip() for layer in layers.split(",") if layer.strip()]
    path = Path(out_path) if out_path else OUTPUT_DIR / f"{plane.name}.svg"
    written = plot_svg(plane, selected, path, x, y)
    emit({"path": str(written), "layers": selected})


@cli.command()
@click.option("--dir", "catalog_dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Directory of norm fixtures")
@click.option("--seed", type=int, default=DEFAULT_SEED, help="Seed of the random part of the sampler")
@click.option("--grid", type=click.IntRange(min=4), default=WITNESS_GRID, help="Directions per axis")
def catalog(catalog_dir: Optional[str], seed: int, grid: int):
    """Characterize every plane in the catalog."""
    directory = Path(catalog_dir) if catalog_dir else CATALOG_DIR
    sampler = Sampler(grid=grid, seed=seed)
    verdicts = {}
    for path in sorted(directory.glob("*.json")):
        result = characterization_suite(load_plane(path), sampler)
        verdicts[path.stem] = {
            "strictly_convex": result.strictly_convex,
            "radon": result.radon,
            "euclidean": result.euclidean,
        }
    print_summary(verdicts)
    emit(verdicts)


def print_summary(verdicts: dict):
    """Print the catalog verdicts in a panel on stderr."""
    lines = []
    for name, v in verdicts.items():
        flags = [label for label, key in (("strictly convex", "strictly_convex"), ("Radon", "radon"),
                                          ("Euclidean", "euclidean")) if v[key]]
        lines.append(f"[cyan]{name}[/]: {', '.join(flags) or 'none'}")
    console.print(Panel.fit("\n".join(lines) or "no fixtures found", title="📐 Catalog", style="bold green"))


def run(argv: Sequence[str]) -> int:
    """Run the CLI on argv and return the process exit code."""
    try:
        validate_config()
    except ValueError as e:
        console.print(f"[bold red]❌ Configuration Error:[/]\n{e}")
        return 1

    try:
        result = cli.main(args=list(argv), prog_name="minkowski", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except DetectorDisagreement as e:
        console.print(f"[bold red]❌ Detector disagreement:[/] {e}")
        return 2
    except (MinkowskiError, ValueError, OSError) as e:
        console.print(f"[bold red]❌ Error:[/] {e}")
        return 1
    return result if isinstance(result, int) else 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
