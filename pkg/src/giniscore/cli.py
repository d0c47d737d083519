"""Command-line front end: CSV scoring, model comparison, curve export, simulation.

Subcommands
-----------
score     one prediction column -> Gini report (JSON or CSV)
compare   two or more prediction columns -> ranked report
curves    export Lorenz / best / worst (/ mid) corner CSVs and optional SVG
simulate  write a seeded synthetic CSV from one of the built-in generators

Exit codes: 0 success, 1 internal error, 2 input or validation failure,
3 degenerate responses (all equal, score undefined).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .core import Sample, validate
from .curves import Curve, cap_curve, cap_curve_mid, lorenz_curve
from .datagen import (
    sample_discrete,
    sample_frequency_portfolio,
    sample_lognormal,
    sample_two_models,
)
from .errors import DegenerateResponsesError, GiniScoreError, InputFormatError
from .gini import compare
from .ordering import TieDirection

SCHEMA_ID = "giniscore-report/1"


@dataclass(frozen=True)
class RunConfig:
    """Validated scoring configuration assembled from the command line."""

    input: str
    response: str
    predictions: tuple[str, ...]
    weight: str | None
    output_format: str
    allow_negative: bool
    percent: bool

    def __post_init__(self) -> None:
        if not self.predictions:
            raise InputFormatError("at least one --prediction column is required")
        columns = [self.response, *self.predictions]
        if self.weight is not None:
            columns.append(self.weight)
        if len(set(columns)) != len(columns):
            raise InputFormatError(f"column names must be distinct, got {columns}")


# --- CSV ingestion ---------------------------------------------------------


def _parse_cell(row_num: int, column: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputFormatError(
            f"row {row_num}: cannot parse {column}={text!r} as a number"
        ) from None
    if not math.isfinite(value):
        raise InputFormatError(f"row {row_num}: {column}={text!r} is not finite")
    return value


def read_columns(config: RunConfig) -> tuple[np.ndarray, dict[str, np.ndarray], np.ndarray | None]:
    """Read the configured columns, with row-numbered parse errors.

    Empty weight cells default to 1; empty response or prediction cells are
    errors.  Row numbers count physical lines, the header being row 1.
    """
    responses: list[float] = []
    predictions: dict[str, list[float]] = {name: [] for name in config.predictions}
    weights: list[float] = []
    with open(config.input, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames
        if header is None:
            raise InputFormatError(f"{config.input}: no header row")
        wanted = [config.response, *config.predictions]
        if config.weight is not None:
            wanted.append(config.weight)
        missing = [c for c in wanted if c not in header]
        if missing:
            raise InputFormatError(f"{config.input}: missing columns {missing}")
        for row_num, row in enumerate(reader, start=2):
            cell = (row.get(config.response) or "").strip()
            if not cell:
                raise InputFormatError(f"row {row_num}: empty {config.response} cell")
            value = _parse_cell(row_num, config.response, cell)
            if value < 0.0 and not config.allow_negative:
                raise InputFormatError(
                    f"row {row_num}: negative response {value} "
                    "(pass --allow-negative to accept)"
                )
            responses.append(value)
            for name in config.predictions:
                cell = (row.get(name) or "").strip()
                if not cell:
                    raise InputFormatError(f"row {row_num}: empty {name} cell")
                predictions[name].append(_parse_cell(row_num, name, cell))
            if config.weight is not None:
                cell = (row.get(config.weight) or "").strip()
                w = 1.0 if not cell else _parse_cell(row_num, config.weight, cell)
                if w <= 0.0:
                    raise InputFormatError(f"row {row_num}: weight {w} is not > 0")
                weights.append(w)
    return (
        np.asarray(responses),
        {name: np.asarray(vals) for name, vals in predictions.items()},
        np.asarray(weights) if config.weight is not None else None,
    )


# --- canonical JSON --------------------------------------------------------


def dumps_canonical(doc) -> str:
    """Serialize a report deterministically: 17 significant digits, no spaces.

    Re-serializing the parsed output reproduces the bytes exactly.
    """
    pieces: list[str] = []

    def emit(value) -> None:
        if value is None or isinstance(value, bool):
            pieces.append(json.dumps(value))
        elif isinstance(value, float):
            pieces.append(format(value, ".17g"))
        elif isinstance(value, int):
            pieces.append(repr(value))
        elif isinstance(value, str):
            pieces.append(json.dumps(value, ensure_ascii=False))
        elif isinstance(value, dict):
            pieces.append("{")
            for i, (key, item) in enumerate(value.items()):
                if i:
                    pieces.append(",")
                pieces.append(json.dumps(str(key), ensure_ascii=False))
                pieces.append(":")
                emit(item)
            pieces.append("}")
        elif isinstance(value, (list, tuple)):
            pieces.append("[")
            for i, item in enumerate(value):
                if i:
                    pieces.append(",")
                emit(item)
            pieces.append("]")
        else:
            raise TypeError(f"cannot serialize {type(value)!r}")

    emit(doc)
    return "".join(pieces)


def _percent(gini: float) -> str:
    return f"{100.0 * gini:.1f}%"


def build_report(config: RunConfig, responses, predictions, weights) -> dict:
    """Score every prediction column and assemble the report document."""
    comparison = compare(
        [(name, predictions[name]) for name in config.predictions],
        responses,
        weights,
        allow_negative=config.allow_negative,
    )
    models = []
    for name, rep in comparison.entries:
        sample = Sample.from_arrays(
            responses, predictions[name], weights, allow_negative=config.allow_negative
        )
        tie = validate(sample)
        models.append(
            {
                "name": name,
                "gini": rep.gini,
                "gini_percent": _percent(rep.gini),
                "lorenz_area": rep.areas.lorenz,
                "cap_area_best": rep.areas.cap_best,
                "cap_area_worst": rep.areas.cap_worst,
                "cap_area_mid": rep.areas.cap_mid,
                "tie_group_count": rep.tie_group_count,
                "max_tie_size": tie.max_tie_size,
                "weighted": rep.weighted,
                "flags": list(tie.flags),
            }
        )
    return {
        "schema": SCHEMA_ID,
        "tool": {"name": "giniscore", "version": __version__},
        "config": {
            "input": config.input,
            "response": config.response,
            "predictions": list(config.predictions),
            "weight": config.weight,
            "allow_negative": config.allow_negative,
            "percent": config.percent,
        },
        "n": int(np.asarray(responses).size),
        "models": models,
    }


def _write_report(report: dict, config: RunConfig, output: str | None) -> None:
    if config.output_format == "json":
        text = dumps_canonical(report) + "\n"
    else:
        fields = [
            "name",
            "gini",
            "gini_percent",
            "lorenz_area",
            "cap_area_best",
            "cap_area_worst",
            "cap_area_mid",
            "tie_group_count",
            "max_tie_size",
            "weighted",
        ]
        lines = [",".join(fields)]
        for model in report["models"]:
            row = []
            for field in fields:
                value = model[field]
                if isinstance(value, float):
                    row.append(format(value, ".17g"))
                else:
                    row.append(str(value))
            lines.append(",".join(row))
        text = "\n".join(lines) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --- curve export ----------------------------------------------------------


def _write_curve_csv(path: Path, curve: Curve) -> None:
    lines = ["alpha,value"]
    lines += [f"{a!r},{v!r}" for a, v in zip(curve.alphas.tolist(), curve.values.tolist())]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


_SVG_SIZE = 800
_SVG_MARGIN = 70


def _svg_points(curve: Curve) -> str:
    span = _SVG_SIZE - 2 * _SVG_MARGIN
    pts = []
    for a, v in zip(curve.alphas.tolist(), curve.values.tolist()):
        x = _SVG_MARGIN + a * span
        y = _SVG_SIZE - _SVG_MARGIN - v * span
        pts.append(f"{x:.3f},{y:.3f}")
    return " ".join(pts)


def render_svg(curves: dict[str, Curve], areas: dict[str, float]) -> str:
    """Static overlay picture: Lorenz solid, best/worst/mid profiles, dotted diagonal."""
    colors = {
        "lorenz": "#1f77b4",
        "cap_best": "#d62728",
        "cap_worst": "#ff7f0e",
        "cap_mid": "#2ca02c",
    }
    m, size = _SVG_MARGIN, _SVG_SIZE
    span = size - 2 * m
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<rect x="{m}" y="{m}" width="{span}" height="{span}" fill="none" stroke="black" stroke-width="1"/>',
        f'<line x1="{m}" y1="{size - m}" x2="{size - m}" y2="{m}" stroke="black" '
        'stroke-width="1" stroke-dasharray="6,6"/>',
    ]
    for name, curve in curves.items():
        parts.append(
            f'<polyline fill="none" stroke="{colors.get(name, "black")}" stroke-width="2" '
            f'points="{_svg_points(curve)}"/>'
        )
    legend_y = m + 24
    for name in curves:
        label = f"{name} (area {areas[name]:.6f})" if name in areas else name
        parts.append(
            f'<rect x="{m + 16}" y="{legend_y - 11}" width="14" height="14" '
            f'fill="{colors.get(name, "black")}"/>'
        )
        parts.append(
            f'<text x="{m + 38}" y="{legend_y}" font-family="sans-serif" font-size="16">{label}</text>'
        )
        legend_y += 22
    parts.append(
        f'<text x="{m}" y="{m - 16}" font-family="sans-serif" font-size="18">'
        "Lorenz curve and cumulative accuracy profiles</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# --- subcommands -----------------------------------------------------------


def _config_from_args(args, *, min_predictions: int = 1, max_predictions: int | None = None) -> RunConfig:
    predictions = tuple(args.prediction)
    if len(predictions) < min_predictions:
        raise InputFormatError(
            f"need at least {min_predictions} --prediction column(s), got {len(predictions)}"
        )
    if max_predictions is not None and len(predictions) > max_predictions:
        raise InputFormatError(
            f"need at most {max_predictions} --prediction column(s), got {len(predictions)}"
        )
    return RunConfig(
        input=args.input,
        response=args.response,
        predictions=predictions,
        weight=args.weight,
        output_format=args.format,
        allow_negative=args.allow_negative,
        percent=args.percent,
    )


def cmd_score(args) -> int:
    config = _config_from_args(args, min_predictions=1, max_predictions=1)
    responses, predictions, weights = read_columns(config)
    report = build_report(config, responses, predictions, weights)
    _write_report(report, config, args.output)
    return 0


def cmd_compare(args) -> int:
    config = _config_from_args(args, min_predictions=2)
    responses, predictions, weights = read_columns(config)
    report = build_report(config, responses, predictions, weights)
    _write_report(report, config, args.output)
    return 0


def cmd_curves(args) -> int:
    config = _config_from_args(args, min_predictions=1, max_predictions=1)
    responses, predictions, weights = read_columns(config)
    sample = Sample.from_arrays(
        responses,
        predictions[config.predictions[0]],
        weights,
        allow_negative=config.allow_negative,
    )
    curves = {
        "lorenz": lorenz_curve(sample),
        "cap_best": cap_curve(sample, TieDirection.BEST),
        "cap_worst": cap_curve(sample, TieDirection.WORST),
    }
    if bool(np.all(sample.weights == sample.weights[0])):
        curves["cap_mid"] = cap_curve_mid(sample)
    out_dir = Path(args.curves_out)
    out_dir.mkdir(parents=True, exist_ok=True)
    areas = {name: curve.area_above_diagonal() for name, curve in curves.items()}
    for name, curve in curves.items():
        _write_curve_csv(out_dir / f"{name}.csv", curve)
    if args.svg:
        Path(args.svg).write_text(render_svg(curves, areas), encoding="utf-8")
    return 0


def cmd_simulate(args) -> int:
    seed = args.seed
    n = args.n
    if args.generator == "lognormal":
        sample = sample_lognormal(n, mu=args.mu, sigma=args.sigma, seed=seed)
        columns = {"response": sample.responses, "prediction": sample.predictions}
        weights = sample.weights
    elif args.generator == "discrete":
        sample = sample_discrete(n, seed=seed, exact_proportions=args.exact_proportions)
        columns = {"response": sample.responses, "prediction": sample.predictions}
        weights = sample.weights
    elif args.generator == "two-models":
        first, second = sample_two_models(n, seed=seed)
        columns = {
            "response": first.responses,
            "model1": first.predictions,
            "model2": second.predictions,
        }
        weights = first.weights
    elif args.generator == "frequency":
        fine, coarse = sample_frequency_portfolio(n, seed=seed)
        columns = {
            "response": fine.responses,
            "good": fine.predictions,
            "coarse": coarse.predictions,
        }
        weights = fine.weights
    else:  # pragma: no cover - argparse restricts choices
        raise InputFormatError(f"unknown generator {args.generator!r}")
    names = [*columns.keys(), "weight"]
    arrays = [*columns.values(), weights]
    lines = [",".join(names)]
    for i in range(n):
        lines.append(",".join(repr(float(arr[i])) for arr in arrays))
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


# --- entry point -----------------------------------------------------------


def _add_io_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="input CSV with a header row")
    parser.add_argument("--response", required=True, help="response column name")
    parser.add_argument(
        "--prediction",
        action="append",
        default=[],
        metavar="COLUMN",
        help="prediction column name (repeatable)",
    )
    parser.add_argument("--weight", default=None, help="case weight column name")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output", default=None, help="report file (default: stdout)")
    parser.add_argument(
        "--allow-negative", action="store_true", help="accept negative responses"
    )
    parser.add_argument(
        "--percent", action="store_true", help="echo percent formatting preference"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giniscore",
        description="Rank-based model validation scores under ties and case weights.",
    )
    parser.add_argument("--version", action="version", version=f"giniscore {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score one prediction column")
    _add_io_arguments(p_score)
    p_score.set_defaults(func=cmd_score)

    p_compare = sub.add_parser("compare", help="rank two or more prediction columns")
    _add_io_arguments(p_compare)
    p_compare.set_defaults(func=cmd_compare)

    p_curves = sub.add_parser("curves", help="export curve corner sets")
    _add_io_arguments(p_curves)
    p_curves.add_argument("--curves-out", required=True, help="directory for corner CSVs")
    p_curves.add_argument("--svg", default=None, help="write an overlay SVG here")
    p_curves.set_defaults(func=cmd_curves)

    p_sim = sub.add_parser("simulate", help="write a synthetic CSV")
    p_sim.add_argument(
        "generator", choices=("lognormal", "discrete", "two-models", "frequency")
    )
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out", required=True, help="output CSV path")
    p_sim.add_argument("--mu", type=float, default=0.0, help="lognormal location")
    p_sim.add_argument("--sigma", type=float, default=1.0, help="lognormal scale")
    p_sim.add_argument(
        "--exact-proportions",
        action="store_true",
        help="discrete generator: deterministic atom counts instead of draws",
    )
    p_sim.set_defaults(func=cmd_simulate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateResponsesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GiniScoreError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
