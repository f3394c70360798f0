"""Command-line front end.

Evaluates any operation on demand, exports Gram matrices and spectra,
and drives the verification suites.  All output is fixed-precision (15
significant digits) and deterministic for fixed flags and config, so
runs can be diffed byte for byte.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3
numeric-domain error (a violated precondition, named in the message).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .cauchy_transform import (
    CauchyGridOptions,
    PsiFunction,
    cauchy_hermite_closed,
    cauchy_transform_numeric,
)
from .gaussian_quadrature import build_polar_grid
from .ito_hermite import (
    HermiteIndex,
    hermite_eval,
    hermite_eval_extended,
    hermite_recurrence_eval,
)
from .poly_bergman import project_numeric
from .range_analysis import (
    VARIANT_R,
    VARIANT_R_TILDE,
    RangeBasisSpec,
    psi_gram,
    r_range_inclusions,
    range_basis_indices,
    truncated_operator_svd,
)
from .verification import (
    SUITE_NAMES,
    VerifyConfig,
    run_suite,
    write_report,
)

__all__ = ["format_complex", "format_real", "main"]


def format_real(value: float) -> str:
    """Fixed 15-significant-digit decimal; negative zero normalized."""
    return np.format_float_positional(
        float(value) + 0.0, precision=15, unique=False, fractional=False, trim="k"
    )


def format_complex(value: complex) -> str:
    """a+bi with both parts at 15 significant digits; real stays bare."""
    value = complex(value)
    re, im = value.real + 0.0, value.imag + 0.0
    if im == 0.0:
        return format_real(re)
    sign = "-" if im < 0 else "+"
    return f"{format_real(re)}{sign}{format_real(abs(im))}i"


def _parse_complex(text: str) -> complex:
    """Command-line complex literal RE,IM (the imaginary part optional)."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")


def _json_complex(value: complex) -> float | list[float]:
    value = complex(value)
    if value.imag == 0.0:
        return value.real + 0.0
    return [value.real + 0.0, value.imag + 0.0]


def _load_config(args: argparse.Namespace) -> VerifyConfig:
    """Merge the optional JSON config file with flag overrides."""
    data: dict = {}
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"config file {args.config} must hold a JSON object")
        known = {"nr", "ntheta", "radius_pad", "kernel_truncation", "tolerances"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(
                f"config file {args.config} has unknown keys {sorted(unknown)}"
            )
    nr = getattr(args, "nr", None)
    ntheta = getattr(args, "ntheta", None)
    tolerance = getattr(args, "tolerance", None)
    return VerifyConfig(
        nr=nr if nr is not None else data.get("nr"),
        ntheta=ntheta if ntheta is not None else data.get("ntheta"),
        radius_pad=float(data.get("radius_pad", 12.0)),
        kernel_truncation=int(data.get("kernel_truncation", 60)),
        tolerance=tolerance if tolerance is not None else data.get("tolerances"),
    )


def _emit(text: str, args: argparse.Namespace) -> None:
    """Print, or write to --out when given."""
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_hermite(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    if args.m == -1:
        value = hermite_eval_extended(args.n, args.z)
    elif args.recurrence:
        value = hermite_recurrence_eval(HermiteIndex(args.m, args.n), args.z)
    else:
        value = hermite_eval(HermiteIndex(args.m, args.n), args.z)
    _emit(format_complex(value), args)
    return 0


def _cmd_cauchy(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    idx = HermiteIndex(args.m, args.n)
    closed = cauchy_hermite_closed(idx, args.z)
    if not args.numeric:
        _emit(format_complex(closed), args)
        return 0
    numeric = cauchy_transform_numeric(
        lambda pts: hermite_eval(idx, pts), args.z, cfg.cauchy_opts()
    )
    lines = [
        f"closed={format_complex(closed)}",
        f"numeric={format_complex(numeric)}",
        f"difference={format_real(abs(closed - numeric))}",
    ]
    _emit("\n".join(lines), args)
    return 0


def _cmd_project(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    kind, m, k = args.source[0], int(args.source[1]), int(args.source[2])
    if kind == "hermite":
        idx = HermiteIndex(m, k)
        source = lambda pts: hermite_eval(idx, pts)
    elif kind == "psi":
        source = PsiFunction(HermiteIndex(m, k))
    else:
        raise ValueError(f"project source must be 'hermite' or 'psi', got {kind!r}")
    grid = cfg.polar_grid(1.0)
    seq = project_numeric(source, args.level, args.jmax, grid=grid)
    table = {
        "level": seq.n,
        "source": [kind, m, k],
        "coefficients": [_json_complex(c) for c in seq.coeffs],
    }
    _emit(json.dumps(table, indent=2), args)
    return 0


def _cmd_gram(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    indices = [
        HermiteIndex(m, n)
        for m in range(args.max_index + 1)
        for n in range(args.max_index + 1)
    ]
    report = psi_gram(indices, grid=cfg.polar_grid(1.0))
    labels = [f"({i.m},{i.n})" for i in indices]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["psi"] + labels)
        for r, label in enumerate(labels):
            writer.writerow(
                [label] + [format_complex(report.values[r, s]) for s in range(len(labels))]
            )
        _emit(buf.getvalue(), args)
    else:
        payload = {
            "indices": [[i.m, i.n] for i in indices],
            "max_violation": report.max_violation,
            "tolerance": report.tolerance,
            "pass": report.passed,
            "radial_check_max_rel": report.radial_check_max_rel,
            "values": [
                [_json_complex(report.values[r, s]) for s in range(len(labels))]
                for r in range(len(labels))
            ],
        }
        _emit(json.dumps(payload, indent=2), args)
    return 0 if report.passed else 1


def _cmd_ranges(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    variant = VARIANT_R if args.variant == "r" else VARIANT_R_TILDE
    spec = RangeBasisSpec(variant, args.ell, args.level)
    indices = range_basis_indices(spec, count=args.count)
    _emit(" ".join(f"({i.m},{i.n})" for i in indices), args)
    if args.inclusions:
        for ell, forward, backward in r_range_inclusions(args.level, args.ell + 1):
            print(
                f"ell={ell}: subset_of_next={'true' if forward else 'false'} "
                f"contains_next={'true' if backward else 'false'}"
            )
    return 0


def _cmd_svd(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    values = truncated_operator_svd(args.degree)
    _emit("\n".join(format_real(s) for s in values), args)
    return 0


def _cmd_verify(args: argparse.Namespace, cfg: VerifyConfig) -> int:
    records = run_suite(args.suite, cfg)
    if args.out:
        csv_path = write_report(records, args.out)
        print(f"report: {args.out}")
        print(f"summary: {csv_path}")
    counts: dict[str, list[int]] = {}
    for record in records:
        family = record.test_id.split("-", 1)[0]
        counts.setdefault(family, [0, 0])
        counts[family][record.passed] += 1
    failures = [r for r in records if not r.passed]
    passed = len(records) - len(failures)
    for record in failures:
        print(
            f"FAIL {record.test_id}: lhs={format_complex(record.lhs)} "
            f"rhs={format_complex(record.rhs)} abs_err={record.abs_err!r} "
            f"tolerance={record.tolerance!r}"
        )
    print(f"{args.suite}: {passed} passed, {len(failures)} failed, {len(records)} total")
    return 0 if not failures else 1


_DISPATCH = {
    "hermite": _cmd_hermite,
    "cauchy": _cmd_cauchy,
    "project": _cmd_project,
    "gram": _cmd_gram,
    "ranges": _cmd_ranges,
    "svd": _cmd_svd,
    "verify": _cmd_verify,
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help="flat JSON settings file")
    sub.add_argument("--nr", type=int, help="radial node count override")
    sub.add_argument("--ntheta", type=int, help="angular node count override")
    sub.add_argument("--out", help="write output to this path instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycauchy",
        description="Gaussian-weighted planar Cauchy transform toolkit",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("hermite", help="evaluate one basis polynomial")
    p.add_argument("--m", type=int, required=True, help="holomorphic index (>= -1)")
    p.add_argument("--n", type=int, required=True, help="antiholomorphic index")
    p.add_argument("--z", type=_parse_complex, required=True, help="point RE,IM")
    p.add_argument(
        "--recurrence", action="store_true", help="use the lattice recurrence route"
    )
    _add_common(p)

    p = commands.add_parser("cauchy", help="transform of one basis polynomial")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=_parse_complex, required=True, help="point RE,IM")
    p.add_argument(
        "--numeric",
        action="store_true",
        help="also run the singular quadrature and print the difference",
    )
    _add_common(p)

    p = commands.add_parser("project", help="level projection coefficients")
    p.add_argument("--level", type=int, required=True, help="target level n")
    p.add_argument(
        "--source",
        nargs=3,
        metavar=("KIND", "M", "N"),
        required=True,
        help="'hermite M N' or 'psi M N'",
    )
    p.add_argument("--jmax", type=int, required=True, help="highest coefficient index")
    _add_common(p)

    p = commands.add_parser("gram", help="transform-image Gram matrix")
    p.add_argument("--max-index", type=int, required=True, help="indices run 0..K")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p)

    p = commands.add_parser("ranges", help="range-space basis indices")
    p.add_argument("--variant", choices=("r", "rtilde"), required=True)
    p.add_argument("--ell", type=int, required=True, help="source level offset")
    p.add_argument("--level", type=int, required=True, help="target level n")
    p.add_argument("--count", type=int, default=8, help="indices to list (variant r)")
    p.add_argument(
        "--inclusions",
        action="store_true",
        help="also report computed index-set inclusions between consecutive spans",
    )
    _add_common(p)

    p = commands.add_parser("svd", help="singular values of the truncated operator")
    p.add_argument("--degree", type=int, required=True, help="total-degree cutoff")
    _add_common(p)

    p = commands.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=SUITE_NAMES + ("all",),
        help="which suite (default all)",
    )
    p.add_argument(
        "--tolerance", type=float, help="override every record tolerance"
    )
    _add_common(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args)
        return _DISPATCH[args.command](args, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
