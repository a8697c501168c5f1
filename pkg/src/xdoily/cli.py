"""Command-line front end.

Verbs: catalog, analyze, region, heatmap, curve, verify.  Exit codes follow
a sysexits-style split: 0 success, 1 verification failure, 2 I/O failure,
3 internal inconsistency, 64 usage error, 65 unparsable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bell import bell_m_oracle, constant_m_curve, heatmap_csv, heatmap_m
from .hyperplanes import catalog_table, hyperplane_records
from .regions import classify_by_region, region_csv, region_params_for_state, sample_region
from .spectra import classify
from .states import StateDescriptorError, state_from_descriptor
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_IO = 2
EXIT_INCONSISTENT = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _point_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x,y got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers, got {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _resolution(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("resolution must be at least 2")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="xdoily", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"xdoily {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", help="Fano-plane table and hyperplane census")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("analyze", help="classify a state descriptor file")
    p.add_argument("state_file", help="JSON state descriptor")
    p.add_argument("--out")

    p = sub.add_parser("region", help="validity/separability/entanglement grid as CSV")
    p.add_argument("--beta0", type=float, required=True)
    p.add_argument("--c", type=_point_pair, required=True, metavar="B4,B3",
                   help="the point C = (beta4, beta3)")
    p.add_argument("--type", type=int, choices=(1, 2), default=1, dest="t")
    p.add_argument("--resolution", type=_resolution, default=100)
    p.add_argument("--out")

    p = sub.add_parser("heatmap", help="Bell-measure grid over the validity region as CSV")
    p.add_argument("--beta0", type=float, required=True)
    p.add_argument("--c", type=_point_pair, required=True, metavar="B4,B3")
    p.add_argument("--type", type=int, choices=(1, 2), default=1, dest="t")
    p.add_argument("--resolution", type=_resolution, default=100)
    p.add_argument("--out")

    p = sub.add_parser("curve", help="constant-measure circle/ellipse data as JSON")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--beta0", type=float, required=True)
    p.add_argument("--c", type=_point_pair, required=True, metavar="B4,B3")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("suite", nargs="?", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--draws", type=_positive_int, default=10000)
    p.add_argument("--out")
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run_catalog(args) -> int:
    if args.format == "table":
        counts = {"perp": 0, "grid": 0, "ovoid": 0}
        for rec in hyperplane_records():
            counts[rec["kind"]] += 1
        text = catalog_table()
        text += "\n".join(
            [
                "",
                "Hyperplane census of W(3,2)",
                f"perp-sets {counts['perp']:>3}",
                f"grids     {counts['grid']:>3}",
                f"ovoids    {counts['ovoid']:>3}",
                f"total     {counts['perp'] + counts['grid'] + counts['ovoid']:>3}",
            ]
        ) + "\n"
    else:
        from .hyperplanes import catalog_rows

        text = json.dumps(
            {"fano_planes": catalog_rows(), "hyperplanes": hyperplane_records()},
            indent=2,
        ) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _run_analyze(args) -> int:
    with open(args.state_file, "r", encoding="utf-8") as fh:
        descriptor = json.load(fh)
    state = state_from_descriptor(descriptor)
    report = classify(state)
    m_value = bell_m_oracle(state.coeffs.beta)
    params = region_params_for_state(state)
    region = classify_by_region(params) if params is not None else None
    if region is not None and region != report.verdict:
        sys.stderr.write(
            f"internal inconsistency: disc route says {region}, "
            f"spectral route says {report.verdict}\n"
        )
        return EXIT_INCONSISTENT
    payload = report.to_json()
    payload["m_value"] = m_value
    payload["region_classification"] = region
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


def _run_region(args) -> int:
    beta4, beta3 = args.c
    rows = sample_region(args.beta0, beta3, beta4, args.t, args.resolution)
    _emit(region_csv(rows), args.out)
    return EXIT_OK


def _run_heatmap(args) -> int:
    beta4, beta3 = args.c
    rows = heatmap_m(args.beta0, beta3, beta4, args.resolution, t=args.t)
    _emit(heatmap_csv(rows), args.out)
    return EXIT_OK


def _run_curve(args) -> int:
    beta4, beta3 = args.c
    curve = constant_m_curve(args.k, args.beta0, beta3, beta4)
    _emit(json.dumps(curve.to_json(), indent=2) + "\n", args.out)
    return EXIT_OK


def _run_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    lines = [f"seed: {args.seed}", f"draws: {args.draws}"]
    checks = run_suites(names, seed=args.seed, draws=args.draws)
    failures = [c for c in checks if not c.passed]
    for c in checks:
        mark = "ok" if c.passed else "FAIL"
        lines.append(f"[{c.suite}] {c.name}: {c.detail} ... {mark}")
    verdict = "PASS" if not failures else f"FAIL ({len(failures)} of {len(checks)} checks)"
    lines.append(f"result: {verdict}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {
        "catalog": _run_catalog,
        "analyze": _run_analyze,
        "region": _run_region,
        "heatmap": _run_heatmap,
        "curve": _run_curve,
        "verify": _run_verify,
    }
    try:
        return handlers[args.verb](args)
    except StateDescriptorError as exc:
        sys.stderr.write(f"invalid state descriptor: {exc}\n")
        return EXIT_DATA
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        sys.stderr.write(f"unparsable JSON: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        sys.stderr.write(f"i/o failure: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
