"""Command line front end: ``cheegerpoly <command> ...``.

Exit status is 0 on success, 2 when an input fails validation and 3 when
``verify`` finds an inequality violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .alignment import METRICS, aligned_deficit_record, align
from .cheeger import NotCheegerRegular, cheeger_constant, cheeger_set
from .geometry import GeometryError, polygon_from_dict, regular_ngon
from .lab import (
    EpsTooLarge,
    sweep_perturbation,
    tentacle_polygon,
    tentacle_series,
    verify_ensemble,
    write_sweep_csv,
    write_tentacle_csv,
)
from .metrics import hausdorff_boundary, symmetric_difference_area

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_VIOLATION = 3

log = logging.getLogger("cheegerpoly")


class InputError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _load_polygon(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "vertices" not in data:
        raise InputError(f'{path}: expected {{"vertices": [[x, y], ...]}}')
    try:
        return polygon_from_dict(data)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_ngon(args) -> int:
    _emit(regular_ngon(args.n).to_dict(), args.out)
    return EXIT_OK


def cmd_compute(args) -> int:
    rep = cheeger_constant(_load_polygon(args.input), method=args.method)
    _emit(rep.to_dict(), args.out)
    return EXIT_OK


def cmd_cheeger_set(args) -> int:
    _emit(cheeger_set(_load_polygon(args.input)).to_dict(), args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    a, b = _load_polygon(args.a), _load_polygon(args.b)
    if args.metric == "hausdorff":
        out = hausdorff_boundary(a, b, args.err_tol).to_dict()
    else:
        # the clipping sum is exact up to rounding
        out = {"estimate": symmetric_difference_area(a, b), "error_bound": 0.0}
    _emit(out, args.out)
    return EXIT_OK


def cmd_align(args) -> int:
    res = align(_load_polygon(args.moving), _load_polygon(args.fixed), args.metric, err_tol=args.err_tol)
    _emit({**res.motion.to_dict(), "distance": res.distance}, args.out)
    return EXIT_OK


def cmd_deficit(args) -> int:
    p = _load_polygon(args.input)
    _emit(aligned_deficit_record(p, shape_id=args.input).to_dict(), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    _, rows = sweep_perturbation(args.n, args.eps)
    write_sweep_csv(rows, args.out)
    for r in rows:
        log.info("eps=%g deficit=%.6g hd=%.6g order=%s", r.eps, r.deficit, r.hd, r.order_estimate)
    return EXIT_OK


def cmd_tentacle(args) -> int:
    _emit(tentacle_polygon(args.k).to_dict(), args.out)
    return EXIT_OK


def cmd_tentacle_series(args) -> int:
    series = tentacle_series(args.ks)
    write_tentacle_csv(series, args.out)
    if not series.ok:
        log.warning("tentacle series: bound_ok=%s hd_increasing=%s", series.bound_ok, series.hd_increasing)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_ensemble(args.n, args.samples, args.seed, distances=not args.no_distances)
    _emit(rep.to_dict(), args.out)
    if not rep.ok:
        log.error("inequality violations: %s", {k: v for k, v in rep.violations.items() if v})
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_plot(args) -> int:
    from .lab import read_sweep_csv
    from .plotting import plot_sweep

    try:
        import matplotlib  # noqa: F401
    except ImportError as exc:
        raise InputError("plotting needs matplotlib (pip install cheegerpoly[plot])") from exc
    try:
        rows = read_sweep_csv(args.input)
    except (OSError, KeyError, ValueError) as exc:
        raise InputError(f"{args.input}: {exc}") from exc
    plot_sweep(rows, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cheegerpoly", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ngon", help="unit-area regular polygon")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_ngon)

    s = sub.add_parser("compute", help="Cheeger constant report")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--method", choices=("auto", "formula", "root"), default="auto")
    s.add_argument("--out")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("cheeger-set", help="Cheeger set as an arc-polygon")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_cheeger_set)

    s = sub.add_parser("distance", help="boundary Hausdorff or symmetric-difference distance")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--metric", choices=METRICS, default="hausdorff")
    s.add_argument("--err-tol", type=float)
    s.add_argument("--out")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("align", help="optimal rigid motion of --moving onto --fixed")
    s.add_argument("--moving", required=True)
    s.add_argument("--fixed", required=True)
    s.add_argument("--metric", choices=METRICS, default="hausdorff")
    s.add_argument("--err-tol", type=float)
    s.add_argument("--out")
    s.set_defaults(func=cmd_align)

    s = sub.add_parser("deficit", help="stability record against the regular polygon")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_deficit)

    s = sub.add_parser("sweep", help="perturbation sweep to CSV")
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--eps", type=_float_list, default=[0.08, 0.04, 0.02, 0.01])
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("tentacle", help="tentacle polygon")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_tentacle)

    s = sub.add_parser("tentacle-series", help="tentacle family to CSV")
    s.add_argument("--ks", type=_float_list, default=[5, 10, 20, 40, 80])
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_tentacle_series)

    s = sub.add_parser("verify", help="inequality checks on a random ensemble")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-distances", action="store_true", help="skip the aligned distances (much faster)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("plot", help="SVG of a sweep CSV")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_plot)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, GeometryError, NotCheegerRegular, EpsTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
