"""Command-line front end: construction, census, verification, export.

Every run is deterministic for fixed flags; reports are JSON (or delimited
text via --format text), polynomials use the textual term format, meshes
are Wavefront OBJ.  The census and singularity commands can render a
matplotlib figure next to the main output via --fig.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .critical import brute_force_scan, family_enumerate, image_census
from .errors import VerificationError
from .folding import chebyshev_T, folding_P, folding_Q
from .poly import poly_to_text
from .surfaces import (
    build_surface,
    enumerate_singular_U,
    enumerate_singular_hyper,
    hyper_report,
    hypersurface_build,
    real_variant,
    real_variant_report,
    singular_report,
)
from . import verify as verify_mod


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _census_text(census) -> str:
    rows = ["tag\tvalue\tcount_formula\tcount_bruteforce"]
    for f in census.families:
        rows.append(f"{f.tag}\t{f.value}\t{f.count_formula}\t{f.count_bruteforce}")
    rows.append(f"total\t-\t{census.total}\t{census.total}")
    rows.append(f"distinct_images\t-\t{census.distinct_images}\t{census.distinct_images}")
    return "\n".join(rows) + "\n"


def _singular_text(report: dict) -> str:
    rows = [
        "x_re\tx_im\ty_re\ty_im\tw_re\tw_im\tq_value\tt_value"
        "\tresidual_f\tresidual_grad\thess_det_abs"
    ]
    for p in report["points"]:
        rows.append(
            "\t".join(
                [
                    f"{p['x'][0]:.6e}", f"{p['x'][1]:.6e}",
                    f"{p['y'][0]:.6e}", f"{p['y'][1]:.6e}",
                    f"{p['w'][0]:.6e}", f"{p['w'][1]:.6e}",
                    str(p["q_value"]), str(p["t_value"]),
                    f"{p['residual_f']:.6e}", f"{p['residual_grad']:.6e}",
                    f"{p['hess_det_abs']:.6e}",
                ]
            )
        )
    return "\n".join(rows) + "\n"


def _cmd_poly(args) -> int:
    builders = {"P": folding_P, "Q": folding_Q, "T": chebyshev_T}
    if args.kind not in builders:
        raise ValueError(f"poly kind must be P, Q or T, got {args.kind!r}")
    p = builders[args.kind](args.d)
    _emit(poly_to_text(p), args.out)
    return 0


def _cmd_lemma(args) -> int:
    points = family_enumerate(args.d, tol_value=args.tol_value)
    scan = brute_force_scan(args.d, tol_grad=args.tol_grad, tol_value=args.tol_value)
    if [(p.i, p.j) for p in points] != [(p.i, p.j) for p in scan]:
        raise VerificationError("family enumeration disagrees with scan")
    census = image_census(scan, args.d)
    if args.format == "text":
        _emit(_census_text(census), args.out)
    else:
        _emit(_json_text(census.to_json_dict()), args.out)
    if args.fig:
        from .plots import plot_critical_points

        plot_critical_points(scan, args.d, args.fig)
    return 0


def _cmd_surface(args) -> int:
    if args.kind not in ("U", "V"):
        raise ValueError(f"surface kind must be U or V, got {args.kind!r}")
    spec = build_surface(args.d, args.kind)
    _emit(poly_to_text(spec.poly), args.out)
    return 0


def _cmd_singular(args) -> int:
    points = enumerate_singular_U(args.d)
    report = singular_report(args.d, points)
    if args.format == "text":
        _emit(_singular_text(report), args.out)
    else:
        _emit(_json_text(report), args.out)
    if args.fig:
        from .plots import plot_singular_points

        plot_singular_points(points, args.d, args.fig)
    return 0


def _cmd_hyper(args) -> int:
    if args.format == "text":
        _emit(poly_to_text(hypersurface_build(args.n).poly), args.out)
    else:
        enumerated = None
        if 3 * args.n <= 9:
            enumerated = len(enumerate_singular_hyper(args.n))
        _emit(_json_text(hyper_report(args.n, enumerated)), args.out)
    return 0


def _cmd_real(args) -> int:
    if args.format == "json":
        _emit(_json_text(real_variant_report(args.d)), args.out)
    else:
        p = real_variant(args.d)
        _emit(poly_to_text(p, names=("X", "Y", "Z")), args.out)
    return 0


def _cmd_mesh(args) -> int:
    from .mesh import mesh_real_variant, mesh_to_obj

    mesh = mesh_real_variant(args.d, args.box, args.res)
    if mesh.is_empty():
        print("warning: empty level set in the requested box", file=sys.stderr)
    _emit(mesh_to_obj(mesh), args.out)
    return 0


def _cmd_verify_all(args) -> int:
    degrees = tuple(int(tok) for tok in args.d.split(","))
    results = verify_mod.run_all(degrees, corrupt_q=args.corrupt_q)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    if failed:
        for r in failed:
            print(f"error: criterion {r.number} failed: {r.detail}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a2fold",
        description="nodal surfaces from shifted A2 folding polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="emit P_d, Q_d or T_d in the text format")
    p.add_argument("--kind", required=True, choices=("P", "Q", "T"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("text",), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("lemma", help="critical point census inside the triangle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.add_argument("--fig", help="also render the critical points to this image file")
    p.add_argument("--tol-grad", type=float, default=None)
    p.add_argument("--tol-value", type=float, default=1e-8)
    p.set_defaults(fn=_cmd_lemma)

    p = sub.add_parser("surface", help="emit the U_d or V_d surface polynomial")
    p.add_argument("--kind", required=True, choices=("U", "V"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("text",), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_surface)

    p = sub.add_parser("singular", help="enumerate and certify singular points of U_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.add_argument("--fig", help="also render the singular point data to this image file")
    p.set_defaults(fn=_cmd_singular)

    p = sub.add_parser("hyper", help="4D hypersurface: count report or polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_hyper)

    p = sub.add_parser(
        "real",
        help="emit the real variant of U_d (text) or its real-node report (json)",
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_real)

    p = sub.add_parser("mesh", help="marching-cubes OBJ mesh of the real variant")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--box", type=float, default=2.0)
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--format", choices=("obj",), default="obj")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_mesh)

    p = sub.add_parser("verify-all", help="run the full acceptance battery")
    p.add_argument("--d", default="3,6,9,12", help="comma-separated degree list")
    p.add_argument(
        "--corrupt-q",
        type=int,
        default=None,
        help="inject a +x^d defect into Q_d before verifying (negative control)",
    )
    p.set_defaults(fn=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
