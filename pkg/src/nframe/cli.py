"""Command-line front end.

One subcommand per capability: check, inner, norm, bounds, dual, tight,
reconstruct, image, combine, certify.  Every command reads a JSON instance
(except certify, which generates its own), prints a report as a table or
as JSON, and exits 0 on success, 1 when a frame property fails, 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import certify as certify_mod
from . import frames, nspace, optheory
from .errors import InstanceFormatError, NFrameError, SingularFrameOperatorError
from .instances import load_instance

__all__ = ["main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BAD_INPUT = 2


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    # flat key = value table
    def walk(prefix, value):
        if isinstance(value, dict):
            for key, sub in value.items():
                walk(f"{prefix}.{key}" if prefix else str(key), sub)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, sub in enumerate(value):
                walk(f"{prefix}[{i}]", sub)
        else:
            print(f"{prefix} = {value}")

    walk("", report)


def _report(command: str, args, started: float, tolerances: dict, results: dict, verdicts: dict):
    return {
        "command": command,
        "params": {
            "instance": getattr(args, "instance", None),
            "tol": getattr(args, "tol", None),
        },
        "tolerances": tolerances,
        "results": results,
        "verdicts": verdicts,
        "wall_time_s": round(time.perf_counter() - started, 6),
    }


def _load(args):
    inst = load_instance(args.instance)
    space = inst.induced_space()
    fs = inst.frame_system(space)
    return inst, space, fs


def _vec(value):
    return [float(x) for x in np.asarray(value).ravel()]


def _mat(value):
    return np.asarray(value).tolist()


def _cmd_check(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    b = frames.optimal_bounds(fs)
    frame_ok = frames.is_frame(fs, tol=args.tol)
    tight_ok, tight_bound = frames.is_tight(fs, tol=args.tol)
    bessel_ok = frames.is_bessel(fs, b.upper) if b.upper > 0 else True
    report = _report(
        "check",
        args,
        started,
        {"frame_tol": args.tol},
        {
            "gamma": space.gamma,
            "lower_bound": b.lower,
            "upper_bound": b.upper,
            "tight_bound": None if not tight_ok else tight_bound,
        },
        {
            "frame": frame_ok,
            "bessel_at_upper_bound": bessel_ok,
            "tight": tight_ok,
        },
    )
    _emit(report, args.json)
    return EXIT_OK if frame_ok else EXIT_FAIL


def _named_vector(inst, name):
    if name not in inst.vectors:
        raise InstanceFormatError(f"instance has no vector named {name!r}")
    return inst.vectors[name]


def _cmd_inner(args) -> int:
    started = time.perf_counter()
    inst, space, _ = _load(args)
    x = _named_vector(inst, args.x)
    y = _named_vector(inst, args.y)
    anchors = space.anchor_set
    value = nspace.n_inner(x, y, anchors)
    report = _report(
        "inner",
        args,
        started,
        {},
        {"x": args.x, "y": args.y, "inner": value, "gamma": anchors.gamma},
        {},
    )
    _emit(report, args.json)
    return EXIT_OK


def _cmd_norm(args) -> int:
    started = time.perf_counter()
    inst, space, _ = _load(args)
    x = _named_vector(inst, args.x)
    value = nspace.n_norm(x, space.anchor_set)
    report = _report("norm", args, started, {}, {"x": args.x, "norm": value}, {})
    _emit(report, args.json)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    b = frames.optimal_bounds(fs)
    surjective, certified = optheory.surjectivity_frame_test(fs)
    report = _report(
        "bounds",
        args,
        started,
        {"frame_tol": args.tol},
        {
            "lower_bound": b.lower,
            "upper_bound": b.upper,
            "synthesis_surjective": surjective,
            "pseudo_inverse_lower_bound": certified,
        },
        {"frame": frames.is_frame(fs, tol=args.tol)},
    )
    _emit(report, args.json)
    return EXIT_OK


def _cmd_dual(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    try:
        dual = frames.canonical_dual(fs)
    except SingularFrameOperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    db = frames.optimal_bounds(dual)
    residual = 0.0
    for name, vec in inst.vectors.items():
        rec = frames.synthesis(frames.analysis(vec, dual), fs)
        residual = max(residual, float(np.linalg.norm(rec - nspace.project(vec, space))))
    report = _report(
        "dual",
        args,
        started,
        {"frame_tol": args.tol},
        {
            "dual_vectors": _mat(dual.vectors),
            "dual_lower_bound": db.lower,
            "dual_upper_bound": db.upper,
            "max_reconstruction_residual": residual,
        },
        {"frame": True},
    )
    _emit(report, args.json)
    return EXIT_OK


def _cmd_tight(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    try:
        tight = frames.canonical_tight(fs)
    except SingularFrameOperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    tb = frames.optimal_bounds(tight)
    deviation = max(abs(tb.lower - 1.0), abs(tb.upper - 1.0))
    report = _report(
        "tight",
        args,
        started,
        {"frame_tol": args.tol, "unit_bound_tol": 1e-8},
        {
            "tight_vectors": _mat(tight.vectors),
            "bounds": [tb.lower, tb.upper],
            "deviation_from_unit_bounds": deviation,
        },
        {"unit_bounds": deviation <= 1e-8},
    )
    _emit(report, args.json)
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    names = [args.vector] if args.vector else sorted(inst.vectors)
    results = {}
    try:
        for name in names:
            vec = _named_vector(inst, name)
            rec = frames.reconstruct(vec, fs)
            target = nspace.project(vec, space)
            results[name] = {
                "coordinates": _vec(rec),
                "residual": float(np.linalg.norm(rec - target)),
            }
    except SingularFrameOperatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = _report("reconstruct", args, started, {}, {"reconstructions": results}, {})
    _emit(report, args.json)
    return EXIT_OK


def _named_operator(inst, name):
    if name not in inst.operators:
        raise InstanceFormatError(f"instance has no operator named {name!r}")
    return inst.operators[name]


def _cmd_image(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    u = _named_operator(inst, args.operator)
    image = optheory.image_frame(u, fs)
    b = frames.optimal_bounds(image)
    conjugated = optheory.image_frame_operator(u, fs)
    recomputed = frames.frame_operator(image)
    agreement = float(np.max(np.abs(conjugated.matrix - recomputed.matrix)))
    frame_ok = frames.is_frame(image, tol=args.tol)
    report = _report(
        "image",
        args,
        started,
        {"frame_tol": args.tol},
        {
            "operator": args.operator,
            "image_vectors": _mat(image.vectors),
            "lower_bound": b.lower,
            "upper_bound": b.upper,
            "conjugation_agreement": agreement,
        },
        {"frame": frame_ok},
    )
    _emit(report, args.json)
    return EXIT_OK if frame_ok else EXIT_FAIL


def _cmd_combine(args) -> int:
    started = time.perf_counter()
    inst, space, fs = _load(args)
    gs = inst.frame2_system(space)
    l1 = _named_operator(inst, args.op1)
    l2 = _named_operator(inst, args.op2)
    combined = optheory.combine(l1, fs, l2, gs)
    b = frames.optimal_bounds(combined)
    frame_ok = frames.is_frame(combined, tol=args.tol)
    report = _report(
        "combine",
        args,
        started,
        {"frame_tol": args.tol},
        {
            "combined_vectors": _mat(combined.vectors),
            "lower_bound": b.lower,
            "upper_bound": b.upper,
        },
        {"frame": frame_ok},
    )
    _emit(report, args.json)
    return EXIT_OK if frame_ok else EXIT_FAIL


def _cmd_certify(args) -> int:
    started = time.perf_counter()
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    results = certify_mod.run(
        seed=args.seed,
        trials=args.trials,
        d_max=args.d_max,
        m_max=args.m_max,
    )
    all_passed = all(r.passed for r in results)
    counterexample = next((r.counterexample for r in results if not r.passed), None)
    report = _report(
        "certify",
        args,
        started,
        {r.name: r.tolerance for r in results},
        {
            "seed": args.seed,
            "trials": args.trials,
            "d_max": args.d_max,
            "m_max": args.m_max,
            "suites": [
                {
                    "name": r.name,
                    "trials": r.trials,
                    "failures": r.failures,
                    "worst_residual": r.worst_residual,
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                }
                for r in results
            ],
            "counterexample": counterexample,
        },
        {"all_passed": all_passed},
    )
    _emit(report, args.json)
    return EXIT_OK if all_passed else EXIT_FAIL


def _add_common(parser, instance=True):
    if instance:
        parser.add_argument("--instance", required=True, help="path to a JSON instance file")
    parser.add_argument("--tol", type=float, default=frames.FRAME_TOL, help="frame decision tolerance")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the report as JSON")
    fmt.add_argument(
        "--table", dest="json", action="store_false", help="emit the report as a key/value table"
    )
    parser.set_defaults(json=False)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nframe",
        description="Frames relative to an anchor tuple: evaluation, duals, tight "
        "canonicalization, operator theorems, and randomized certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="frame / Bessel / tight verdicts and optimal bounds")
    _add_common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("inner", help="n-inner product of two named vectors")
    _add_common(p)
    p.add_argument("--x", default="x", help="name of the first vector")
    p.add_argument("--y", default="y", help="name of the second vector")
    p.set_defaults(fn=_cmd_inner)

    p = sub.add_parser("norm", help="n-norm of a named vector")
    _add_common(p)
    p.add_argument("--x", default="x", help="name of the vector")
    p.set_defaults(fn=_cmd_norm)

    p = sub.add_parser("bounds", help="optimal bounds and the pseudo-inverse certificate")
    _add_common(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("dual", help="canonical dual frame and reconstruction residuals")
    _add_common(p)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("tight", help="canonical tight frame and its bound deviation")
    _add_common(p)
    p.set_defaults(fn=_cmd_tight)

    p = sub.add_parser("reconstruct", help="reconstruct named vectors through the frame")
    _add_common(p)
    p.add_argument("--vector", default=None, help="vector name (default: all)")
    p.set_defaults(fn=_cmd_reconstruct)

    p = sub.add_parser("image", help="image of the frame under a named operator")
    _add_common(p)
    p.add_argument("--operator", default="U", help="operator name")
    p.set_defaults(fn=_cmd_image)

    p = sub.add_parser("combine", help="combined family L1 f_i + L2 g_i")
    _add_common(p)
    p.add_argument("--op1", default="L1", help="operator applied to the first frame")
    p.add_argument("--op2", default="L2", help="operator applied to the second frame")
    p.set_defaults(fn=_cmd_combine)

    p = sub.add_parser("certify", help="run all randomized certification suites")
    _add_common(p, instance=False)
    p.add_argument("--seed", type=int, default=42, help="master seed")
    p.add_argument("--trials", type=int, default=200, help="trials per suite")
    p.add_argument("--d-max", type=int, default=6, help="largest ambient dimension")
    p.add_argument("--m-max", type=int, default=12, help="largest frame size")
    p.set_defaults(fn=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InstanceFormatError, NFrameError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
