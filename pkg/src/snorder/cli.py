"""Command-line interface.

Every subcommand reads JSON documents (validated against the bundled
schemas), prints a JSON report to stdout, and uses exit codes:
0 = analysis completed, 2 = malformed input, 3 = backend/analysis failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

import jsonschema

from . import serialization as ser
from .errors import SnorderError
from .majorization import (
    Majorization,
    gds_check,
    gds_from_transforms,
    majorize_check,
    t_transform_decompose,
)
from .matfunc import repr_of_fx
from .ordering import convexity_check, monotonicity_certificate, monotonicity_verify_direct
from .partitions import dominance_check, gdod_vector
from .scalar import EXACT, FLOAT
from .schur import (
    DEFAULT_SEED,
    DomainBox,
    negative_sum_of_squares,
    schur_convex_falsify,
    schur_ostrowski_check,
    sum_of_squares,
)
from .serialization import InputFormatError
from .snrepr import canonical_repr, compare_sno

_FUNCS = {"sum_sq": sum_of_squares, "neg_sum_sq": negative_sum_of_squares}


def _load(path: str, schema: str | None = None):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise InputFormatError(f"{path}: {err}")
    if schema is not None:
        try:
            ser.make_validator(schema).validate(doc)
        except jsonschema.ValidationError as err:
            raise InputFormatError(f"{path}: {err.message}")
    return doc


def _emit(obj, args):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_majorize(args):
    x = ser.vector_from_json(_load(args.x, "vector"), args.backend)
    y = ser.vector_from_json(_load(args.y, "vector"), args.backend)
    verdict = majorize_check(x, y)
    out = {"verdict": verdict.value}
    if args.decompose and verdict is Majorization.STRICT:
        transforms = t_transform_decompose(x, y)
        p = gds_from_transforms(transforms, len(x))
        out["transforms"] = [ser.transform_to_json(t) for t in transforms]
        out["gds"] = ser.matrix_to_json(p)
        out["gds_valid"] = gds_check(p)
        out["all_beta_convex"] = all(t.beta_in_unit_interval for t in transforms)
    _emit(out, args)


def cmd_compare(args):
    rx = canonical_repr(ser.jordan_spec_from_json(_load(args.x, "jordan_spec"), args.backend))
    ry = canonical_repr(ser.jordan_spec_from_json(_load(args.y, "jordan_spec"), args.backend))
    _emit({"verdict": compare_sno(rx, ry).value}, args)


def cmd_repr(args):
    if args.matrix:
        if not args.eigenvalues:
            raise InputFormatError("--matrix requires --eigenvalues")
        m = ser.matrix_from_json(_load(args.matrix, "matrix"), args.backend)
        eigs = ser.vector_from_json(_load(args.eigenvalues, "vector"), args.backend)
        from .snrepr import repr_from_matrix

        rep = repr_from_matrix(m, eigs)
    else:
        if not args.spec:
            raise InputFormatError("provide --spec or --matrix/--eigenvalues")
        rep = canonical_repr(
            ser.jordan_spec_from_json(_load(args.spec, "jordan_spec"), args.backend)
        )
    _emit(ser.snrepr_to_json(rep), args)


def cmd_fmap(args):
    f = ser.function_from_json(_load(args.function, "function"), args.backend)
    rep = canonical_repr(
        ser.jordan_spec_from_json(_load(args.spec, "jordan_spec"), args.backend)
    )
    image, gaps = repr_of_fx(f, rep)
    _emit({"repr": ser.snrepr_to_json(image), "gdod": [list(g) for g in gaps]}, args)


def cmd_gdod(args):
    p = ser.partition_from_json(_load(args.p, "partition"))
    q = ser.partition_from_json(_load(args.q, "partition"))
    dominated = dominance_check(p, q)
    out = {"dominated": dominated}
    if dominated:
        out["gdod"] = list(gdod_vector(p, q))
    _emit(out, args)


def cmd_schur(args):
    factory = _FUNCS[args.func]
    f = factory(args.n)
    box = (
        ser.domain_box_from_json(_load(args.box, "domain_box"))
        if args.box
        else DomainBox(1.0, 0.0, 0.0)
    )
    rng = random.Random(args.seed)
    samples = [
        [complex(rng.uniform(-3, 3), 0.0) for _ in range(args.n)]
        for _ in range(args.samples)
    ]
    criterion = schur_ostrowski_check(f, box, samples)
    counter = schur_convex_falsify(f, args.n, trials=args.trials, seed=args.seed)
    out = {
        "criterion_passed": criterion.passed,
        "criterion_cases": len(criterion.records),
        "counterexample": None,
    }
    if counter is not None:
        out["counterexample"] = {
            "trial": counter.trial,
            "x": ser.vector_to_json(counter.x),
            "y": ser.vector_to_json(counter.y),
            "f_x": [counter.f_x.real, counter.f_x.imag],
            "f_y": [counter.f_y.real, counter.f_y.imag],
        }
    _emit(out, args)


def cmd_convexity(args):
    f = ser.function_from_json(_load(args.function, "function"), args.backend)
    a = ser.matrix_from_json(_load(args.a, "matrix"), args.backend)
    b = ser.matrix_from_json(_load(args.b, "matrix"), args.backend)
    try:
        ts = [Fraction(t) for t in args.t.split(",")]
    except (ValueError, ZeroDivisionError) as err:
        raise InputFormatError(f"bad -t list {args.t!r}: {err}")
    report = convexity_check(f, a, b, ts)
    _emit(
        {
            "consistent": report.consistent,
            "points": [
                {
                    "t": str(p.t),
                    "verdict": p.verdict.value if p.verdict else None,
                    "greater": p.greater,
                    "error": p.error,
                }
                for p in report.points
            ],
        },
        args,
    )


def cmd_monotone(args):
    f = ser.function_from_json(_load(args.function, "function"), args.backend)
    rx = canonical_repr(
        ser.jordan_spec_from_json(_load(args.x, "jordan_spec"), args.backend)
    )
    ry = canonical_repr(
        ser.jordan_spec_from_json(_load(args.y, "jordan_spec"), args.backend)
    )
    cert = monotonicity_certificate(f, rx, ry)
    direct = monotonicity_verify_direct(f, rx, ry)
    _emit(
        {
            "certificate": cert.case if cert else None,
            "direct_verdict": direct.value,
            "confirmed": cert is None or direct.value in ("strict_less", "weak_less", "equal"),
        },
        args,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sno",
        description="Total-order analysis of complex spectra and Jordan structure.",
    )
    parser.add_argument(
        "--backend",
        choices=[EXACT, FLOAT],
        default=os.environ.get("SNO_BACKEND", EXACT),
        help="numeric backend (env SNO_BACKEND)",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for all randomized analyses")
    parser.add_argument("--output", help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("majorize", help="majorization verdict for two vectors")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--decompose", action="store_true",
                   help="emit T-transform steps and the mixing matrix on strict verdicts")
    p.set_defaults(fn=cmd_majorize)

    p = sub.add_parser("compare", help="SN-order verdict for two Jordan specs")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("repr", help="canonical representation from a spec or a matrix")
    p.add_argument("--spec")
    p.add_argument("--matrix")
    p.add_argument("--eigenvalues")
    p.set_defaults(fn=cmd_repr)

    p = sub.add_parser("fmap", help="representation of f(X) plus prefix-sum gaps")
    p.add_argument("function")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_fmap)

    p = sub.add_parser("gdod", help="dominance verdict and gap vector for two partitions")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(fn=cmd_gdod)

    p = sub.add_parser("schur", help="derivative criterion and falsifier for a built-in function")
    p.add_argument("--func", choices=sorted(_FUNCS), default="sum_sq")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--box")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(fn=cmd_schur)

    p = sub.add_parser("convexity", help="pointwise convexity probe along mixing weights")
    p.add_argument("function")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-t", default="1/4,1/2,3/4", help="comma-separated rational weights")
    p.set_defaults(fn=cmd_convexity)

    p = sub.add_parser("monotone", help="monotonicity certificate plus direct verification")
    p.add_argument("function")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_monotone)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except InputFormatError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except SnorderError as err:
        print(f"analysis error: {type(err).__name__}: {err}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
