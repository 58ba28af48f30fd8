"""Command-line interface: check, standardize, transform, model, extreme,
enumerate, verify.

Exit codes: 0 success or positive verdict, 1 valid-input negative verdict,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import documents as doc
from . import harness
from . import rays
from . import transforms as tr
from .analysis import independency_model, is_extreme
from .core import (
    SetFunction,
    StandardizationKind,
    VariableSet,
    carrier,
    is_modular,
    is_supermodular,
    standardize,
    support,
)


def _load(path: str) -> SetFunction:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise doc.DocumentError(f"cannot read {path}: {e}") from None
    return doc.parse_set_function_text(text)


def _labels(arg: str) -> list[str]:
    return [s for s in arg.split(",") if s]


def _label_map(arg: str) -> dict[str, str]:
    out = {}
    for item in _labels(arg):
        if item.count("=") != 1:
            raise doc.DocumentError(f"mapping entry {item!r} is not of the form x=y")
        k, v = item.split("=")
        out[k] = v
    return out


def _emit(m: SetFunction) -> None:
    sys.stdout.write(doc.set_function_text(m))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    m = _load(args.file)
    sup = is_supermodular(m)
    model = independency_model(m)
    report = {
        "supermodular": sup,
        "modular": is_modular(m),
        "nondecreasing": m.is_nondecreasing(),
        "nonincreasing": m.is_nonincreasing(),
        "carrier": list(m.vars.labels_of(carrier(m))),
        "triplets": model.universe_size,
        "independencies": len(model.zero_set),
    }
    if sup:
        report["support"] = list(m.vars.labels_of(support(m)))
        report["extreme"] = is_extreme(m).extreme
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for key in ("supermodular", "modular", "nondecreasing", "nonincreasing"):
            print(f"{key}: {_yesno(report[key])}")
        print("carrier: " + ",".join(report["carrier"]))
        if sup:
            print("support: " + ",".join(report["support"]))
            print(f"extreme: {_yesno(report['extreme'])}")
        print(f"scalar table: {report['triplets']} triplets, "
              f"{report['independencies']} zero")
    return 0 if sup else 1


def cmd_standardize(args) -> int:
    m = _load(args.file)
    _emit(standardize(m, StandardizationKind(args.kind)))
    return 0


def _transform(args, m: SetFunction) -> SetFunction:
    op = args.op
    if op == "permute":
        mapping = _label_map(args.map or "")
        if sorted(mapping) != list(m.vars.labels):
            raise doc.DocumentError("--map must cover every variable exactly once")
        return tr.permute(m, [m.vars.index(mapping[s]) for s in m.vars.labels])
    if op == "reflect":
        return tr.reflect(m)
    if op == "monotonize_sub":
        return tr.monotonize_max_sub(m)
    if op == "monotonize_sup":
        return tr.monotonize_max_sup(m)
    if op == "multiply":
        return tr.pointwise_multiply(m, _load(_require(args, "with_file", "--with")))
    if op == "power":
        k = _require(args, "exponent", "--exponent")
        return tr.outer_compose(m, m, lambda x, y: x ** k)
    if op == "lift":
        return tr.lift(m, VariableSet.of(_require_labels(args, "target", "--target")))
    if op == "minor":
        return tr.minor(m, m.vars.mask_of(_labels(args.delete or "")),
                        m.vars.mask_of(_labels(args.extract or "")))
    if op == "mean_minor":
        return tr.mean_minor(m, m.vars.mask_of(_require_labels(args, "keep", "--keep")))
    if op == "max_minor":
        return tr.max_minor(m, m.vars.mask_of(_require_labels(args, "keep", "--keep")))
    if op == "coarsen":
        sigma = _label_map(_require(args, "map", "--map"))
        return tr.coarsen(m, VariableSet.of(set(sigma.values())), sigma)
    if op == "product":
        return tr.product_compose(m, _load(_require(args, "with_file", "--with")))
    if op == "lowmod":
        return tr.lower_modular_extension(
            m, VariableSet.of(_require_labels(args, "target", "--target")))
    if op == "uppmod":
        return tr.upper_modular_extension(
            m, VariableSet.of(_require_labels(args, "target", "--target")))
    if op == "lowrepl":
        return tr.lower_replication(m, _require(args, "z", "--z"),
                                    _require_labels(args, "fresh", "--fresh"))
    if op == "upprepl":
        return tr.upper_replication(m, _require(args, "z", "--z"),
                                    _require_labels(args, "fresh", "--fresh"))
    raise doc.DocumentError(f"unknown transform {op!r}")


def _require(args, attr: str, flag: str):
    value = getattr(args, attr)
    if value is None:
        raise doc.DocumentError(f"{args.op} requires {flag}")
    return value


def _require_labels(args, attr: str, flag: str) -> list[str]:
    return _labels(_require(args, attr, flag))


def cmd_transform(args) -> int:
    _emit(_transform(args, _load(args.file)))
    return 0


def cmd_model(args) -> int:
    m = _load(args.file)
    model = independency_model(m)
    from .core import all_triplets
    lines = [t.render(m.vars) for t in all_triplets(m.vars) if t in model]
    if args.json:
        print(json.dumps({"independencies": lines,
                          "dependency_count": model.dependency_count},
                         sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"dependencies: {model.dependency_count}")
    return 0


def cmd_extreme(args) -> int:
    m = _load(args.file)
    report = is_extreme(m)
    out = {
        "supermodular": report.supermodular,
        "modular": report.modular,
        "tight_triplets": len(report.face.tight),
        "face_rank": report.face.rank,
        "face_dimension": report.face.dimension,
        "extreme": report.extreme,
    }
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        for key, value in out.items():
            print(f"{key}: {_yesno(value) if isinstance(value, bool) else value}")
    return 0 if report.extreme else 1


def cmd_enumerate(args) -> int:
    cat = rays.classify_orbits(rays.enumerate_extreme_rays(args.n, args.allow_large))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"catalogue_n{args.n}.json").write_text(doc.catalogue_text(cat))
        (out / f"catalogue_n{args.n}.tsv").write_text(doc.catalogue_table(cat))
    if args.json:
        print(json.dumps(doc.catalogue_document(cat), sort_keys=True))
    else:
        print(f"n={args.n}: {len(cat.generators)} generators, "
              f"{len(cat.orbits)} orbits")
    return 0


def cmd_verify(args) -> int:
    if args.corrupt:
        cat = harness.catalogue(args.n)
        bad = cat.generators[0] + cat.generators[-1]
        report = rays.verify_catalogue(replace(cat, generators=cat.generators + (bad,)))
        for line in report.failures:
            print(f"FAIL catalogue: {line}")
        print("verify: corrupted catalogue rejected" if not report.ok
              else "verify: corruption not detected")
        return 1 if not report.ok else 0
    if args.suite == "catalogue":
        report = rays.verify_catalogue(harness.catalogue(args.n))
        for line in report.failures:
            print(f"FAIL catalogue: {line}")
        print(f"catalogue: {'ok' if report.ok else 'failed'}")
        return 0 if report.ok else 1
    kwargs = {}
    if args.suite != "standardization":
        kwargs["n"] = args.n
    if args.suite in ("models", "oracle") and args.samples is not None:
        kwargs["samples"] = args.samples
    results = harness.run_suite(args.suite, **kwargs)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail}
                          for r in results]))
    else:
        for r in failed:
            print(f"FAIL {r.name}: {r.detail}")
        print(f"{args.suite}: {len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supmod",
        description="Exact computation with supermodular set functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="cone membership and basic properties")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("standardize", help="canonical class representative")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[k.value for k in StandardizationKind])
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("transform", help="apply a transformation")
    p.add_argument("file")
    p.add_argument("--op", required=True)
    p.add_argument("--map")
    p.add_argument("--with", dest="with_file")
    p.add_argument("--target")
    p.add_argument("--delete")
    p.add_argument("--extract")
    p.add_argument("--keep")
    p.add_argument("--z")
    p.add_argument("--fresh")
    p.add_argument("--exponent", type=int)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("model", help="induced independency model")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("extreme", help="extremality certificate")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extreme)

    p = sub.add_parser("enumerate", help="extreme-ray catalogue")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a property-check suite")
    p.add_argument("--suite", required=True,
                   choices=sorted(harness.SUITES) + ["catalogue"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--samples", type=int)
    p.add_argument("--corrupt", action="store_true",
                   help="inject a corrupted catalogue as a negative control")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (doc.DocumentError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
