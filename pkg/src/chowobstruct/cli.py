"""Command-line front end.

Every subcommand wraps exactly one library operation and reports the same
mathematical content in text or JSON.  JSON output is canonical: keys are
sorted, every integer is a decimal string (so 53-bit consumers never corrupt
large torsion orders), and parsing plus re-serializing reproduces the bytes.

Exit codes: 0 success, 1 domain error (infinite group, inapplicable
assumption, unsupported dimension, ambient mismatch), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import AbelianPresentation, InfiniteGroupError
from .chow import (
    AmbientMismatchError,
    AmbientSpace,
    ChowClass,
    class_str,
    cup,
    parse_class,
)
from .complement import (
    ClosedFormReport,
    ComplementModel,
    Direction,
    InapplicableAssumptionError,
    PushforwardAssumption,
    closed_form_check,
    complement_group,
)
from .intlinalg import IntegerMatrix, smith_normal_form
from .obstruction import (
    ChernPair,
    DimensionUnsupportedError,
    Verdict,
    classify_all,
    decide,
)
from .steenrod import sq2

DOMAIN_ERRORS = (
    InfiniteGroupError,
    InapplicableAssumptionError,
    DimensionUnsupportedError,
    AmbientMismatchError,
)

# One-flag reproductions of the worked examples: ambient, multidegree,
# assumption, and a default Chern pair for `obstruct`.
PRESETS = {
    "bidegree34": {"ambient": "1,3", "degree": "3,4", "assumption": "even-degree", "c1": "0", "c2": "x1*x2"},
    "totaro48": {"ambient": "4", "degree": "48", "assumption": "even-degree", "c1": "x1", "c2": "x1^2"},
    "trento": {"ambient": "4", "degree": "125", "assumption": "naive", "c1": "x1", "c2": "x1^2"},
}


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def jint(x: int) -> str:
    return str(int(x))


def _matrix_json(m: IntegerMatrix) -> list[list[str]]:
    return [[jint(e) for e in row] for row in m.entries]


def _matrix_text(m: IntegerMatrix) -> str:
    if m.rows == 0:
        return "(empty)"
    widths = [max(len(str(m.entry(i, j))) for i in range(m.rows)) for j in range(m.cols)]
    return "\n".join(
        "[ " + "  ".join(str(m.entry(i, j)).rjust(widths[j]) for j in range(m.cols)) + " ]"
        for i in range(m.rows)
    )


def _parse_matrix_literal(text: str) -> IntegerMatrix:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"matrix literal is not valid JSON: {exc}") from exc
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError("matrix literal must be a JSON array of arrays")
    return IntegerMatrix(rows)


def _parse_ambient(text: str) -> AmbientSpace:
    return AmbientSpace(tuple(int(p) for p in text.split(",")))


def _parse_assumption(text: str) -> PushforwardAssumption:
    if text == "naive":
        return PushforwardAssumption.naive()
    if text == "even-degree":
        return PushforwardAssumption.even_degree()
    if text == "nori":
        return PushforwardAssumption.nori()
    if text.startswith("custom:"):
        path = text.split(":", 1)[1]
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        ambient = _parse_ambient(payload["ambient"])
        degree = int(payload["degree"])
        gens = tuple(parse_class(ambient, g, degree=degree) for g in payload["generators"])
        return PushforwardAssumption.custom(gens, Direction(payload["direction"]), degree)
    raise ValueError(f"unknown assumption {text!r}; use naive|even-degree|nori|custom:<file>")


def _apply_preset(args: argparse.Namespace, parser: argparse.ArgumentParser):
    name = getattr(args, "example", None)
    if not name:
        return
    if name.startswith("nori:"):
        preset = {"ambient": "4", "degree": name.split(":", 1)[1], "assumption": "nori", "c1": "x1", "c2": "x1^2"}
    elif name in PRESETS:
        preset = PRESETS[name]
    else:
        parser.error(f"unknown example {name!r}; use bidegree34|totaro48|trento|nori:<d>")
        return
    for key, value in preset.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _model_from_args(args) -> ComplementModel:
    ambient = _parse_ambient(args.ambient)
    degrees = tuple(int(p) for p in args.degree.split(","))
    return ComplementModel(ambient, degrees)


def _group_json(group: AbelianPresentation) -> dict:
    return {
        "generators": list(group.generator_names),
        "relations": _matrix_json(group.relations),
        "invariant_factors": [jint(f) for f in group.invariant_factors()],
        "group": group.describe(),
    }


def _element_json(element) -> dict:
    return {
        "coords": [jint(c) for c in element.canonical()],
        "group": element.group.describe(),
        "is_zero": element.is_zero(),
    }


def _cmd_snf(args) -> dict | str:
    mat = _parse_matrix_literal(args.matrix)
    dec = smith_normal_form(mat)
    if args.json:
        return {
            "diagonal": [jint(d) for d in dec.diagonal],
            "s": _matrix_json(dec.s),
            "u": _matrix_json(dec.u),
            "v": _matrix_json(dec.v),
        }
    return "\n".join(
        [
            "diagonal: " + " ".join(str(d) for d in dec.diagonal),
            "s =", _matrix_text(dec.s),
            "u =", _matrix_text(dec.u),
            "v =", _matrix_text(dec.v),
        ]
    )


def _cmd_group(args) -> dict | str:
    if args.presentation:
        group = AbelianPresentation.from_json(json.loads(args.presentation))
    elif args.relations:
        relations = _parse_matrix_literal(args.relations)
        if args.generators:
            names = [s.strip() for s in args.generators.split(",")]
        else:
            names = [f"g{i + 1}" for i in range(relations.cols)]
        group = AbelianPresentation(names, relations)
    else:
        raise ValueError("group needs --relations or --presentation")
    if args.json:
        return _group_json(group)
    return f"invariant factors: {list(group.invariant_factors())}\ngroup: {group.describe()}"


def _cmd_cup(args) -> dict | str:
    ambient = _parse_ambient(args.ambient)
    result = cup(parse_class(ambient, args.a), parse_class(ambient, args.b))
    if args.json:
        return {"degree": jint(result.degree), "result": class_str(result)}
    return class_str(result)


def _cmd_sq2(args) -> dict | str:
    ambient = _parse_ambient(args.ambient)
    result = sq2(parse_class(ambient, args.cls))
    if args.json:
        return {"degree": jint(result.degree), "result": class_str(result)}
    return class_str(result)


def _cmd_complement(args) -> dict | str:
    model = _model_from_args(args)
    assumption = _parse_assumption(args.assumption)
    group, cert = complement_group(model, args.j, assumption)
    if args.json:
        out = _group_json(group)
        out["certificate"] = cert.as_dict()
        return out
    lines = [
        f"generators: {', '.join(group.generator_names) or '(none)'}",
        f"relations: {group.relations.to_lists()}",
        f"group: {group.describe()}",
        f"certificate: degree {cert.degree} {cert.status.value}" + (f" ({cert.note})" if cert.note else ""),
    ]
    return "\n".join(lines)


def _cmd_closed_form(args) -> dict | str:
    report = closed_form_check(args.d1, args.d2)
    if args.json:
        return {
            "d1": jint(report.d1),
            "d2": jint(report.d2),
            "g": jint(report.g),
            "m": jint(report.m),
            "n": jint(report.n),
            "ch1_factors": [jint(f) for f in report.ch1_factors],
            "ch1_expected": [jint(f) for f in report.ch1_expected],
            "ch2_factors": [jint(f) for f in report.ch2_factors],
            "ch2_expected": [jint(f) for f in report.ch2_expected],
            "xi_tau_image": [jint(c) for c in report.xi_tau_image],
            "ok": report.ok,
        }
    return "\n".join(
        [
            f"(d1, d2) = ({report.d1}, {report.d2}), g = {report.g}, bezout (m, n) = ({report.m}, {report.n})",
            f"CH^1 factors: {list(report.ch1_factors)} (expected {list(report.ch1_expected)})",
            f"CH^2 factors: {list(report.ch2_factors)} (expected {list(report.ch2_expected)})",
            f"image of x1*x2 in diagonal basis: {report.xi_tau_image}",
            f"ok: {report.ok}",
        ]
    )


def _cmd_obstruct(args) -> dict | str:
    model = _model_from_args(args)
    assumption = _parse_assumption(args.assumption)
    pair = ChernPair(
        parse_class(model.ambient, args.c1, degree=1),
        parse_class(model.ambient, args.c2, degree=2),
    )
    report = decide(model, pair, assumption)
    if args.json:
        return {
            "ambient": args.ambient,
            "degree": args.degree,
            "c1": class_str(pair.c1),
            "c2": class_str(pair.c2),
            "assumption": assumption.label(),
            "theta": class_str(report.theta_on_y),
            "theta_image": _element_json(report.theta_image),
            "verdict": report.verdict.value,
            "certificates": [
                report.justification["certificates"]["naive"],
                report.justification["certificates"]["assumption"],
            ],
            "justification": report.justification,
        }
    jst = report.justification
    return "\n".join(
        [
            f"verdict: {report.verdict.value}",
            f"theta on ambient: {class_str(report.theta_on_y)}",
            f"theta image: {report.theta_image.canonical()} in {report.theta_image.group.describe()}",
            f"assumption: {jst['assumption']} ({jst['direction']})",
            f"basis: {jst['verdict_basis']}",
            f"note: {jst['unverified_hypotheses']}",
        ]
    )


def _cmd_classify(args) -> dict | str | list:
    model = _model_from_args(args)
    assumption = _parse_assumption(args.assumption)
    rows = classify_all(model, assumption)
    if args.json:
        return [{"c1": r.c1, "c2": r.c2, "verdict": r.verdict.value} for r in rows]
    lines = ["c1\tc2\tverdict"]
    lines.extend(f"{r.c1}\t{r.c2}\t{r.verdict.value}" for r in rows)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chow-obstruct",
        description="Exact Chow-group quotients of hypersurface complements and the "
        "mod-2 algebraizability obstruction for rank-2 bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="canonical JSON output")
        p.set_defaults(func=func)
        return p

    p = add("snf", _cmd_snf, "Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True, help='JSON rows, e.g. "[[4,3],[0,4]]" (string entries allowed)')

    p = add("group", _cmd_group, "invariant factors of a presented abelian group")
    p.add_argument("--relations", help="JSON rows of the relation matrix")
    p.add_argument("--generators", help="comma-separated generator names")
    p.add_argument("--presentation", help='JSON {"generators": [...], "relations": [[...]]}')

    p = add("cup", _cmd_cup, "cup product of two classes")
    p.add_argument("--ambient", required=True, help='factor dimensions, e.g. "1,3"')
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("sq2", _cmd_sq2, "squaring operation on a mod-2 class")
    p.add_argument("--ambient", required=True)
    p.add_argument("--class", dest="cls", required=True)

    p = add("complement", _cmd_complement, "degree-j quotient group of a complement")
    p.add_argument("--ambient", required=True)
    p.add_argument("--degree", required=True, help='hypersurface multidegree, e.g. "3,4"')
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--assumption", default="naive")

    p = add("closed-form", _cmd_closed_form, "check degree-1/2 closed forms on P^1 x P^3")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)

    p = add("obstruct", _cmd_obstruct, "evaluate theta and decide algebraizability")
    p.add_argument("--ambient")
    p.add_argument("--degree")
    p.add_argument("--c1")
    p.add_argument("--c2")
    p.add_argument("--assumption")
    p.add_argument("--example", help="bidegree34|totaro48|trento|nori:<d>")

    p = add("classify", _cmd_classify, "verdict table over CH^1 x CH^2")
    p.add_argument("--ambient")
    p.add_argument("--degree")
    p.add_argument("--assumption")
    p.add_argument("--example", help="bidegree34|totaro48|trento|nori:<d>")

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_preset(args, parser)
    for required in ("ambient", "degree", "assumption", "c1", "c2"):
        if hasattr(args, required) and getattr(args, required) is None:
            parser.error(f"--{required} is required (directly or via --example)")
    try:
        result = args.func(args)
    except DOMAIN_ERRORS as exc:
        if args.json:
            sys.stdout.write(dump_json({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        else:
            sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    if args.json:
        sys.stdout.write(dump_json(result))
    else:
        sys.stdout.write(str(result) + "\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
