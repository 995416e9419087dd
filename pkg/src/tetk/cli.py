"""The tetk command line.

Subcommands: group show, cocycle check, cocycle normalize, cohomology,
transgress, extension build, rep verify, tate decompose, tate check, suite.

Exit codes: 0 all checks pass, 1 a mathematical check failed (witness in the
report), 2 input or parse error, 3 resource budget exceeded.  Reports are
emitted as sorted JSON (byte-identical for identical config and seed) or as
markdown mirroring the usual notation (theta, alpha, g~, zeta).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from tetk import jsonio
from tetk.cochain import is_cocycle, is_normalized, normalize_3cocycle
from tetk.cohomology import cohomology_group, group_order
from tetk.groups import ValidationError, conjugacy_classes
from tetk.jsonio import ParseError
from tetk.nerve import BudgetError
from tetk.reps import verify_twisted_rep
from tetk.tate import moonshine_transform_check, q_graded_projection, rotation_check
from tetk.transgression import restrict_to_centralizer, transgress3

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    subcommand: str
    args: argparse.Namespace
    budget: int | None = None
    seed: int = 0
    output: str = "json"
    out_path: str | None = None


# markdown key names in the usual notation
_SYMBOLS = {
    "theta": "θ", "theta_full": "θ (full inertia)", "theta_is_cocycle":
    "θ is a cocycle", "alpha": "α", "lift": "g̃ = (g, ζ-exponent)",
    "lift_orders": "|g̃| per base element", "witness_beta": "witness β",
    "modulus": "modulus m (values in μ_m)", "denominator": "denominator N",
    "rotation_check": "rotation condition (ζ_N^j grading)",
    "moonshine_transform_check": "moonshine transform F(g, g̃h̃; q) = F(g, h̃; ζq)",
}


def _markdown(obj, depth=1):
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            name = _SYMBOLS.get(key, key)
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{'#' * min(depth + 1, 5)} {name}")
                lines.append(_markdown(value, depth + 1))
            else:
                lines.append(f"- **{name}**: {json.dumps(value, sort_keys=True)}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                lines.append(_markdown(value, depth + 1))
            else:
                lines.append(f"- {json.dumps(value, sort_keys=True)}")
    else:
        lines.append(str(obj))
    return "\n".join(lines)


def emit(report, config: RunConfig):
    if config.output == "markdown":
        text = f"# tetk {config.subcommand}\n" + _markdown(report) + "\n"
    else:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_group_arg(args):
    if getattr(args, "name", None):
        from tetk.fixtures import fixture_groups

        groups = fixture_groups()
        if args.name not in groups:
            raise ParseError(f"unknown fixture group {args.name!r}; "
                             f"available: {', '.join(sorted(groups))}")
        return groups[args.name]
    if getattr(args, "input", None):
        return jsonio.load_group(args.input)
    raise ParseError("pass --in group.json or --name <fixture>")


def cmd_group_show(config):
    group = _load_group_arg(config.args)
    classes, _ = conjugacy_classes(group)
    report = {
        "order": group.order,
        "label": group.label,
        "conjugacy_classes": [{"representative": cls[0], "size": len(cls),
                               "elements": cls} for cls in classes],
        "element_orders": [group.element_order(g) for g in range(group.order)],
        "abelian": bool(all(group.mul[g, h] == group.mul[h, g]
                            for g in range(group.order)
                            for h in range(group.order))),
    }
    emit(report, config)
    return EXIT_OK


def _apply_modulus_override(cochain, config):
    m = getattr(config.args, "modulus", None)
    if m is None:
        return cochain
    from tetk.cochain import embed_modulus

    return embed_modulus(cochain, m)


def cmd_cocycle_check(config):
    cochain = _apply_modulus_override(jsonio.load_cochain(config.args.input), config)
    chk = is_cocycle(cochain)
    report = {
        "degree": cochain.degree,
        "modulus": cochain.modulus,
        "is_cocycle": bool(chk),
        "normalized": is_normalized(cochain) if cochain.degree >= 1 else True,
    }
    if not chk:
        report["witness"] = {"tuple": list(chk.witness), "detail": chk.detail}
    emit(report, config)
    return EXIT_OK if chk else EXIT_CHECK_FAILED


def cmd_cocycle_normalize(config):
    cochain = _apply_modulus_override(jsonio.load_cochain(config.args.input), config)
    chk = is_cocycle(cochain)
    if not chk:
        emit({"error": f"input is not a cocycle: {chk.detail}"}, config)
        return EXIT_CHECK_FAILED
    normalized, witness = normalize_3cocycle(cochain)
    report = {
        "normalized": jsonio.dump_cochain(normalized, include_groupoid=False),
        "witness_beta": jsonio.dump_cochain(witness, include_groupoid=False),
        "already_normalized": witness.is_zero(),
    }
    emit(report, config)
    return EXIT_OK


def cmd_cohomology(config):
    args = config.args
    if args.modulus is None:
        raise ParseError("cohomology needs --modulus")
    obj = jsonio.load_json_file(args.input)
    if "act" in obj or "points" in obj:
        gpd = jsonio.load_groupoid_ref({"action": obj})
    else:
        gpd = jsonio.load_groupoid_ref({"group": obj})
    divisors = cohomology_group(gpd, args.degree, args.modulus,
                                budget=config.budget)
    report = {
        "degree": args.degree,
        "modulus": args.modulus,
        "elementary_divisors": divisors,
        "order": group_order(divisors),
        "group": " x ".join(f"Z/{d}" for d in divisors) if divisors else "trivial",
    }
    emit(report, config)
    return EXIT_OK


def cmd_transgress(config):
    from tetk.groupoid import action_groupoid

    args = config.args
    action = jsonio.load_action(args.action)
    gpd = action_groupoid(action)
    alpha = _apply_modulus_override(jsonio.load_cochain(args.alpha, groupoid=gpd),
                                    config)
    normalized_input = is_normalized(alpha)
    if not normalized_input:
        alpha, _ = normalize_3cocycle(alpha)
    res = transgress3(alpha)
    per_class = {}
    for comp in res.components:
        theta_g = res.restrictions[comp.rep]
        per_class[str(comp.rep)] = {
            "centralizer_order": comp.centralizer.order,
            "fixed_points": comp.fixed_points,
            "theta": jsonio.dump_cochain(theta_g, include_groupoid=False),
        }
    report = {
        "modulus": alpha.modulus,
        "input_was_normalized": normalized_input,
        "inertia": {"objects": res.inertia.n_objects,
                    "arrows": res.inertia.n_arrows},
        "theta_full": jsonio.dump_cochain(res.theta, include_groupoid=False),
        "theta_is_cocycle": True,
        "classes": per_class,
    }
    emit(report, config)
    return EXIT_OK


def cmd_extension_build(config):
    ext = jsonio.load_extension(config.args.input)
    classes, _ = conjugacy_classes(ext)
    report = {
        "base_order": ext.base.order,
        "modulus": ext.modulus,
        "order": ext.order,
        "conjugacy_class_count": len(classes),
        "center_size": len([g for g in range(ext.order)
                            if all(ext.mul[g, h] == ext.mul[h, g]
                                   for h in range(ext.order))]),
        "lift_orders": {str(g): ext.element_order(ext.lift(g))
                        for g in range(ext.base.order)},
    }
    emit(report, config)
    return EXIT_OK


def cmd_rep_verify(config):
    args = config.args
    rep = jsonio.load_rep(args.rep)
    theta_obj = jsonio.load_json_file(args.theta) if isinstance(args.theta, str) else args.theta
    default_gpd = None
    if isinstance(theta_obj, dict) and "groupoid" not in theta_obj:
        from tetk.groupoid import action_groupoid
        from tetk.groups import trivial_action

        default_gpd = action_groupoid(trivial_action(rep.base))
    theta = jsonio.load_cochain(theta_obj, groupoid=default_gpd)
    chk = verify_twisted_rep(rep, theta)
    report = {"dimension": rep.dims[0], "modulus": theta.modulus,
              "twisted_law_holds": bool(chk)}
    if not chk:
        report["witness"] = {"pair": list(chk.witness) if chk.witness is not None else None,
                             "detail": chk.detail}
    emit(report, config)
    return EXIT_OK if chk else EXIT_CHECK_FAILED


def _parse_lift(ext, text):
    parts = [int(v) for v in str(text).split(",")]
    if len(parts) != 2:
        raise ParseError("lift must be 'g,z' (base element, mu_m exponent)")
    return ext.index(parts[0], parts[1])


def cmd_tate_decompose(config):
    args = config.args
    ext = jsonio.load_extension(args.extension)
    if args.character:
        chi = jsonio.load_classfunction(jsonio.load_json_file(args.character), ext)
    else:
        from tetk.reps import twisted_regular_rep

        _, chi = twisted_regular_rep(ext.base, ext.theta)
    xi = _parse_lift(ext, args.lift)
    series = q_graded_projection(chi, xi)
    report = {
        "denominator": series.denominator,
        "lift": list(ext.pair(xi)),
        "series": jsonio.dump_series(series),
        "approx": {str(j): [jsonio.approx_complex(v)
                            for v in series.coefficients[j].values]
                   for j in series.support()},
        "rotation_check": True,
    }
    emit(report, config)
    return EXIT_OK


def cmd_tate_check(config):
    args = config.args
    ext = jsonio.load_extension(args.extension)
    series = jsonio.load_series(jsonio.load_json_file(args.series), ext)
    xi = _parse_lift(ext, args.lift)
    rot = rotation_check(series, xi)
    moon = moonshine_transform_check(series, xi)
    report = {
        "denominator": series.denominator,
        "lift": list(ext.pair(xi)),
        "rotation_check": bool(rot),
        "moonshine_transform_check": bool(moon),
        "checks_agree": bool(rot) == bool(moon),
    }
    if not rot:
        report["witness"] = {"at": list(rot.witness) if isinstance(rot.witness, tuple)
                             else rot.witness, "detail": rot.detail}
    emit(report, config)
    return EXIT_OK if (rot and moon) else EXIT_CHECK_FAILED


def cmd_suite(config):
    from tetk.acceptance import run_all

    lines = []
    passed, failed = run_all(seed=config.seed, out=lines.append)
    report = {"seed": config.seed, "passed": passed, "failed": failed,
              "criteria": lines}
    if config.output == "json":
        emit(report, config)
    else:
        for line in lines:
            print(line)
        print(f"{passed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["json", "markdown"], default="json")
    common.add_argument("--out", dest="out_path", default=None,
                        help="write the report to a file instead of stdout")
    common.add_argument("--budget", type=int, default=None,
                        help="nerve tuple budget (default 10^6; env TETK_BUDGET)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--modulus", type=int, default=None,
                        help="coefficient modulus (cohomology) or an embedding "
                             "override for loaded cochains (a multiple of the "
                             "stored modulus)")

    parser = argparse.ArgumentParser(
        prog="tetk",
        description="Exact groupoid cochain calculus: transgression, central "
                    "extensions, twisted representations, Tate series checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group utilities")
    gsub = p.add_subparsers(dest="subcommand", required=True)
    g = gsub.add_parser("show", parents=[common])
    g.add_argument("--in", dest="input", default=None)
    g.add_argument("--name", default=None, help="fixture group name")
    g.set_defaults(handler=cmd_group_show)

    p = sub.add_parser("cocycle", help="cocycle checks and normalization")
    csub = p.add_subparsers(dest="subcommand", required=True)
    c = csub.add_parser("check", parents=[common])
    c.add_argument("--in", dest="input", required=True)
    c.set_defaults(handler=cmd_cocycle_check)
    c = csub.add_parser("normalize", parents=[common])
    c.add_argument("--in", dest="input", required=True)
    c.set_defaults(handler=cmd_cocycle_normalize)

    p = sub.add_parser("cohomology", parents=[common], help="H^p(groupoid; mu_m)")
    p.add_argument("--in", dest="input", required=True,
                   help="group.json or action.json")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=cmd_cohomology)

    p = sub.add_parser("transgress", parents=[common],
                       help="3-cocycle on X//G to 2-cocycle on the inertia groupoid")
    p.add_argument("--alpha", required=True)
    p.add_argument("--action", required=True)
    p.set_defaults(handler=cmd_transgress)

    p = sub.add_parser("extension", help="central extensions")
    esub = p.add_subparsers(dest="subcommand", required=True)
    e = esub.add_parser("build", parents=[common])
    e.add_argument("--in", dest="input", required=True)
    e.set_defaults(handler=cmd_extension_build)

    p = sub.add_parser("rep", help="twisted representations")
    rsub = p.add_subparsers(dest="subcommand", required=True)
    r = rsub.add_parser("verify", parents=[common])
    r.add_argument("--rep", required=True)
    r.add_argument("--theta", required=True)
    r.set_defaults(handler=cmd_rep_verify)

    p = sub.add_parser("tate", help="graded series and rotation checks")
    tsub = p.add_subparsers(dest="subcommand", required=True)
    t = tsub.add_parser("decompose", parents=[common])
    t.add_argument("--extension", required=True)
    t.add_argument("--character", default=None,
                   help="classfunction.json (default: twisted regular character)")
    t.add_argument("--lift", required=True, help="'g,z'")
    t.set_defaults(handler=cmd_tate_decompose)
    t = tsub.add_parser("check", parents=[common])
    t.add_argument("--series", required=True)
    t.add_argument("--extension", required=True)
    t.add_argument("--lift", required=True, help="'g,z'")
    t.set_defaults(handler=cmd_tate_check)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    p.set_defaults(handler=cmd_suite)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get("TETK_BUDGET"):
        budget = int(os.environ["TETK_BUDGET"])
    config = RunConfig(
        subcommand=" ".join(v for v in (args.command, getattr(args, "subcommand", None)) if v),
        args=args, budget=budget, seed=args.seed,
        output=args.output, out_path=args.out_path)
    try:
        return args.handler(config)
    except (ParseError, ValidationError, ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except BudgetError as e:
        print(f"resource budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
