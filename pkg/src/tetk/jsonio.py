"""JSON formats for groups, actions, cochains, extensions, representations,
class functions, and series.

Formats:
  group.json      {"order": n, "table": [[int]]} or {"kind": ..., "n": int}
  action.json     {"group": <group or path>, "points": k, "act": [[int]]}
  cochain.json    {"degree": p, "modulus": m, "groupoid": <ref>,
                   "entries": [exponents in lexicographic nerve order]}
                  or the action-groupoid keyed form
                   {"entries": {"x,g1,...,gp": exp}, "sparse": bool}
  extension.json  {"base": <group ref>, "modulus": m, "theta": <cochain ref>}
  rep.json        {"base": <group ref>, "level": M, "dimension": d,
                   "matrices": [[[entry]]]} with entry = rational or a
                  length-M coefficient vector
  classfunction   {"level": M, "values": {"<class rep>": [coeffs]}}
  series.json     {"denominator": N, "coefficients": {"j": <classfunction>}}

A <ref> is either an inline object or a path string, resolved relative to
the referring file.  Rationals are JSON ints or "p/q" strings.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

import numpy as np

from tetk.cochain import Cochain
from tetk.cyclotomic import CycSum
from tetk.extension import CentralExtension, central_extension
from tetk.groupoid import action_groupoid, pair_from_arrow
from tetk.groups import (BUILTIN_KINDS, FiniteGroup, GroupAction,
                         builtin_group, group_from_table, trivial_action)
from tetk.nerve import nerve
from tetk.reps import MatrixRep
from tetk.tate import ClassFunction, TateSeries


class ParseError(ValueError):
    """Malformed or inconsistent input data."""


def _resolve(ref, base_dir):
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base_dir or ".", ref)
        try:
            with open(path) as fh:
                return json.load(fh), os.path.dirname(path)
        except FileNotFoundError:
            raise ParseError(f"referenced file not found: {path}")
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}")
    return ref, base_dir


def load_json_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}")


# -- groups and actions ------------------------------------------------------


def load_group(ref, base_dir=None) -> FiniteGroup:
    obj, base_dir = _resolve(ref, base_dir)
    if not isinstance(obj, dict):
        raise ParseError("group must be an object")
    if "kind" in obj:
        kind = obj["kind"]
        if kind not in BUILTIN_KINDS:
            raise ParseError(f"unknown group kind {kind!r}")
        return builtin_group(kind, obj.get("n"))
    if "table" not in obj:
        raise ParseError("group needs a 'table' or a 'kind'")
    table = obj["table"]
    order = obj.get("order", len(table))
    if len(table) != order:
        raise ParseError(f"table has {len(table)} rows, declared order {order}")
    for i, row in enumerate(table):
        if len(row) != order:
            raise ParseError(f"table row {i} has {len(row)} entries, expected {order}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < order:
                raise ParseError(f"table entry at row {i}, column {j} is invalid")
    return group_from_table(table, label=obj.get("label"))


def dump_group(group: FiniteGroup):
    return {"order": group.order, "table": group.mul.tolist(),
            **({"label": group.label} if group.label else {})}


def load_action(ref, base_dir=None) -> GroupAction:
    obj, base_dir = _resolve(ref, base_dir)
    if not isinstance(obj, dict) or "group" not in obj:
        raise ParseError("action needs a 'group'")
    group = load_group(obj["group"], base_dir)
    act = obj.get("act")
    points = obj.get("points", len(act) if act is not None else None)
    if act is None:
        raise ParseError("action needs an 'act' table")
    if len(act) != points:
        raise ParseError(f"act has {len(act)} rows, declared points {points}")
    for i, row in enumerate(act):
        if len(row) != group.order:
            raise ParseError(
                f"act row {i} has {len(row)} entries, expected {group.order}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < points:
                raise ParseError(f"act entry at row {i}, column {j} is invalid")
    return GroupAction(group, np.array(act, dtype=np.int32), label=obj.get("label"))


def dump_action(action: GroupAction):
    return {"group": dump_group(action.group), "points": action.points,
            "act": action.act.tolist(),
            **({"label": action.label} if action.label else {})}


def load_groupoid_ref(ref, base_dir=None):
    """A groupoid reference: {"action": <action ref>} or {"group": <group ref>}
    (the latter meaning the one-object delooping)."""
    obj, base_dir = _resolve(ref, base_dir)
    if not isinstance(obj, dict):
        raise ParseError("groupoid reference must be an object")
    if "action" in obj:
        return action_groupoid(load_action(obj["action"], base_dir))
    if "group" in obj or "kind" in obj or "table" in obj:
        inner = obj.get("group", obj)
        return action_groupoid(trivial_action(load_group(inner, base_dir)))
    raise ParseError("groupoid reference needs an 'action' or a 'group'")


# -- cochains ----------------------------------------------------------------


def load_cochain(ref, base_dir=None, groupoid=None) -> Cochain:
    obj, base_dir = _resolve(ref, base_dir)
    if not isinstance(obj, dict):
        raise ParseError("cochain must be an object")
    for key in ("degree", "modulus"):
        if key not in obj:
            raise ParseError(f"cochain needs '{key}'")
    degree, modulus = int(obj["degree"]), int(obj["modulus"])
    if groupoid is None:
        if "groupoid" not in obj:
            raise ParseError("cochain needs a 'groupoid' reference "
                             "(none provided by context)")
        groupoid = load_groupoid_ref(obj["groupoid"], base_dir)
    entries = obj.get("entries")
    if entries is None:
        raise ParseError("cochain needs 'entries'")
    count = nerve(groupoid).count(degree)
    if isinstance(entries, dict):
        table = _keyed_entries(groupoid, degree, modulus, entries,
                               sparse=bool(obj.get("sparse", False)))
    else:
        if len(entries) != count:
            raise ParseError(
                f"cochain has {len(entries)} entries, degree-{degree} nerve "
                f"has {count}")
        table = np.array([int(v) for v in entries], dtype=np.int64)
    return Cochain(groupoid, degree, modulus, table)


def _keyed_entries(groupoid, degree, modulus, entries, sparse):
    action = getattr(groupoid, "action", None)
    if action is None:
        raise ParseError("keyed cochain entries need an action groupoid")
    n = action.group.order
    nc = nerve(groupoid)
    count = nc.count(degree)
    table = np.full(count, -1, dtype=np.int64)
    for key, value in entries.items():
        parts = [int(s) for s in str(key).split(",")]
        if len(parts) == degree:           # point actions may omit x
            parts = [0] + parts
        if len(parts) != degree + 1:
            raise ParseError(f"entry key {key!r} needs x plus {degree} elements")
        x, elems = parts[0], parts[1:]
        if not 0 <= x < action.points:
            raise ParseError(f"entry key {key!r}: point {x} out of range")
        arrows = []
        for g in elems:
            if not 0 <= g < n:
                raise ParseError(f"entry key {key!r}: element {g} out of range")
            arrows.append(x * n + g)
            x = int(action.act[x, g])
        table[nc.rank(arrows)] = int(value)
    if sparse:
        table[table < 0] = 0
    elif (table < 0).any():
        missing = int(np.flatnonzero(table < 0)[0])
        tup = nc.tuples(degree)[missing]
        raise ParseError(
            f"cochain entries missing tuple {tuple(int(a) for a in tup)}; "
            "pass \"sparse\": true to default them to 0")
    return table


def dump_cochain(c: Cochain, keyed=False, include_groupoid=True):
    out = {"degree": c.degree, "modulus": c.modulus}
    if include_groupoid:
        action = getattr(c.groupoid, "action", None)
        if action is not None:
            if action.points == 1 and action.act.shape == (1, action.group.order):
                out["groupoid"] = {"group": dump_group(action.group)}
            else:
                out["groupoid"] = {"action": dump_action(action)}
    if keyed:
        action = c.groupoid.action
        n = action.group.order
        tuples = nerve(c.groupoid).tuples(c.degree)
        entries = {}
        for i in range(tuples.shape[0]):
            arrows = [int(a) for a in tuples[i]]
            x = arrows[0] // n
            elems = [a % n for a in arrows]
            key = ",".join(str(v) for v in [x] + elems)
            entries[key] = int(c.table[i])
        out["entries"] = entries
    else:
        out["entries"] = [int(v) for v in c.table]
    return out


# -- exact scalars -----------------------------------------------------------


def _fraction_to_json(q: Fraction):
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fraction_from_json(v):
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise ParseError(f"expected an integer or 'p/q' string, got {v!r}")


def dump_cycsum(value: CycSum, level=None):
    if level is None:
        level = value.level
    if level % value.level:
        raise ValueError("declared level must be a multiple of the value's level")
    coeffs = value._at_level(level)
    return [_fraction_to_json(c) for c in coeffs]


def load_cycsum(coeffs, level) -> CycSum:
    if len(coeffs) != level:
        raise ParseError(f"coefficient vector has length {len(coeffs)}, "
                         f"declared level {level}")
    return CycSum(level, [_fraction_from_json(c) for c in coeffs])


# -- class functions and series ----------------------------------------------


def dump_classfunction(cf: ClassFunction, level=None):
    from tetk.tate import _classes

    classes, _ = _classes(cf.group)
    if level is None:
        level = 1
        from math import lcm
        for v in cf.values:
            level = lcm(level, v.level)
    return {"level": level,
            "values": {str(cls[0]): dump_cycsum(v, level)
                       for cls, v in zip(classes, cf.values)}}


def load_classfunction(obj, group) -> ClassFunction:
    from tetk.tate import _classes

    obj, _ = _resolve(obj, None)
    level = int(obj.get("level", 1))
    raw = obj.get("values", {})
    classes, _ = _classes(group)
    values = []
    for cls in classes:
        key = str(cls[0])
        if key not in raw:
            raise ParseError(f"class function missing class representative {key}")
        values.append(load_cycsum(raw[key], level))
    return ClassFunction(group, values)


def dump_series(series: TateSeries):
    return {"denominator": series.denominator,
            "coefficients": {str(j): dump_classfunction(series.coefficients[j])
                             for j in series.support()}}


def load_series(obj, group) -> TateSeries:
    obj, _ = _resolve(obj, None)
    if "denominator" not in obj:
        raise ParseError("series needs a 'denominator'")
    coeffs = {}
    for key, sub in obj.get("coefficients", {}).items():
        coeffs[int(key)] = load_classfunction(sub, group)
    return TateSeries(group, int(obj["denominator"]), coeffs)


# -- extensions and representations ------------------------------------------


def load_extension(ref, base_dir=None) -> CentralExtension:
    obj, base_dir = _resolve(ref, base_dir)
    for key in ("base", "modulus", "theta"):
        if key not in obj:
            raise ParseError(f"extension needs '{key}'")
    base = load_group(obj["base"], base_dir)
    modulus = int(obj["modulus"])
    theta_obj, theta_dir = _resolve(obj["theta"], base_dir)
    default_gpd = None
    if isinstance(theta_obj, dict) and "groupoid" not in theta_obj:
        default_gpd = action_groupoid(trivial_action(base))
    theta = load_cochain(theta_obj, theta_dir, groupoid=default_gpd)
    if theta.modulus != modulus:
        raise ParseError("extension modulus disagrees with theta's")
    return central_extension(base, theta)


def dump_extension(ext: CentralExtension):
    return {"base": dump_group(ext.base), "modulus": ext.modulus,
            "theta": dump_cochain(ext.theta)}


def load_rep(ref, base_dir=None):
    obj, base_dir = _resolve(ref, base_dir)
    for key in ("base", "level", "matrices"):
        if key not in obj:
            raise ParseError(f"rep needs '{key}'")
    base = load_group(obj["base"], base_dir)
    level = int(obj["level"])
    mats = obj["matrices"]
    if len(mats) != base.order:
        raise ParseError(f"rep has {len(mats)} matrices, group order is {base.order}")

    def entry(v):
        if isinstance(v, list):
            return load_cycsum(v, level)
        return CycSum.from_rational(_fraction_from_json(v))

    matrices = [[[entry(v) for v in row] for row in m] for m in mats]
    dim = len(matrices[0])
    return MatrixRep(base, [dim], matrices)


def dump_rep(rep: MatrixRep, level):
    if not isinstance(rep.base, FiniteGroup):
        raise ValueError("only group representations serialize to rep.json")
    return {"base": dump_group(rep.base), "level": level,
            "dimension": rep.dims[0],
            "matrices": [[[dump_cycsum(e, level) for e in row] for row in m]
                         for m in rep.matrices]}


def approx_complex(value: CycSum, digits=12):
    z = value.to_complex()
    return {"re": round(z.real, digits), "im": round(z.imag, digits)}
