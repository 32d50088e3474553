"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 a Witt hypothesis is violated, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import jsonschema

from .errors import (BudgetExceeded, FormError, HypothesisError,
                     PreconditionError)
from .fields import (AdditiveSubgroup, Field, lambda_max, lambda_min,
                     lambda_table_row, named_field)
from .forms import FormParams, classify, euclidean_form, hyperbolic_form
from .geometry import FormedSpace, building, is_isotropic
from .linalg import enumerate_subspaces
from .verify import (CHECK_NAMES, DEFAULT_BUDGET, classical_label,
                     enumerate_isometries, group_order_formula,
                     orbit_partition, run_checks, selection_fields)
from .witt import ExtensionProblem, relative_witt_extend, witt_extend

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3, 4

_ELT = {"oneOf": [{"type": "integer"}, {"type": "string"},
                  {"type": "array", "items": {"type": "integer"}}]}
_VECS = {"type": "array", "items": {"type": "array", "items": _ELT}}
_FIELD = {"oneOf": [
    {"type": "string"},
    {"type": "object", "required": ["kind"],
     "properties": {"kind": {"enum": ["prime", "extension", "rationals"]},
                    "p": {"type": "integer"}, "k": {"type": "integer"},
                    "modulus": {"type": "array", "items": {"type": "integer"}},
                    "involution": {"enum": ["id", "frobenius", "frob"]}}},
]}
_LAMBDA = {"oneOf": [
    {"type": "string"},
    {"type": "object", "properties": {"basis": {"type": "array"}, "marker": {"enum": ["zero", "all"]}}},
]}
FORM_SCHEMA = {
    "type": "object",
    "required": ["params", "matrix"],
    "properties": {
        "params": {"type": "object", "required": ["field"],
                   "properties": {"field": _FIELD, "epsilon": _ELT, "lambda": _LAMBDA}},
        "matrix": _VECS,
        "subspaces": {"type": "object", "additionalProperties": _VECS},
    },
}
PROBLEM_SCHEMA = {
    "type": "object",
    "required": ["space", "U", "images"],
    "properties": {"space": FORM_SCHEMA, "U": _VECS, "W": _VECS, "images": _VECS, "fix": _VECS},
}


class InputError(Exception):
    pass


def _load(raw):
    """JSON from a path, inline text, or '-' for stdin."""
    if raw is None:
        raise InputError("missing --input")
    if raw == "-":
        text = sys.stdin.read()
    elif raw.lstrip().startswith(("{", "[")):
        text = raw
    else:
        path = Path(raw)
        if not path.exists():
            raise InputError(f"no such file: {raw}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _validate(data, schema):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        raise InputError(f"schema: {exc.message}") from None


def _field(args):
    spec = args.field
    if spec is None:
        raise InputError("missing --field")
    if spec.lstrip().startswith("{"):
        d = json.loads(spec)
        if args.sigma:
            d["involution"] = args.sigma
        return Field.from_json(d)
    return named_field(spec, args.sigma or "id")


def _element(F, text):
    try:
        val = json.loads(text)
    except json.JSONDecodeError:
        val = text
    return F.coerce(val)


def _params(args, F):
    eps = _element(F, args.epsilon if args.epsilon is not None else "1")
    lam = args.lam
    if lam is None:
        lo, hi = lambda_min(F, eps), lambda_max(F, eps)
        lam = "min" if lo == hi else None
        if lam is None:
            raise InputError("Lambda is not determined by (field, epsilon); pass --lambda")
    if lam.lstrip().startswith("{"):
        lam = AdditiveSubgroup.from_json(F, json.loads(lam))
    return FormParams.make(F, eps, lam)


# -- subcommands ---------------------------------------------------------

def cmd_lambda(args):
    F = _field(args)
    eps = _element(F, args.epsilon if args.epsilon is not None else "1")
    lo, hi = lambda_min(F, eps), lambda_max(F, eps)
    key, tmin, tmax = lambda_table_row(F, eps)
    return EXIT_OK, {
        "field": F.to_json(), "epsilon": F.to_json_value(eps),
        "lambda_min": lo.to_json(), "lambda_max": hi.to_json(),
        "lambda_min_text": lo.describe(), "lambda_max_text": hi.describe(),
        "table_row": key, "table_match": (lo, hi) == (tmin, tmax),
        "table_min_text": tmin.describe(), "table_max_text": tmax.describe(),
    }


def _space_from_args(args):
    if args.input is not None:
        data = _load(args.input)
        _validate(data, FORM_SCHEMA)
        return FormedSpace.from_json(data), data
    F = _field(args)
    params = _params(args, F)
    n = args.dim or 2
    q = hyperbolic_form(params, n) if args.form == "hyperbolic" else euclidean_form(params, n)
    return FormedSpace(q), None


def cmd_classify(args):
    E, _ = _space_from_args(args)
    return EXIT_OK, {
        "kind": classify(E.params).value,
        "dimension": E.n,
        "kernel_dim": E.kernel.dim, "radical_dim": E.radical.dim,
        "kernel": E.kernel.to_json(), "radical": E.radical.to_json(),
        "canonical": E.form.to_json(),
    }


def cmd_witt(args):
    data = _load(args.input)
    _validate(data, PROBLEM_SCHEMA)
    prob = ExtensionProblem.from_json(data)
    g = relative_witt_extend(prob) if prob.fix is not None else witt_extend(prob)
    out = g.to_json()
    F = prob.space.field
    out["matrix"] = [[F.to_json_value(x) for x in r] for r in g.matrix.rows]
    out["relative"] = prob.fix is not None
    return EXIT_OK, out


def cmd_orbits(args):
    E, data = _space_from_args(args)
    census = enumerate_isometries(E, args.budget)
    iso = [S for S in enumerate_subspaces(E.field, E.n) if is_isotropic(E, S)]
    orbits = orbit_partition(census, iso)
    table = [{"dim": d, "dim_radical": r, "size": len(orb), "representative": orb[0].to_json()}
             for orb, (d, r) in orbits]
    out = {"order": census.order, "orbit_table": table,
           "building_sizes": _rank_sizes(building(E)),
           "transitive": len(orbits) == len({inv for _, inv in orbits})}
    label = None
    for which, maker in (("hyperbolic", hyperbolic_form), ("euclidean", euclidean_form)):
        if which == "hyperbolic" and E.n % 2:
            continue
        if maker(E.params, E.n) == E.form:
            lab, qq = classical_label(E, which)
            label = f"{lab}_{E.n}"
            out["formula_order"] = group_order_formula(lab, qq, E.n)
            break
    out["label"] = label
    return EXIT_OK, out


def _rank_sizes(subspaces):
    sizes = {}
    for S in subspaces:
        sizes[str(S.dim)] = sizes.get(str(S.dim), 0) + 1
    return sizes


def cmd_verify(args):
    if args.field is None:
        raise InputError("missing --field")
    fields = selection_fields(args.field, args.sigma)
    results = run_checks(fields, args.max_dim, args.budget, args.check or None)
    ok = all(r.passed for r in results)
    return (EXIT_OK if ok else EXIT_FAIL), {
        "fields": [F.name for F in fields], "max_dim": args.max_dim,
        "passed": ok, "checks": [r.to_json() for r in results]}


# -- rendering -----------------------------------------------------------

def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(pad + json.dumps(obj))
    return lines


def _flat(v):
    return isinstance(v, list) and all(not isinstance(x, dict) for x in v)


def _verify_text(out):
    lines = [f"fields: {', '.join(out['fields'])}  max-dim: {out['max_dim']}"]
    for c in out["checks"]:
        lines.append(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']:<16} cases={c['cases']:<8} "
                     f"{c['seconds']:.1f}s  {c['detail']}")
        for f in c["failures"]:
            lines.append(f"    {f}")
    return lines


def build_parser():
    p = argparse.ArgumentParser(prog="formwitt", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="shorthand (gf2, gf3, gf4, gf5, gf9, q) or field JSON")
    common.add_argument("--sigma", choices=["id", "frob", "frobenius"])
    common.add_argument("--epsilon", help="integer, coordinate list, or fraction")
    common.add_argument("--lambda", dest="lam",
                        help="min, max, zero, full, fixed, or subgroup JSON")
    common.add_argument("--input", help="JSON file, inline JSON, or - for stdin")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest number of candidate matrices to enumerate")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("lambda", parents=[common], help="Lambda_min and Lambda_max")
    for name, hlp in (("classify", "kind, kernel and radical of a form"),
                      ("orbits", "isometry group order and orbits on isotropic subspaces")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("--form", choices=["hyperbolic", "euclidean"], default="hyperbolic")
        sp.add_argument("--dim", type=int)
    sub.add_parser("witt", parents=[common], help="extend a partial isometry")
    vp = sub.add_parser("verify", parents=[common], help="run the brute-force checks")
    vp.add_argument("--max-dim", type=int, default=2)
    vp.add_argument("--check", action="append", choices=CHECK_NAMES)
    return p


COMMANDS = {"lambda": cmd_lambda, "classify": cmd_classify, "witt": cmd_witt,
            "orbits": cmd_orbits, "verify": cmd_verify}


def _emit(args, payload):
    if args.format == "text":
        lines = _verify_text(payload) if args.command == "verify" and "checks" in payload else _text(payload)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code, payload = COMMANDS[args.command](args)
    except HypothesisError as exc:
        code, payload = EXIT_HYPOTHESIS, {"error": "hypothesis-violated",
                                          "condition": exc.condition, "message": str(exc)}
    except BudgetExceeded as exc:
        code, payload = EXIT_BUDGET, {"error": "budget-exceeded", "needed": exc.needed,
                                      "budget": exc.budget, "message": str(exc)}
    except (InputError, PreconditionError, FormError, ValueError, KeyError, TypeError) as exc:
        code, payload = EXIT_INPUT, {"error": "invalid-input", "message": str(exc)}
    _emit(args, payload)
    if code not in (EXIT_OK, EXIT_FAIL):
        print(payload["message"], file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
