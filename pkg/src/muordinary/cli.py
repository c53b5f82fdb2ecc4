"""Batch front-end: load a datum file, run one operation, print the result.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 property-test
failure.  Machine output is JSON with sorted keys, so runs are
byte-deterministic for a fixed input and seed.
"""

import argparse
import json
import sys

from . import propsuite, serialize
from .errors import MuordinaryError
from .serialize import SchemaError
from .shimura import (
    cascade_inventory,
    dual_orbit,
    gr_ranks,
    hasse_weight,
    levi_shape,
    moonen_parameter_count,
    newton_slopes,
)
from .theta import MeasureHandle, kummer_check, moment, theta_simple
from .weights import (
    char_congruent,
    classify,
    classify_levi,
    dominant_dim,
    levi_dim,
    restrict_to_levi,
    simple_report,
    theta_hypotheses,
)
from .padics import BinomialVector, series_congruent
from .padics import binomial_to_series


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="muordinary",
        description="combinatorial invariants of unitary PEL data and "
        "differential operators on truncated expansions",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", help="path to the JSON input file")
    parser.add_argument("--format", choices=("table", "machine"), default="table")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-e", type=int, default=4, dest="max_e")
    parser.add_argument("--max-n", type=int, default=4, dest="max_n")
    parser.add_argument("--precision", type=int, default=None)
    parser.add_argument("--degree", type=int, default=None)
    parser.add_argument("--free-block", choices=("high", "low"), default=None,
                        dest="free_block")
    parser.add_argument("--fast", action="store_true",
                        help="reduced case counts for the property suite")
    return parser


def _load_json(path: str) -> dict:
    if not path:
        raise SchemaError("this subcommand requires --input")
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc


def _load_datum(raw: dict):
    return serialize.datum_from_dict(serialize._require(raw, "datum", "input"))


def _load_context(raw: dict, args):
    data = dict(serialize._require(raw, "context", "input"))
    if args.precision is not None:
        data["precision"] = args.precision
    if args.degree is not None:
        data["degree"] = args.degree
    return serialize.context_from_dict(data)


def _load_assignment(raw: dict, args, datum, ctx):
    data = dict(serialize._require(raw, "assignment", "input"))
    if args.free_block is not None:
        data["free_block"] = args.free_block
    return serialize.assignment_from_dict(datum, ctx, data)


def _load_seed_series(raw: dict, ctx):
    if "binomial" in raw:
        return serialize.binomial_from_dict({"terms": raw["binomial"]}, ctx)
    if "series" in raw:
        return serialize.series_from_dict({"terms": raw["series"]}, ctx)
    raise SchemaError("input needs a 'series' or 'binomial' section")


# --- per-orbit reports ----------------------------------------------------------


def cmd_newton(raw, args):
    datum = _load_datum(raw)
    out = []
    lines = []
    for i, o in enumerate(datum.orbits):
        np = newton_slopes(o)
        out.append({"label": datum.labels[i], "slopes": [[a, m] for a, m in np.slopes]})
        lines.append(f"{datum.labels[i]} (e={o.e}, n={o.n}, f={list(o.f)})")
        lines += [f"  slope {a}  multiplicity {m}" for a, m in np.slopes]
    return lines, {"orbits": out}


def cmd_dual(raw, args):
    datum = _load_datum(raw)
    out = []
    lines = []
    for i, o in enumerate(datum.orbits):
        d = dual_orbit(o)
        np = newton_slopes(d)
        out.append(
            {
                "label": datum.labels[i],
                "dual_f": list(d.f),
                "slopes": [[a, m] for a, m in np.slopes],
            }
        )
        lines.append(f"{datum.labels[i]}: dual type {list(d.f)}, slopes {np.as_dict()}")
    return lines, {"orbits": out}


def cmd_levi(raw, args):
    datum = _load_datum(raw)
    out = []
    lines = []
    for i, o in enumerate(datum.orbits):
        shape = levi_shape(o)
        out.append({"label": datum.labels[i], "shape": list(shape)})
        lines.append(f"{datum.labels[i]}: blocks {list(shape)} (decreasing slope order)")
    return lines, {"orbits": out}


def cmd_hasse(raw, args):
    datum = _load_datum(raw)
    w = hasse_weight(datum)
    return [f"hasse weight {w}"], {"hasse_weight": w}


def cmd_grranks(raw, args):
    datum = _load_datum(raw)
    out = []
    lines = []
    for i, o in enumerate(datum.orbits):
        ranks = sorted((i2, j2, r) for (i2, j2), r in gr_ranks(o).items())
        out.append({"label": datum.labels[i], "ranks": [list(t) for t in ranks]})
        lines.append(datum.labels[i])
        lines += [f"  gr({a},{b}) rank {r}" for a, b, r in ranks if r]
    return lines, {"orbits": out}


def cmd_cascade(raw, args):
    datum = _load_datum(raw)
    pieces = cascade_inventory(datum)
    lines = [
        f"{datum.labels[pc.orbit_index]}: slopes ({pc.slope_high},{pc.slope_low}) "
        f"dim {pc.dimension} height {pc.height} mult {pc.multiplicity} [{pc.kind}]"
        for pc in pieces
    ]
    return lines, {"pieces": serialize.cascade_to_list(pieces)}


def cmd_params(raw, args):
    datum = _load_datum(raw)
    per = [
        {"label": datum.labels[i], "parameters": moonen_parameter_count(o)}
        for i, o in enumerate(datum.orbits)
    ]
    total = sum(entry["parameters"] for entry in per)
    lines = [f"{e['label']}: {e['parameters']}" for e in per] + [f"total: {total}"]
    return lines, {"orbits": per, "total": total}


# --- weight commands ------------------------------------------------------------


def cmd_restrict(raw, args):
    datum = _load_datum(raw)
    w = serialize.weight_from_dict(datum, serialize._require(raw, "weight", "input"))
    dec = restrict_to_levi(w)
    rows = [
        {
            "weight": serialize.levi_weight_to_dict(lw),
            "multiplicity": c,
            "dimension": levi_dim(lw),
        }
        for lw, c in dec.components
    ]
    lines = [
        f"mult {row['multiplicity']}  dim {row['dimension']}  {row['weight']}"
        for row in rows
    ]
    lines.append(
        f"dimension check: {dec.total_dimension()} = {dominant_dim(w)}"
    )
    return lines, {
        "components": rows,
        "dimension": dominant_dim(w),
        "multiplicity_free": dec.is_multiplicity_free(),
    }


def cmd_classify(raw, args):
    datum = _load_datum(raw)
    if "weight" in raw:
        report = classify(serialize.weight_from_dict(datum, raw["weight"]))
    elif "levi_weight" in raw:
        report = classify_levi(serialize.levi_weight_from_dict(datum, raw["levi_weight"]))
    else:
        raise SchemaError("input needs a 'weight' or 'levi_weight' section")
    data = serialize.classify_report_to_dict(report, datum)
    lines = [f"{k}: {v}" for k, v in data.items()]
    return lines, data


def cmd_simple(raw, args):
    datum = _load_datum(raw)
    w = serialize.levi_weight_from_dict(
        datum, serialize._require(raw, "levi_weight", "input")
    )
    free_block = args.free_block or "high"
    ok, failures = simple_report(w, free_block)
    data = {"simple": ok, "free_block": free_block, "failures": failures}
    lines = [f"simple: {ok} (free block: {free_block})"] + [f"  {f}" for f in failures]
    return lines, data


def cmd_charcong(raw, args):
    datum = _load_datum(raw)
    m = serialize._require(raw, "m", "input")
    if "weight" in raw and "weight2" in raw:
        w1 = serialize.weight_from_dict(datum, raw["weight"])
        w2 = serialize.weight_from_dict(datum, raw["weight2"])
    elif "levi_weight" in raw and "levi_weight2" in raw:
        w1 = serialize.levi_weight_from_dict(datum, raw["levi_weight"])
        w2 = serialize.levi_weight_from_dict(datum, raw["levi_weight2"])
    else:
        raise SchemaError("input needs 'weight'+'weight2' or 'levi_weight'+'levi_weight2'")
    ok = char_congruent(w1, w2, m)
    return [f"characters congruent mod p^{m}: {ok}"], {"m": m, "congruent": ok}


# --- operator commands ------------------------------------------------------------


def cmd_theta(raw, args):
    datum = _load_datum(raw)
    ctx = _load_context(raw, args)
    assignment = _load_assignment(raw, args, datum, ctx)
    w = serialize.levi_weight_from_dict(
        datum, serialize._require(raw, "levi_weight", "input")
    )
    f = _load_seed_series(raw, ctx)
    result = theta_simple(f, w, assignment)
    if isinstance(result, BinomialVector):
        data = {
            "binomial": serialize.binomial_to_dict(result),
            "series": serialize.series_to_dict(binomial_to_series(result)),
        }
    else:
        data = {"series": serialize.series_to_dict(result)}
    return [repr(result)], data


def cmd_thetacong(raw, args):
    datum = _load_datum(raw)
    ctx = _load_context(raw, args)
    assignment = _load_assignment(raw, args, datum, ctx)
    w1 = serialize.levi_weight_from_dict(
        datum, serialize._require(raw, "levi_weight", "input")
    )
    w2 = serialize.levi_weight_from_dict(
        datum, serialize._require(raw, "levi_weight2", "input")
    )
    m = serialize._require(raw, "m", "input")
    f = _load_seed_series(raw, ctx)
    report = theta_hypotheses(w1, w2, m, assignment.free_block)
    if not report.ok:
        data = {
            "hypotheses_ok": False,
            "failures": list(report.failures),
            "congruent": None,
        }
        lines = ["hypotheses fail:"] + [f"  {f}" for f in report.failures]
        return lines, data
    if isinstance(f, BinomialVector):
        f = binomial_to_series(f)
    g1 = theta_simple(f, w1, assignment)
    g2 = theta_simple(f, w2, assignment)
    ok = series_congruent(g1, g2, m + 1)
    data = {"hypotheses_ok": True, "failures": [], "congruent": ok}
    return [f"congruent mod p^{m + 1}: {ok}"], data


def cmd_moments(raw, args):
    datum = _load_datum(raw)
    ctx = _load_context(raw, args)
    assignment = _load_assignment(raw, args, datum, ctx)
    f = _load_seed_series(raw, ctx)
    handle = MeasureHandle(f)
    weights = raw.get("levi_weights")
    if weights is None:
        weights = [serialize._require(raw, "levi_weight", "input")]
    out = []
    lines = []
    for wd in weights:
        w = serialize.levi_weight_from_dict(datum, wd)
        val = moment(handle, w, assignment)
        if isinstance(val, BinomialVector):
            entry = {"weight": wd, "moment": serialize.binomial_to_dict(val)}
        else:
            entry = {"weight": wd, "moment": serialize.series_to_dict(val)}
        out.append(entry)
        lines.append(repr(val))
    return lines, {"moments": out}


def cmd_kummer(raw, args):
    datum = _load_datum(raw)
    ctx = _load_context(raw, args)
    assignment = _load_assignment(raw, args, datum, ctx)
    f = _load_seed_series(raw, ctx)
    m = serialize._require(raw, "m", "input")
    raw_terms = serialize._require(raw, "kummer_terms", "input")
    terms = [
        (c, serialize.levi_weight_from_dict(datum, wd)) for c, wd in raw_terms
    ]
    result = kummer_check(MeasureHandle(f), terms, m, assignment)
    data = {
        "hypothesis_met": result.hypothesis_met,
        "conclusion": result.conclusion,
    }
    if result.hypothesis_met:
        lines = [f"hypothesis met; conclusion holds: {result.conclusion}"]
    else:
        lines = ["hypothesis not met"]
    return lines, data


def cmd_proptest(raw, args):
    results = propsuite.run_all(
        seed=args.seed, max_e=args.max_e, max_n=args.max_n, fast=args.fast
    )
    lines = []
    data = {}
    for name, failures in results.items():
        status = "PASS" if not failures else "FAIL"
        lines.append(f"{status} {name}")
        lines += [f"  {f}" for f in failures[:5]]
        data[name] = {"pass": not failures, "failures": failures}
    return lines, {"results": data}


COMMANDS = {
    "newton": cmd_newton,
    "dual": cmd_dual,
    "levi": cmd_levi,
    "hasse": cmd_hasse,
    "grranks": cmd_grranks,
    "cascade": cmd_cascade,
    "params": cmd_params,
    "restrict": cmd_restrict,
    "classify": cmd_classify,
    "simple": cmd_simple,
    "charcong": cmd_charcong,
    "theta": cmd_theta,
    "thetacong": cmd_thetacong,
    "moments": cmd_moments,
    "kummer": cmd_kummer,
    "proptest": cmd_proptest,
}

NEEDS_INPUT = set(COMMANDS) - {"proptest"}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    raw = {}
    try:
        if args.command in NEEDS_INPUT:
            raw = _load_json(args.input)
        lines, data = COMMANDS[args.command](raw, args)
    except SchemaError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except MuordinaryError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    if args.format == "machine":
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    if args.command == "proptest":
        failed = [name for name, entry in data["results"].items() if not entry["pass"]]
        if failed:
            return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
