"""JSON schemas for data, weights, series and reports.

Every value the CLI can emit in machine format re-parses to an equal value
through the matching from_dict function; ordering is canonical (sorted
terms, block-lexicographic component order) so output is deterministic.
"""

from typing import Optional

from .errors import MuordinaryError
from .padics import BinomialVector, PrecisionContext, UExpansion
from .shimura import CascadePiece, NewtonPolygon, Orbit, PELDatum
from .theta import CoordinateAssignment
from .weights import DominantWeight, LeviWeight, LRDecomposition, WeightClassReport

SCHEMA_VERSION = 1


class SchemaError(Exception):
    """Input does not match the documented schema."""


def _require(mapping: dict, key: str, where: str):
    if key not in mapping:
        raise SchemaError(f"missing field {key!r} in {where}")
    return mapping[key]


# --- datum --------------------------------------------------------------------


def datum_to_dict(datum: PELDatum) -> dict:
    orbits = []
    for i, o in enumerate(datum.orbits):
        entry = {
            "label": datum.labels[i],
            "e": o.e,
            "n": o.n,
            "f": list(o.f),
            "self_dual": o.self_dual,
        }
        if datum.dual_of[i] is not None:
            entry["dual_of"] = datum.labels[datum.dual_of[i]]
        orbits.append(entry)
    return {"version": SCHEMA_VERSION, "p": datum.p, "orbits": orbits}


def datum_from_dict(data: dict) -> PELDatum:
    if not isinstance(data, dict):
        raise SchemaError("datum must be an object")
    version = _require(data, "version", "datum")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {version!r}")
    p = _require(data, "p", "datum")
    raw = _require(data, "orbits", "datum")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("datum needs a nonempty orbit list")
    labels = []
    orbits = []
    for i, entry in enumerate(raw):
        where = f"orbit #{i}"
        labels.append(entry.get("label", f"o{i}"))
        try:
            orbits.append(
                Orbit(
                    e=_require(entry, "e", where),
                    n=_require(entry, "n", where),
                    f=tuple(_require(entry, "f", where)),
                    self_dual=entry.get("self_dual", False),
                )
            )
        except MuordinaryError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    if len(set(labels)) != len(labels):
        raise SchemaError("orbit labels must be distinct")
    dual_of = []
    for i, entry in enumerate(raw):
        partner = entry.get("dual_of")
        if partner is None:
            dual_of.append(None)
        else:
            if partner not in labels:
                raise SchemaError(f"orbit #{i}: dual_of names unknown orbit {partner!r}")
            dual_of.append(labels.index(partner))
    try:
        return PELDatum(p=p, orbits=tuple(orbits), dual_of=tuple(dual_of), labels=tuple(labels))
    except MuordinaryError as exc:
        raise SchemaError(str(exc)) from exc


# --- weights ------------------------------------------------------------------


def weight_to_dict(w: DominantWeight) -> dict:
    return {
        w.datum.labels[oi]: [list(t) for t in per_orbit]
        for oi, per_orbit in enumerate(w.entries)
    }


def weight_from_dict(datum: PELDatum, data: dict) -> DominantWeight:
    if not isinstance(data, dict):
        raise SchemaError("weight must map orbit labels to entry lists")
    entries = []
    for oi in range(len(datum.orbits)):
        label = datum.labels[oi]
        per_orbit = _require(data, label, "weight")
        entries.append(tuple(tuple(t) for t in per_orbit))
    try:
        return DominantWeight(datum, tuple(entries))
    except MuordinaryError as exc:
        raise SchemaError(str(exc)) from exc


def levi_weight_to_dict(w: LeviWeight) -> dict:
    return {
        w.datum.labels[oi]: [[list(b) for b in per_pos] for per_pos in per_orbit]
        for oi, per_orbit in enumerate(w.blocks)
    }


def levi_weight_from_dict(datum: PELDatum, data: dict) -> LeviWeight:
    if not isinstance(data, dict):
        raise SchemaError("levi weight must map orbit labels to block lists")
    blocks = []
    for oi in range(len(datum.orbits)):
        label = datum.labels[oi]
        per_orbit = _require(data, label, "levi weight")
        blocks.append(
            tuple(tuple(tuple(b) for b in per_pos) for per_pos in per_orbit)
        )
    try:
        return LeviWeight(datum, tuple(blocks))
    except MuordinaryError as exc:
        raise SchemaError(str(exc)) from exc


# --- series -------------------------------------------------------------------


def context_to_dict(ctx: PrecisionContext) -> dict:
    return {
        "p": ctx.p,
        "precision": ctx.prec,
        "degree": ctx.degree,
        "coords": list(ctx.coords),
    }


def context_from_dict(data: dict) -> PrecisionContext:
    try:
        return PrecisionContext(
            p=_require(data, "p", "context"),
            prec=_require(data, "precision", "context"),
            degree=_require(data, "degree", "context"),
            coords=tuple(_require(data, "coords", "context")),
        )
    except (ValueError, MuordinaryError) as exc:
        raise SchemaError(str(exc)) from exc


def series_to_dict(f: UExpansion) -> dict:
    return {
        "context": context_to_dict(f.ctx),
        "terms": [[list(k), v] for k, v in sorted(f.items())],
    }


def series_from_dict(data: dict, ctx: Optional[PrecisionContext] = None) -> UExpansion:
    if ctx is None:
        ctx = context_from_dict(_require(data, "context", "series"))
    terms = _require(data, "terms", "series")
    try:
        return UExpansion(ctx, {tuple(k): v for k, v in terms})
    except (ValueError, MuordinaryError) as exc:
        raise SchemaError(str(exc)) from exc


def binomial_to_dict(v: BinomialVector) -> dict:
    return {
        "context": context_to_dict(v.ctx),
        "terms": [[c, list(a)] for c, a in v.terms],
    }


def binomial_from_dict(data: dict, ctx: Optional[PrecisionContext] = None) -> BinomialVector:
    if ctx is None:
        ctx = context_from_dict(_require(data, "context", "binomial vector"))
    terms = _require(data, "terms", "binomial vector")
    try:
        return BinomialVector(ctx, [(c, tuple(a)) for c, a in terms])
    except (ValueError, MuordinaryError) as exc:
        raise SchemaError(str(exc)) from exc


# --- assignment ---------------------------------------------------------------


def assignment_to_dict(a: CoordinateAssignment) -> dict:
    return {
        "free_block": a.free_block,
        "slots": {
            label: [a.datum.labels[oi], ei] for label, oi, ei in a.slots
        },
    }


def assignment_from_dict(
    datum: PELDatum, ctx: PrecisionContext, data: dict
) -> CoordinateAssignment:
    raw = _require(data, "slots", "assignment")
    slots = []
    for label, slot in raw.items():
        try:
            orbit_label, ei = slot
        except (TypeError, ValueError):
            raise SchemaError(f"slot {label!r} must be [orbit label, entry index]")
        slots.append((label, datum.orbit_index(orbit_label), ei))
    try:
        return CoordinateAssignment(
            ctx=ctx,
            datum=datum,
            slots=tuple(slots),
            free_block=data.get("free_block", "high"),
        )
    except MuordinaryError as exc:
        raise SchemaError(str(exc)) from exc


# --- reports ------------------------------------------------------------------


def polygon_to_dict(np: NewtonPolygon) -> dict:
    return {"slopes": [[a, m] for a, m in np.slopes]}


def cascade_to_list(pieces) -> list:
    return [
        {
            "orbit": piece.orbit_index,
            "slope_high": piece.slope_high,
            "slope_low": piece.slope_low,
            "dimension": piece.dimension,
            "height": piece.height,
            "multiplicity": piece.multiplicity,
            "kind": piece.kind,
        }
        for piece in pieces
    ]


def cascade_piece_from_dict(data: dict) -> CascadePiece:
    return CascadePiece(
        orbit_index=data["orbit"],
        slope_high=data["slope_high"],
        slope_low=data["slope_low"],
        dimension=data["dimension"],
        height=data["height"],
        multiplicity=data["multiplicity"],
        kind=data["kind"],
    )


def classify_report_to_dict(report: WeightClassReport, datum: PELDatum) -> dict:
    return {
        "positive": report.positive,
        "scalar": report.scalar,
        "sum_symmetric": report.sum_symmetric,
        "symmetric": report.symmetric,
        "degrees": {
            f"{datum.labels[oi]}[{pos}]": d
            for (oi, pos), d in sorted(report.degrees.items())
        },
        "total_degree": report.total_degree,
        "depth": report.depth,
    }


def decomposition_to_list(dec: LRDecomposition) -> list:
    return [
        {"weight": levi_weight_to_dict(lw), "multiplicity": c}
        for lw, c in dec.components
    ]
