"""Deterministic text and JSON renderings, plus the JSON schemas they obey."""

from __future__ import annotations

import json

from .engine import StabilityReport
from .oracle import Decomposition
from .partitions import format_partition

SCHEMA_VERSION = 1

_INT_LIST = {"type": "array", "items": {"type": "integer"}}
_TERMS = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"weight": _INT_LIST, "mult": {"type": "integer", "minimum": 1}},
        "required": ["weight", "mult"],
        "additionalProperties": False,
    },
}
_FAMILY = {"type": "string", "enum": ["gl", "sp", "so-odd", "so-even", "stable"]}

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "decomposition result",
    "type": "object",
    "properties": {
        "family": _FAMILY,
        "rank": {"type": "integer", "minimum": 1},
        "lhs": _INT_LIST,
        "rhs": _INT_LIST,
        "engine": {"type": "string", "enum": ["pieri-recursive", "klimyk-oracle"]},
        "terms": _TERMS,
    },
    "required": ["family", "rank", "lhs", "rhs", "engine", "terms"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "stability report",
    "type": "object",
    "properties": {
        "lhs": _INT_LIST,
        "rhs": _INT_LIST,
        "n0": {"type": "integer", "minimum": 0},
        "nmax": {"type": "integer"},
        "groups": {"type": "array", "items": _FAMILY},
        "thresholds": {"type": "object", "additionalProperties": {"type": "integer"}},
        "stable_from": {"type": "object", "additionalProperties": {"type": "integer"}},
        "vanishing_ok": {"type": "boolean"},
        "stability_ok": {"type": "boolean"},
        "cross_group_ok": {"type": "boolean"},
        "verified": {"type": "boolean"},
        "oracle_checked": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"family": _FAMILY, "rank": {"type": "integer"}},
                "required": ["family", "rank"],
            },
        },
        "tables": {"type": "array", "items": RESULT_SCHEMA},
    },
    "required": [
        "lhs", "rhs", "n0", "nmax", "groups", "thresholds", "stable_from",
        "vanishing_ok", "stability_ok", "cross_group_ok", "verified", "tables",
    ],
    "additionalProperties": False,
}

CACHE_RECORD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "cache record",
    "type": "object",
    "properties": {
        "family": _FAMILY,
        "rank": {"type": "integer", "minimum": 1},
        "lhs": _INT_LIST,
        "rhs": _INT_LIST,
        "result": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_INT_LIST, {"type": "integer", "minimum": 1}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "engine": {"type": "string", "enum": ["pieri-recursive", "klimyk-oracle"]},
        "schema_version": {"const": SCHEMA_VERSION},
    },
    "required": ["family", "rank", "lhs", "rhs", "result", "engine", "schema_version"],
    "additionalProperties": False,
}


def decomposition_doc(dec: Decomposition) -> dict:
    if dec.family is None:
        family, rank = "stable", dec.computed_with.rank
    else:
        family, rank = dec.family.kind.value, dec.family.rank
    return {
        "family": family,
        "rank": rank,
        "lhs": list(dec.lhs),
        "rhs": list(dec.rhs),
        "engine": dec.engine,
        "terms": [{"weight": list(w), "mult": m} for w, m in dec.items()],
    }


def report_doc(report: StabilityReport) -> dict:
    return {
        "lhs": list(report.lam),
        "rhs": list(report.mu),
        "n0": report.n0,
        "nmax": report.n_max,
        "groups": [k.value for k in report.families],
        "thresholds": {k.value: v for k, v in report.thresholds.items()},
        "stable_from": {k.value: v for k, v in report.stable_from.items()},
        "vanishing_ok": report.vanishing_ok,
        "stability_ok": report.stability_ok,
        "cross_group_ok": report.cross_group_ok,
        "verified": report.verified,
        "oracle_checked": [{"family": k.value, "rank": n} for k, n in report.oracle_checked],
        "tables": [decomposition_doc(d) for d in report.per_rank.values()],
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def to_tsv(dec: Decomposition) -> str:
    return "".join(f"{format_partition(w)}\t{m}\n" for w, m in dec.items())


def to_pretty(dec: Decomposition) -> str:
    label = str(dec.family) if dec.family is not None else "stable"
    return f"{label}\t({format_partition(dec.lhs)}) ⊗ ({format_partition(dec.rhs)})\t{dec.pretty()}\n"


def report_pretty(report: StabilityReport) -> str:
    lines = [
        f"lambda = ({format_partition(report.lam)}), mu = ({format_partition(report.mu)}), n0 = {report.n0}"
    ]
    for dec in report.per_rank.values():
        lines.append(to_pretty(dec).rstrip("\n"))
    for k in report.families:
        lines.append(
            f"stable_from[{k.value}] = {report.stable_from[k]} (threshold {report.thresholds[k]})"
        )
    lines.append(f"vanishing: {'ok' if report.vanishing_ok else 'FAILED'}")
    lines.append(f"stability: {'ok' if report.stability_ok else 'FAILED'}")
    lines.append(f"cross-group: {'ok' if report.cross_group_ok else 'FAILED'}")
    return "\n".join(lines) + "\n"


def report_tsv(report: StabilityReport) -> str:
    out = []
    for (kind, n), dec in report.per_rank.items():
        for w, m in dec.items():
            out.append(f"{kind.value}\t{n}\t{format_partition(w)}\t{m}\n")
    return "".join(out)
