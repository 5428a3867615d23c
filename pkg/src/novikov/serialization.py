"""JSON persistence for complexes, cocycles, actions, weights, and reports.

One format, four payload kinds, each tagged with a ``format`` string and a
``schema`` version so files stay self-describing:

* ``novikov/complex``: vertex count plus maximal simplices, optionally
  carrying the closed edge cocycle the computations need.
* ``novikov/action``: the square matrix blocks of a graded cohomology
  self-map, keyed by degree.
* ``novikov/weights``: positive diagonal inner-product weights per degree.
* ``novikov/report``: what a CLI run saw and computed.

Exact scalars are written as literal strings ("5/7", "nf:x^2-3*x+1:x") and
round-trip losslessly through ``parse_scalar``; floats stay JSON numbers.
Reports are dumped with sorted keys, and exact-backend reports carry no
timing field, so identical jobs produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .cocycles import OneCocycle
from .complexes import SimplicialComplex
from .scalars import parse_scalar, scalar_literal
from .wang import FiberCohomologyAction

SCHEMA = "v1"

__all__ = [
    "SCHEMA",
    "complex_to_json",
    "complex_from_json",
    "save_complex",
    "load_complex",
    "action_to_json",
    "action_from_json",
    "save_action",
    "load_action",
    "weights_from_json",
    "load_weights",
    "report_bytes",
    "file_digest",
]


def _encode_value(value, mode: str):
    if mode == "float":
        return float(value)
    return int(value)


def _decode_value(raw, mode: str):
    if mode == "float":
        return float(raw)
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValueError(f"exact cocycle values must be integers, got {raw!r}")
    return raw


def _expect_format(payload: dict, kind: str) -> None:
    if not isinstance(payload, dict):
        raise ValueError("payload must be a JSON object")
    tag = payload.get("format")
    if tag != kind:
        raise ValueError(f"expected format {kind!r}, found {tag!r}")
    if payload.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {payload.get('schema')!r}")


def complex_to_json(k: SimplicialComplex, theta: OneCocycle | None = None) -> dict:
    payload = {
        "format": "novikov/complex",
        "schema": SCHEMA,
        "vertex_count": k.vertex_count,
        "maximal_simplices": [list(s) for s in k.maximal_simplices()],
    }
    if theta is not None:
        payload["cocycle"] = {
            "mode": theta.mode,
            "values": [
                [u, v, _encode_value(theta.value(u, v), theta.mode)]
                for (u, v) in k.edges
            ],
        }
    return payload


def complex_from_json(payload: dict):
    """Rebuild (complex, cocycle or None) from its JSON form."""
    _expect_format(payload, "novikov/complex")
    k = SimplicialComplex.build(
        payload["maximal_simplices"], vertex_count=payload.get("vertex_count")
    )
    raw = payload.get("cocycle")
    if raw is None:
        return k, None
    mode = raw.get("mode", "exact")
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown cocycle mode {mode!r}")
    values = {}
    for entry in raw["values"]:
        u, v, val = entry
        values[(int(u), int(v))] = _decode_value(val, mode)
    missing = [e for e in k.edges if e not in values]
    if missing:
        raise ValueError(f"cocycle misses {len(missing)} edges, first {missing[0]}")
    return k, OneCocycle(values, mode=mode)


def save_complex(path, k: SimplicialComplex, theta: OneCocycle | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_json(k, theta), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_complex(path):
    with open(path, encoding="utf-8") as fh:
        return complex_from_json(json.load(fh))


def action_to_json(action: FiberCohomologyAction) -> dict:
    blocks = {}
    for p in range(action.top_degree + 1):
        block = action.block(p)
        blocks[str(p)] = [
            [scalar_literal(block.entry(i, j)) for j in range(block.ncols)]
            for i in range(block.nrows)
        ]
    return {"format": "novikov/action", "schema": SCHEMA, "blocks": blocks}


def action_from_json(payload: dict) -> FiberCohomologyAction:
    _expect_format(payload, "novikov/action")
    blocks = {}
    for key, rows in payload["blocks"].items():
        blocks[int(key)] = [[parse_scalar(str(e)) for e in row] for row in rows]
    return FiberCohomologyAction.from_blocks(blocks)


def save_action(path, action: FiberCohomologyAction) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(action_to_json(action), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_action(path) -> FiberCohomologyAction:
    with open(path, encoding="utf-8") as fh:
        return action_from_json(json.load(fh))


def weights_from_json(payload: dict) -> dict:
    _expect_format(payload, "novikov/weights")
    out = {}
    for key, vec in payload["weights"].items():
        out[int(key)] = [float(w) for w in vec]
    return out


def load_weights(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return weights_from_json(json.load(fh))


def report_bytes(report: dict) -> bytes:
    """Canonical byte form of a report: sorted keys, two-space indent."""
    return (json.dumps(report, indent=2, sort_keys=True) + "\n").encode("utf-8")


def file_digest(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()
