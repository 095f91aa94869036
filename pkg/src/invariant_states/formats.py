"""File formats: canonical JSON and the QOPB binary operator container.

Canonical JSON is deterministic byte-for-byte: keys sorted, compact
separators, floats printed with 17 significant digits (enough to round
trip any double).  Descriptors and verdicts re-serialize to identical
bytes after a parse, which keeps pipeline outputs diffable.

QOPB layout: magic ``QOPB``, version byte 0x01, little-endian u32 local
dimension, u32 subsystem count, then d^(2n) little-endian f64 pairs
(re, im) in row-major order.
"""

from __future__ import annotations

import json
import math
import struct

import numpy as np

from .bits import as_bits
from .operators import Operator
from .simplex import SeparabilityVerdict, StateDescriptor

QOPB_MAGIC = b"QOPB"
QOPB_VERSION = 1

DESCRIPTOR_VERSION = 1


def _canonical(value, parts: list[str]):
    if value is None:
        parts.append("null")
    elif isinstance(value, bool):
        parts.append("true" if value else "false")
    elif isinstance(value, (int, np.integer)):
        parts.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        x = float(value)
        if not math.isfinite(x):
            raise ValueError(f"non-finite float {x!r} is not representable in JSON")
        parts.append(format(x, ".17g"))
    elif isinstance(value, str):
        parts.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        parts.append("{")
        for k, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if k:
                parts.append(",")
            parts.append(json.dumps(key, ensure_ascii=False))
            parts.append(":")
            _canonical(value[key], parts)
        parts.append("}")
    elif isinstance(value, (list, tuple, np.ndarray)):
        parts.append("[")
        for k, item in enumerate(value):
            if k:
                parts.append(",")
            _canonical(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__} to canonical JSON")


def canonical_json(value) -> str:
    """Serialize to deterministic JSON (sorted keys, 17-digit floats)."""
    parts: list[str] = []
    _canonical(value, parts)
    return "".join(parts)


# ---------------------------------------------------------------------------
# state descriptors


def descriptor_to_dict(desc: StateDescriptor) -> dict:
    return {
        "version": DESCRIPTOR_VERSION,
        "d": desc.d,
        "K": desc.K,
        "sigma": list(desc.sigma),
        "fidelities": [float(x) for x in desc.fidelities],
    }


def dumps_descriptor(desc: StateDescriptor) -> str:
    return canonical_json(descriptor_to_dict(desc)) + "\n"


def parse_descriptor(text: str) -> StateDescriptor:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid descriptor JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("descriptor JSON must be an object")
    missing = {"version", "d", "K", "sigma", "fidelities"} - set(data)
    if missing:
        raise ValueError(f"descriptor JSON missing keys: {sorted(missing)}")
    if data["version"] != DESCRIPTOR_VERSION:
        raise ValueError(f"unsupported descriptor version {data['version']!r}")
    sigma = as_bits(data["sigma"])
    if len(sigma) != int(data["K"]):
        raise ValueError(f"K = {data['K']} does not match sigma length {len(sigma)}")
    return StateDescriptor(int(data["d"]), sigma, np.asarray(data["fidelities"], dtype=float))


# ---------------------------------------------------------------------------
# verdicts


def verdict_to_dict(verdict: SeparabilityVerdict) -> dict:
    out = {
        "criterion": verdict.criterion,
        "outcome": verdict.outcome,
        "failures": [
            {"constraint": f.constraint, "value": f.value, "bound": f.bound}
            for f in verdict.failures
        ],
    }
    if verdict.necessary_only:
        out["necessary_only"] = True
    if verdict.biseparable is not None:
        out["biseparable"] = verdict_to_dict(verdict.biseparable)
    return out


def dumps_verdict(verdict: SeparabilityVerdict) -> str:
    return canonical_json(verdict_to_dict(verdict)) + "\n"


# ---------------------------------------------------------------------------
# operators


def operator_to_dict(op: Operator) -> dict:
    return {
        "d": op.d,
        "n": op.n,
        "re": [[float(x) for x in row] for row in op.mat.real],
        "im": [[float(x) for x in row] for row in op.mat.imag],
    }


def dumps_operator(op: Operator) -> str:
    return canonical_json(operator_to_dict(op)) + "\n"


def parse_operator(text: str) -> Operator:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid operator JSON: {exc}") from exc
    missing = {"d", "n", "re", "im"} - set(data)
    if missing:
        raise ValueError(f"operator JSON missing keys: {sorted(missing)}")
    re = np.asarray(data["re"], dtype=float)
    im = np.asarray(data["im"], dtype=float)
    if re.shape != im.shape:
        raise ValueError(f"re/im shapes differ: {re.shape} vs {im.shape}")
    return Operator(int(data["d"]), int(data["n"]), re + 1j * im)


def qopb_encode(op: Operator) -> bytes:
    header = QOPB_MAGIC + struct.pack("<BII", QOPB_VERSION, op.d, op.n)
    interleaved = np.empty((op.side, op.side, 2), dtype="<f8")
    interleaved[:, :, 0] = op.mat.real
    interleaved[:, :, 1] = op.mat.imag
    return header + interleaved.tobytes()


def qopb_decode(data: bytes) -> Operator:
    if len(data) < 13 or data[:4] != QOPB_MAGIC:
        raise ValueError("not a QOPB blob: bad magic")
    if data[4] != QOPB_VERSION:
        raise ValueError(f"unsupported QOPB version {data[4]}")
    d, n = struct.unpack_from("<II", data, 5)
    if d < 2 or n < 1:
        raise ValueError(f"invalid QOPB header: d={d}, n={n}")
    side = d**n
    expected = 13 + 16 * side * side
    if len(data) != expected:
        raise ValueError(f"QOPB payload has {len(data)} bytes, expected {expected}")
    flat = np.frombuffer(data, dtype="<f8", offset=13).reshape(side, side, 2)
    return Operator(d, n, flat[:, :, 0] + 1j * flat[:, :, 1])
