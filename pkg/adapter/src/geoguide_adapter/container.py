"""Standalone GGT1 reader.

Deliberately independent of the producing library: the adapter proves
the on-disk contract is parseable from the format description alone
(magic line, one-line JSON header, raw little-endian float32 payload).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

MAGIC = b"GGT1\n"


class ContainerError(ValueError):
    pass


def load_container(path: str | Path, layout: str | None = None):
    """Load a GGT1 file; returns (float32 array, header dict).

    `layout` optionally requests an axis order (a permutation of the
    stored layout string, e.g. "FCHW" for a stored "FHWC" tensor); the
    array is transposed accordingly and the header reports the new order.
    """
    path = Path(path)
    if not path.is_file():
        raise ContainerError(f"container not found: {path}")
    raw = path.read_bytes()
    if not raw.startswith(MAGIC):
        raise ContainerError(f"{path}: bad magic {raw[:5]!r}")
    nl = raw.find(b"\n", len(MAGIC))
    if nl < 0:
        raise ContainerError(f"{path}: missing header line")
    try:
        header = json.loads(raw[len(MAGIC):nl].decode("ascii"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ContainerError(f"{path}: bad header: {e}")
    for key in ("dtype", "shape", "layout", "byte_order"):
        if key not in header:
            raise ContainerError(f"{path}: header missing {key!r}")
    if header["dtype"] != "f32" or header["byte_order"] != "LE":
        raise ContainerError(f"{path}: unsupported dtype/byte order")
    shape = tuple(int(s) for s in header["shape"])
    payload = raw[nl + 1:]
    expected = int(np.prod(shape)) * 4
    if len(payload) != expected:
        raise ContainerError(
            f"{path}: payload is {len(payload)} bytes, expected {expected}")
    arr = np.frombuffer(payload, dtype="<f4").reshape(shape)
    if layout is not None and layout != header["layout"]:
        stored = header["layout"]
        if sorted(layout) != sorted(stored):
            raise ContainerError(
                f"{path}: layout {layout!r} is not a permutation of {stored!r}")
        arr = arr.transpose([stored.index(axis) for axis in layout])
        header = dict(header, layout=layout, shape=list(arr.shape))
    return arr, header
