"""
JSON channel documents.

A document is ``{"n": n, "format": "choi" | "kraus", "data": ...}``. Complex
entries are ``[re, im]`` pairs; ``"choi"`` data is an n^2 x n^2 nested list,
``"kraus"`` data a list of n x n nested lists. The 3 x 3 catalog matrix ``p``
is written with ``"format": "matrix"`` and is not a channel.
"""
import json

import numpy as np

from choifaces.channel import choi_dim, choi_from_kraus


class ChannelFileError(ValueError):
    pass


def encode_matrix(m):
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def decode_matrix(data, shape=None) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ChannelFileError(f"matrix entries must be [re, im] pairs: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ChannelFileError(f"matrix must be a 2-d array of [re, im] pairs, got shape {arr.shape}")
    m = arr[..., 0] + 1j * arr[..., 1]
    if shape is not None and m.shape != tuple(shape):
        raise ChannelFileError(f"expected a {shape[0]}x{shape[1]} matrix, got {m.shape[0]}x{m.shape[1]}")
    if not np.all(np.isfinite(m)):
        raise ChannelFileError("matrix has non-finite entries")
    return m


def choi_document(c, **extra) -> dict:
    doc = {"n": choi_dim(c), "format": "choi", "data": encode_matrix(c)}
    doc.update(extra)
    return doc


def matrix_document(m) -> dict:
    m = np.asarray(m)
    return {"rows": m.shape[0], "cols": m.shape[1], "format": "matrix", "data": encode_matrix(m)}


def kraus_document(ops) -> dict:
    ops = [np.asarray(a) for a in ops]
    return {"n": ops[0].shape[0], "format": "kraus", "data": [encode_matrix(a) for a in ops]}


def parse_document(doc) -> np.ndarray:
    """Turn a channel document into its Choi matrix."""
    if not isinstance(doc, dict):
        raise ChannelFileError("document must be a JSON object")
    fmt = doc.get("format")
    n = doc.get("n")
    if fmt not in ("choi", "kraus"):
        raise ChannelFileError(f"format must be 'choi' or 'kraus', got {fmt!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ChannelFileError(f"n must be a positive integer, got {n!r}")
    data = doc.get("data")
    if fmt == "choi":
        return decode_matrix(data, (n * n, n * n))
    if not isinstance(data, list) or not data:
        raise ChannelFileError("kraus data must be a nonempty list of matrices")
    return choi_from_kraus([decode_matrix(a, (n, n)) for a in data])


def load(fp) -> np.ndarray:
    try:
        doc = json.load(fp)
    except json.JSONDecodeError as exc:
        raise ChannelFileError(f"invalid JSON: {exc}") from None
    return parse_document(doc)


def dumps(doc) -> str:
    return json.dumps(doc)
