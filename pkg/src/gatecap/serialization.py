"""JSON encoding of matrices and state vectors.

Complex entries are stored as [re, im] pairs; matrices row-major as
{"dim": n, "entries": [[[re, im], ...], ...]} and states as
{"dim": n, "amplitudes": [[re, im], ...]}.
"""

from __future__ import annotations

import json

import numpy as np


class MalformedInputError(ValueError):
    """The JSON document does not follow the matrix/state schema."""


def _pair(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return {
        "dim": int(m.shape[0]),
        "entries": [[_pair(z) for z in row] for row in m],
    }


def state_to_json(psi: np.ndarray) -> dict:
    psi = np.asarray(psi).ravel()
    return {"dim": int(psi.shape[0]), "amplitudes": [_pair(z) for z in psi]}


def _complex_from_pair(item) -> complex:
    if (not isinstance(item, (list, tuple)) or len(item) != 2
            or not all(isinstance(v, (int, float)) for v in item)):
        raise MalformedInputError(f"expected a [re, im] pair, got {item!r}")
    return complex(item[0], item[1])


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "entries" not in obj:
        raise MalformedInputError('matrix JSON requires "dim" and "entries" keys')
    n = obj["dim"]
    if not isinstance(n, int) or n <= 0:
        raise MalformedInputError(f'"dim" must be a positive integer, got {n!r}')
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise MalformedInputError(f'"entries" must hold {n} rows')
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise MalformedInputError(f"row {i} must hold {n} entries")
        for j, item in enumerate(row):
            out[i, j] = _complex_from_pair(item)
    return out


def state_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "amplitudes" not in obj:
        raise MalformedInputError('state JSON requires "dim" and "amplitudes" keys')
    n = obj["dim"]
    amps = obj["amplitudes"]
    if not isinstance(n, int) or n <= 0:
        raise MalformedInputError(f'"dim" must be a positive integer, got {n!r}')
    if not isinstance(amps, list) or len(amps) != n:
        raise MalformedInputError(f'"amplitudes" must hold {n} entries')
    return np.array([_complex_from_pair(a) for a in amps])


def load_matrix(path: str) -> np.ndarray:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON in {path}: {exc}") from exc
    return matrix_from_json(obj)


def save_matrix(path: str, m: np.ndarray) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_json(m), fh)
        fh.write("\n")
