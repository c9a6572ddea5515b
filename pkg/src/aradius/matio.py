"""JSON codecs for matrices, bound parameters, and reports.

The matrix schema is ``{"name": str, "rows": int, "cols": int,
"data": [[[re, im], ...], ...]}`` — one ``[re, im]`` pair per entry.
Floats are emitted with Python's shortest-repr decimal encoding, which
round-trips every IEEE double exactly, so write-then-read is bitwise
faithful.
"""

from __future__ import annotations

import json
from typing import Mapping

import numpy as np

from .inequalities import BoundParams, BoundReport


class MatrixFormatError(ValueError):
    """Matrix JSON (or file containing it) is malformed."""


def complex_to_pairs(m) -> list:
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise MatrixFormatError("matrix data must be two-dimensional")
    return [[[float(z.real), float(z.imag)] for z in row] for row in arr]


def complex_from_pairs(data) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"ragged or non-numeric matrix data: {exc}") from None
    if arr.ndim != 3 or arr.shape[-1] != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise MatrixFormatError(
            "matrix data must be a non-empty nested array of [re, im] pairs"
        )
    if not np.all(np.isfinite(arr)):
        raise MatrixFormatError("matrix entries must be finite")
    return np.ascontiguousarray(arr[..., 0] + 1j * arr[..., 1])


def matrix_to_obj(name: str, m) -> dict:
    data = complex_to_pairs(m)
    return {"name": str(name), "rows": len(data), "cols": len(data[0]), "data": data}


def matrix_from_obj(obj) -> tuple[str, np.ndarray]:
    if not isinstance(obj, Mapping):
        raise MatrixFormatError("matrix object must be a JSON mapping")
    for key in ("name", "rows", "cols", "data"):
        if key not in obj:
            raise MatrixFormatError(f"matrix object is missing {key!r}")
    mat = complex_from_pairs(obj["data"])
    if mat.shape != (int(obj["rows"]), int(obj["cols"])):
        raise MatrixFormatError(
            f"declared shape {obj['rows']}x{obj['cols']} does not match data "
            f"shape {mat.shape[0]}x{mat.shape[1]}"
        )
    return str(obj["name"]), mat


def load_matrix(path) -> tuple[str, np.ndarray]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON in {path}: {exc}") from None
    return matrix_from_obj(obj)


def save_matrix(path, name: str, m) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_obj(name, m), fh, indent=2)
        fh.write("\n")


def params_to_obj(p: BoundParams) -> dict:
    return {
        "alpha": [float(p.alpha.real), float(p.alpha.imag)],
        "beta": float(p.beta),
        "r": float(p.r),
        "mu": float(p.mu),
        "lam": float(p.lam),
        "p": float(p.p),
        "q": float(p.q),
    }


def params_from_obj(obj) -> BoundParams:
    re_part, im_part = obj["alpha"]
    return BoundParams(
        alpha=complex(float(re_part), float(im_part)),
        beta=float(obj["beta"]),
        r=float(obj["r"]),
        mu=float(obj["mu"]),
        lam=float(obj["lam"]),
        p=float(obj["p"]),
        q=float(obj["q"]) if obj.get("q") is not None else None,
    )


def report_to_obj(rep: BoundReport) -> dict:
    return {
        "inequality_id": rep.inequality_id,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "slack": rep.slack,
        "rel_slack": rep.rel_slack,
        "intermediates": dict(rep.intermediates),
        "hypotheses_ok": rep.hypotheses_ok,
        "params": params_to_obj(rep.params),
    }
