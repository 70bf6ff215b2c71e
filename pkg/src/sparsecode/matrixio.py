"""Matrix file formats shared by the CLI and the certifiers.

Complex matrices: {"kind": "complex", "n": rows, "N": cols,
"entries": row-major [re, im] pairs}.  Binary matrices:
{"kind": "binary", "rows": ["0101", ...]}.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import DomainError


def write_matrix(m: np.ndarray, path: str | Path) -> None:
    m = np.asarray(m)
    if np.isrealobj(m) and np.isin(m, (0, 1)).all():
        payload = {
            "kind": "binary",
            "rows": ["".join(str(int(v)) for v in row) for row in m],
        }
    else:
        cm = m.astype(np.complex128)
        payload = {
            "kind": "complex",
            "n": int(cm.shape[0]),
            "N": int(cm.shape[1]),
            "entries": [[float(v.real), float(v.imag)] for v in cm.flatten()],
        }
    Path(path).write_text(json.dumps(payload) + "\n")


def read_matrix(path: str | Path) -> np.ndarray:
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed matrix file {path}: {exc}") from exc
    kind = payload.get("kind")
    if kind == "binary":
        rows = payload["rows"]
        if not rows:
            raise DomainError("binary matrix file has no rows")
        return np.array([[int(ch) for ch in row] for row in rows], dtype=np.int64)
    if kind == "complex":
        n, cols = int(payload["n"]), int(payload["N"])
        entries = payload["entries"]
        if len(entries) != n * cols:
            raise DomainError("entry count does not match declared shape")
        flat = np.array([complex(re, im) for re, im in entries])
        return flat.reshape(n, cols)
    raise DomainError(f"unknown matrix kind {kind!r}")
