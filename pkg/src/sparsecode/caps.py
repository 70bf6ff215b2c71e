"""Enumeration caps guarding exhaustive certifiers.

Exceeding a cap is always an explicit error; there is no sampling fallback.
The SPARSECODE_CAP environment variable overrides the subset/center caps
globally (used by the CLI, honored everywhere).
"""

from __future__ import annotations

import os

DEFAULT_CODEWORD_CAP = 2**20
DEFAULT_SUBSET_CAP = 10**7
DEFAULT_CENTER_CAP = 2**22

_ENV_VAR = "SPARSECODE_CAP"


def _env_cap() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    return int(raw)


def subset_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return _env_cap() or DEFAULT_SUBSET_CAP


def codeword_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return _env_cap() or DEFAULT_CODEWORD_CAP


def center_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return _env_cap() or DEFAULT_CENTER_CAP
