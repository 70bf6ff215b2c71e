"""Designs, disjunct matrices, and the Kautz-Singleton group-testing pipeline.

Columns of a measurement matrix are supports of design sets; encoding is the
OR of the selected columns; decoding declares an item present iff every test
containing it came back positive.  For an L-disjunct matrix and inputs of
weight at most L, that decoder is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import caps
from .codes import Code, min_distance, reed_solomon
from .embeddings import bool_word
from .errors import DomainError, EnumerationCapError


@dataclass(frozen=True)
class Design:
    """N subsets of [ground_size], each of size set_size."""

    ground_size: int
    set_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for s in self.sets:
            if len(s) != self.set_size or len(set(s)) != self.set_size:
                raise DomainError("every set must have exactly set_size elements")
            if any(not (0 <= e < self.ground_size) for e in s):
                raise DomainError("set elements must lie in the ground set")


@dataclass(frozen=True)
class DesignReport:
    ground_size: int
    set_size: int
    max_intersection: int
    witness: tuple[int, int] | None

    def to_dict(self) -> dict:
        return {
            "property": "design",
            "n": self.ground_size,
            "n_prime": self.set_size,
            "r": self.max_intersection,
            "witness": None if self.witness is None else list(self.witness),
        }


@dataclass(frozen=True)
class DisjunctReport:
    order: int
    disjunct: bool
    witness: tuple[int, tuple[int, ...]] | None  # (covered column, covering set)
    tuples_checked: int

    def to_dict(self) -> dict:
        return {
            "property": "disjunct",
            "order": self.order,
            "disjunct": self.disjunct,
            "witness": None if self.witness is None
            else [self.witness[0], list(self.witness[1])],
            "subsets_checked": self.tuples_checked,
        }


def design_from_code(c: Code) -> Design:
    """Sets = supports of the Boolean embeddings of the codewords."""
    sets = tuple(
        tuple(int(i) for i in np.flatnonzero(bool_word(w))) for w in c.words
    )
    return Design(c.n * c.q, c.n, sets)


def verify_design(d: Design) -> DesignReport:
    """Exact max pairwise intersection size, with a witness pair."""
    if len(d.sets) < 2:
        return DesignReport(d.ground_size, d.set_size, 0, None)
    best, witness = -1, (0, 1)
    frozen = [set(s) for s in d.sets]
    for i, j in combinations(range(len(frozen)), 2):
        inter = len(frozen[i] & frozen[j])
        if inter > best:
            best, witness = inter, (i, j)
    return DesignReport(d.ground_size, d.set_size, best, witness)


def matrix_from_design(d: Design) -> np.ndarray:
    """0/1 matrix whose column i is the characteristic vector of set i."""
    m = np.zeros((d.ground_size, len(d.sets)), dtype=np.int64)
    for i, s in enumerate(d.sets):
        m[list(s), i] = 1
    return m


def _column_masks(m: np.ndarray) -> list[int]:
    masks = []
    for j in range(m.shape[1]):
        mask = 0
        for i in np.flatnonzero(m[:, j]):
            mask |= 1 << int(i)
        masks.append(mask)
    return masks


def verify_disjunct(m: np.ndarray, L: int, cap: int | None = None) -> DisjunctReport:
    """Exhaustive disjunctness check over every (target, L-set) choice."""
    m = np.asarray(m)
    n_cols = m.shape[1]
    if L + 1 > n_cols:
        raise DomainError(f"need L + 1 <= N, got L={L}, N={n_cols}")
    count = math.comb(n_cols - 1, L) * n_cols
    limit = caps.subset_cap(cap)
    if count > limit:
        raise EnumerationCapError(f"{count} choices exceed cap {limit}")
    masks = _column_masks(m)
    checked = 0
    for target in range(n_cols):
        others = [j for j in range(n_cols) if j != target]
        t = masks[target]
        for chosen in combinations(others, L):
            checked += 1
            union = 0
            for j in chosen:
                union |= masks[j]
            if t & ~union == 0:
                return DisjunctReport(L, False, (target, chosen), checked)
    return DisjunctReport(L, True, None, checked)


def max_disjunct_order(m: np.ndarray, cap: int | None = None) -> int:
    """Largest L for which the matrix is L-disjunct (0 if none)."""
    m = np.asarray(m)
    best = 0
    for L in range(1, m.shape[1]):
        if not verify_disjunct(m, L, cap).disjunct:
            break
        best = L
    return best


def gt_encode(m: np.ndarray, x: np.ndarray) -> np.ndarray:
    """OR-channel measurement: y(i) = OR_j (M[i,j] AND x[j])."""
    m = np.asarray(m)
    x = np.asarray(x)
    if x.shape != (m.shape[1],):
        raise DomainError(f"x must have length {m.shape[1]}")
    return ((m.astype(bool) & x.astype(bool)[None, :]).any(axis=1)).astype(np.int64)


def gt_decode_cover(m: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Cover decoder: item j present iff all tests containing j are positive.

    The output always contains the true support; for an L-disjunct matrix
    and inputs of weight <= L it equals it.
    """
    m = np.asarray(m)
    y = np.asarray(y)
    if y.shape != (m.shape[0],):
        raise DomainError(f"y must have length {m.shape[0]}")
    covered = ~(m.astype(bool) & ~y.astype(bool)[:, None]).any(axis=0)
    return covered.astype(np.int64)


def kautz_singleton(q: int, k: int) -> tuple[np.ndarray, dict]:
    """Reed-Solomon -> design -> disjunct matrix, with a provenance record.

    Yields a q^2 x q^k binary matrix that is L-disjunct for every L with
    L * k < q.
    """
    code = reed_solomon(q, k)
    design = design_from_code(code)
    matrix = matrix_from_design(design)
    # conservative guarantee L * k < q; the measured intersection bound is
    # k - 1, so the matrix is in fact at least this disjunct
    guaranteed = (q - 1) // k
    provenance = {
        "construction": "kautz-singleton",
        "q": q,
        "k": k,
        "block_length": code.n,
        "min_distance": min_distance(code).absolute if len(code) > 1 else None,
        "rows": int(matrix.shape[0]),
        "cols": int(matrix.shape[1]),
        "guaranteed_disjunct_order": int(guaranteed),
    }
    return matrix, provenance
