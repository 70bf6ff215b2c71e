"""List-decodability certification and the distance <-> list-size lemmas.

All certification is exhaustive over center words; radii are discretized as
floor(rho * n).  The Johnson-type implication and its weak converse are
encoded with the explicit constants extracted from their proofs and are
required to hold with zero counterexamples on every checkable code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import caps
from .certify import bias_factor_from_flat, flat_rip_constant, FLAT_FROM_RIP_FACTOR
from .codes import Code, lwise_bias, lwise_distance
from .embeddings import sph_inverse_binary
from .errors import DomainError, EnumerationCapError
from .words import Word

_CENTER_CHUNK = 4096


@dataclass(frozen=True)
class ListDecodingReport:
    radius: float
    absolute_radius: int
    max_list_size: int
    worst_center: Word
    centers_checked: int

    def to_dict(self) -> dict:
        return {
            "property": "list-decode",
            "radius": self.radius,
            "absolute_radius": self.absolute_radius,
            "max_list_size": self.max_list_size,
            "worst_center": list(self.worst_center.symbols),
            "centers_checked": self.centers_checked,
        }


@dataclass(frozen=True)
class ImplicationReport:
    """Premise/conclusion values of a certified implication.

    verdict is "pass" when premise and conclusion both hold, "vacuous" when
    the premise fails, "not-applicable" when the premise cannot even be
    evaluated at the requested parameters, and "fail" on a counterexample.
    """

    name: str
    premise_value: float | None
    premise_threshold: float | None
    conclusion_value: float | None
    conclusion_threshold: float | None
    verdict: str
    detail: dict

    def to_dict(self) -> dict:
        return {
            "property": self.name,
            "premise_value": self.premise_value,
            "premise_threshold": self.premise_threshold,
            "conclusion_value": self.conclusion_value,
            "conclusion_threshold": self.conclusion_threshold,
            "verdict": self.verdict,
            **self.detail,
        }


def list_sizes_at_radii(
    c: Code, radii: list[int], cap: int | None = None
) -> list[tuple[int, Word]]:
    """Max codeword count of any Hamming ball, for several radii in one sweep.

    Returns (max_list_size, first worst center) per radius, enumerating all
    q^n centers exhaustively.
    """
    total = c.q**c.n
    limit = caps.center_cap(cap)
    if total > limit:
        raise EnumerationCapError(f"{total} centers exceed cap {limit}")
    words = c.array()
    best = [-1] * len(radii)
    witness: list[Word | None] = [None] * len(radii)
    centers = product(range(c.q), repeat=c.n)
    while True:
        chunk = []
        for _ in range(_CENTER_CHUNK):
            nxt = next(centers, None)
            if nxt is None:
                break
            chunk.append(nxt)
        if not chunk:
            break
        arr = np.array(chunk, dtype=np.int64)
        dists = (arr[:, None, :] != words[None, :, :]).sum(axis=2)
        for ri, r in enumerate(radii):
            counts = (dists <= r).sum(axis=1)
            pos = int(np.argmax(counts))
            if int(counts[pos]) > best[ri]:
                best[ri] = int(counts[pos])
                witness[ri] = Word(c.q, tuple(int(s) for s in arr[pos]))
    return [(best[i], witness[i]) for i in range(len(radii))]


def list_size_at_radius(c: Code, rho: float, cap: int | None = None) -> ListDecodingReport:
    """Max |ball(x, floor(rho*n)) intersect C| over all centers x."""
    if not (0.0 <= rho <= 1.0):
        raise DomainError(f"radius must lie in [0, 1], got {rho}")
    radius = math.floor(rho * c.n + 1e-12)
    (size, center), = list_sizes_at_radii(c, [radius], cap)
    return ListDecodingReport(rho, radius, size, center, c.q**c.n)


def johnson_check(c: Code, epsilon: float, cap: int | None = None) -> ImplicationReport:
    """Distance-to-list-decoding implication with the proof's constants.

    Premise: the L'-wise distance is at least 1/2 - eps^2 for
    L' = floor(1/eps^2) + 1 (monotonicity covers larger tuples).
    Conclusion: no ball of relative radius 1/2 - eps holds more than
    1/eps^2 codewords.
    """
    if c.q != 2:
        raise DomainError("the Johnson-type check applies to binary codes")
    if not (0.0 < epsilon < 1.0 / math.sqrt(2.0)):
        raise DomainError("need 0 < epsilon with epsilon^2 < 1/2")
    l_prime = math.floor(1.0 / epsilon**2) + 1
    list_bound = math.floor(1.0 / epsilon**2)
    detail = {"L_prime": l_prime, "epsilon": epsilon}
    if l_prime > len(c):
        # fewer codewords than the premise tuple size: the list bound
        # already dominates the code size, record as not-applicable
        return ImplicationReport(
            "johnson", None, 0.5 - epsilon**2, None, float(list_bound),
            "not-applicable", detail,
        )
    premise = lwise_distance(c, l_prime, cap).relative
    threshold = 0.5 - epsilon**2
    rho = max(0.5 - epsilon, 0.0)
    report = list_size_at_radius(c, rho, cap)
    conclusion = report.max_list_size
    detail["radius"] = report.absolute_radius
    if premise < threshold - 1e-12:
        return ImplicationReport(
            "johnson", premise, threshold, float(conclusion), float(list_bound),
            "vacuous", detail,
        )
    verdict = "pass" if conclusion <= list_bound else "fail"
    return ImplicationReport(
        "johnson", premise, threshold, float(conclusion), float(list_bound),
        verdict, detail,
    )


def converse_check(
    c: Code, L: int, epsilon: float, cap: int | None = None
) -> ImplicationReport:
    """List-decoding-to-distance converse with the proof's constants.

    Premise: every ball of relative radius 1/2 - eps holds fewer than L
    codewords.  Conclusion: the ceil(L/eps)-wise distance is at least
    1/2 - 2*eps.
    """
    if c.q != 2:
        raise DomainError("the converse check applies to binary codes")
    if not (0.0 < epsilon <= 0.5):
        raise DomainError("need 0 < epsilon <= 1/2")
    l_prime = math.ceil(L / epsilon)
    detail = {"L": L, "L_prime": l_prime, "epsilon": epsilon}
    if l_prime > len(c):
        return ImplicationReport(
            "johnson-converse", None, None, None, None, "not-applicable", detail,
        )
    rho = max(0.5 - epsilon, 0.0)
    report = list_size_at_radius(c, rho, cap)
    premise = report.max_list_size
    detail["radius"] = report.absolute_radius
    conclusion = lwise_distance(c, l_prime, cap).relative
    threshold = 0.5 - 2.0 * epsilon
    if premise >= L:
        return ImplicationReport(
            "johnson-converse", float(premise), float(L), conclusion, threshold,
            "vacuous", detail,
        )
    verdict = "pass" if conclusion >= threshold - 1e-12 else "fail"
    return ImplicationReport(
        "johnson-converse", float(premise), float(L), conclusion, threshold,
        verdict, detail,
    )


def pipeline_epsilon_floor(L: int) -> tuple[float, bool]:
    """Smallest certified radius parameter for the RIP -> list-decoding chain.

    The chain certifies bias only up to tuples of size floor(L/2), so the
    Johnson step needs floor(1/eps^2) + 1 <= floor(L/2), i.e.
    eps >= 1/sqrt(floor(L/2) - 1).  Returns (eps_0, attainable).
    """
    half = L // 2
    if half < 2:
        return 1.0, False
    eps = 1.0 / math.sqrt(half - 1)
    # the Johnson step additionally needs eps^2 < 1/2
    return eps, eps < 1.0 / math.sqrt(2.0)


def rip_to_listdecoding_report(
    m: np.ndarray, L: int, alpha: float, epsilon: float, cap: int | None = None
) -> dict:
    """Run the full RIP -> flat RIP -> bias -> list-decoding pipeline.

    Recovers the binary code behind a +-1/sqrt(n) matrix, measures each
    intermediate constant, and reports it next to the bound the previous
    stage predicts for it.
    """
    m = np.asarray(m, dtype=np.complex128)
    code = Code(sph_inverse_binary(m[:, j]) for j in range(m.shape[1]))
    if len(code) != m.shape[1]:
        raise DomainError("matrix has duplicate columns")
    l0 = max(L // 2, 1)
    l0 = min(l0, m.shape[1] // 2)
    if l0 < 1:
        raise DomainError("matrix has too few columns for the pipeline")
    flat = flat_rip_constant(m, l0, cap)
    flat_bound = FLAT_FROM_RIP_FACTOR * alpha
    bias_stages = []
    for l_bias in range(2, l0 + 1):
        measured = lwise_bias(code, l_bias, cap)
        predicted = bias_factor_from_flat(l_bias) * flat.constant / l_bias
        bias_stages.append(
            {
                "L": l_bias,
                "measured_bias": measured,
                "predicted_bound": predicted,
                "ok": measured <= predicted + 1e-9,
            }
        )
    eps0, attainable = pipeline_epsilon_floor(L)
    johnson = johnson_check(code, epsilon, cap)
    return {
        "property": "rip-to-list-decoding",
        "order": L,
        "claimed_rip_constant": alpha,
        "flat_constant": flat.constant,
        "flat_predicted_bound": flat_bound,
        "flat_ok": flat.constant <= flat_bound + 1e-9,
        "bias_stages": bias_stages,
        "epsilon": epsilon,
        "epsilon_floor": eps0,
        "epsilon_floor_attainable": attainable,
        "epsilon_above_floor": attainable and epsilon >= eps0 - 1e-12,
        "johnson": johnson.to_dict(),
    }
