"""Cross-oracle checks run by ``kerov verify``."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .characters import dimension, mn_character, normalized_character
from .cumulants import free_cumulants, geometric_r3, geometric_r4
from .kerov import cumulant_polynomial, evaluate, kerov_polynomial, multi_kerov_polynomial, positivity_report
from .maps import embedding_count, enumerate_maps, stanley_character
from .partitions import Partition, dilate, partitions_up_to
from .polynomials import R
from .transport import transport_polynomial

KNOWN_KEROV = {
    2: R(3),
    3: R(4) + R(2),
    4: R(5) + 5 * R(3),
    5: R(6) + 15 * R(4) + 5 * R(2) ** 2 + 8 * R(2),
}
KNOWN_CH32 = R(3) * R(4) - 5 * R(2) * R(3) - 6 * R(5) - 18 * R(3)
KNOWN_COV32 = -(6 * R(2) * R(3) + 6 * R(5) + 18 * R(3))

LEVELS = {
    "quick": dict(max_n=6, max_k=4, positivity_k=5, homogeneity_n=4, audit_n=7),
    "full": dict(max_n=8, max_k=5, positivity_k=7, homogeneity_n=6, audit_n=10),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed_ms: int


def _kerov_known(p) -> str | None:
    for k, expected in KNOWN_KEROV.items():
        if kerov_polynomial(k) != expected:
            return f"Ch_{k}: got {kerov_polynomial(k)}"
    return None


def _triple(p) -> str | None:
    for lam in partitions_up_to(p["max_n"]):
        for k in range(1, p["max_k"] + 1):
            a = normalized_character(lam, (k,))
            b = stanley_character(lam, k)
            c = evaluate(kerov_polynomial(k), lam)
            if not a == b == c:
                return f"lambda={lam.rows} k={k}: MN={a} maps={b} cumulants={c}"
    return None


def _transport(p) -> str | None:
    for k in range(1, p["max_k"] + 1):
        if transport_polynomial(k) != kerov_polynomial(k):
            return f"k={k}: counts {transport_polynomial(k)} vs solve {kerov_polynomial(k)}"
    return None


def _covariance(p) -> str | None:
    if multi_kerov_polynomial((3, 2)) != KNOWN_CH32:
        return f"Ch_(3,2) = {multi_kerov_polynomial((3, 2))}"
    cov = cumulant_polynomial((3, 2))
    if cov != KNOWN_COV32:
        return f"Cov(Ch3, Ch2) = {cov}"
    if not positivity_report(-cov).ok:
        return "negated covariance has a negative coefficient"
    return None


def _positivity(p) -> str | None:
    for k in range(1, p["positivity_k"] + 1):
        report = positivity_report(kerov_polynomial(k))
        if not report.ok:
            return f"Ch_{k}: offending terms {report.offending}"
    return None


def _homogeneity(p) -> str | None:
    for lam in partitions_up_to(p["homogeneity_n"]):
        base = free_cumulants(lam, 6)
        for s in range(1, 5):
            scaled = free_cumulants(dilate(lam, s), 6)
            for k in range(1, 7):
                if scaled[k - 1] != s**k * base[k - 1]:
                    return f"R_{k} of {s}*{lam.rows}"
    for k in range(1, p["max_k"] + 1):
        stair = Partition(tuple(range(k, 0, -1)))
        for m in enumerate_maps(k):
            base = embedding_count(m, stair)
            for s in (2, 3):
                if embedding_count(m, dilate(stair, s)) != s ** (k + 1 - 2 * m.genus) * base:
                    return f"embedding count of {m} not of degree k+1-2g"
    return None


def _audit(p) -> str | None:
    for lam in partitions_up_to(p["audit_n"]):
        r = free_cumulants(lam, 4)
        if geometric_r3(lam) != r[2] or geometric_r4(lam) != r[3]:
            return f"geometric formula mismatch at {lam.rows}"
        if lam.n >= 2 and geometric_r4(lam, verbatim=True) == r[3]:
            return f"verbatim R4 unexpectedly matches at {lam.rows}"
    return None


def _mn_identity(p) -> str | None:
    for lam in partitions_up_to(p["audit_n"]):
        if mn_character(lam, (1,) * lam.n) != dimension(lam):
            return f"chi at identity != dimension for {lam.rows}"
    return None


CHECKS: dict[str, Callable[[dict], str | None]] = {
    "kerov-known-values": _kerov_known,
    "triple-oracle": _triple,
    "transport-coefficients": _transport,
    "covariance-identities": _covariance,
    "positivity": _positivity,
    "homogeneity-and-genus-degree": _homogeneity,
    "geometric-formula-audit": _audit,
    "mn-identity-vs-hook": _mn_identity,
}


def run_checks(level: str = "quick") -> list[CheckResult]:
    params = LEVELS[level]
    results = []
    for name, check in CHECKS.items():
        t0 = time.perf_counter()
        failure = check(params)
        ms = int(1000 * (time.perf_counter() - t0))
        results.append(CheckResult(name, failure is None, failure or "ok", ms))
    return results
