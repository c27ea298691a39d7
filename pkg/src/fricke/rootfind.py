"""Complex roots of small univariate polynomials.

Companion-matrix eigenvalues followed by one Newton polishing step; optional
merging of near-coincident roots.  Degrees here are tiny (singular loci,
fiber directions), where this approach is robust.
"""

from __future__ import annotations

import numpy as np

__all__ = ["complex_roots"]


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    acc = 0j
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def complex_roots(
    coeffs, merge_tol: float | None = None, newton_steps: int = 1
) -> list[complex]:
    """All complex roots of sum(coeffs[k] * z**k).

    ``coeffs`` is ascending; exact trailing zeros are stripped.  Roots closer
    than ``merge_tol`` (absolute) are merged, keeping the first of each
    cluster.  Returned sorted by (real, imag).
    """
    c = np.asarray(list(coeffs), dtype=complex)
    while len(c) > 1 and c[-1] == 0:
        c = c[:-1]
    if len(c) <= 1:
        return []
    monic = c / c[-1]
    n = len(monic) - 1
    companion = np.zeros((n, n), dtype=complex)
    if n > 1:
        companion[1:, :-1] = np.eye(n - 1)
    companion[:, -1] = -monic[:-1]
    roots = np.linalg.eigvals(companion)

    deriv = c[1:] * np.arange(1, len(c))
    polished = []
    for z in roots:
        z = complex(z)
        for _ in range(newton_steps):
            dp = _horner(deriv, z)
            if abs(dp) < 1e-300:
                break
            z = z - _horner(c, z) / dp
        polished.append(z)
    polished.sort(key=lambda w: (w.real, w.imag))

    if merge_tol is None:
        return polished
    kept: list[complex] = []
    for z in polished:
        if all(abs(z - w) > merge_tol for w in kept):
            kept.append(z)
    return kept
