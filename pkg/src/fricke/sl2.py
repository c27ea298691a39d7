"""Complex 2x2 matrix algebra for SL(2,C) word computations.

Matrices are numpy complex arrays of shape (2, 2).  Unimodularity is
validated at API boundaries (det within 1e-9 of 1), not inside inner loops;
inverses of group elements use the adjugate, which is exact for det = 1.
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

import numpy as np

from .errors import (
    ConicViolationError,
    ParabolicTraceError,
    ReduciblePairError,
    SingularMatrixError,
    TraceMismatchError,
)
from .poly import ComplexTriple
from .trace import J
from .words import FreeWord

__all__ = [
    "CentralizerParams",
    "adjugate",
    "centralizer_element",
    "centralizer_sample",
    "common_eigenvector_defect",
    "conjugate_pair",
    "conjugator_between",
    "det2",
    "eval_word",
    "identity2",
    "inverse",
    "mat2",
    "mat_from_json",
    "mat_to_json",
    "op_norm",
    "pi_map",
    "pi_triple",
    "projectively_equal",
    "random_lower_triangular",
    "random_sl2",
    "tr2",
    "tr_triple",
    "x_from",
    "y_t",
]

Mat2 = np.ndarray

UNIMODULAR_TOL = 1e-9


def mat2(a11: complex, a12: complex, a21: complex, a22: complex) -> Mat2:
    return np.array([[a11, a12], [a21, a22]], dtype=complex)


def identity2() -> Mat2:
    return np.eye(2, dtype=complex)


def det2(m: Mat2) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def tr2(m: Mat2) -> complex:
    return m[0, 0] + m[1, 1]


def adjugate(m: Mat2) -> Mat2:
    """[[d, -b], [-c, a]]; the inverse of a determinant-one matrix."""
    return np.array(
        [[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex
    )


def inverse(m: Mat2) -> Mat2:
    d = det2(m)
    if abs(d) <= 1e-12:
        raise SingularMatrixError(f"matrix is numerically singular (det={d})")
    return adjugate(m) / d


def op_norm(m: Mat2) -> float:
    """Operator (spectral) norm, closed form for 2x2."""
    f2 = float(np.sum(np.abs(m) ** 2))
    dd = abs(det2(m)) ** 2
    disc = max(f2 * f2 - 4.0 * dd, 0.0)
    return float(np.sqrt((f2 + np.sqrt(disc)) / 2.0))


def assert_unimodular(m: Mat2, tol: float = UNIMODULAR_TOL) -> None:
    d = det2(m)
    if abs(d - 1) >= tol:
        raise PreconditionFailure(f"matrix is not in SL(2,C): det={d}")


# validation failures at group-element boundaries reuse the shared hierarchy
from .errors import PreconditionError as PreconditionFailure  # noqa: E402


def eval_word(word: FreeWord, x: Mat2, y: Mat2) -> Mat2:
    """w(x, y) by left-to-right multiplication, adjugate for inverse letters."""
    acc = identity2()
    for gen, exp in word.syllables:
        base = x if gen == "x" else y
        if exp < 0:
            base = adjugate(base)
            exp = -exp
        acc = acc @ np.linalg.matrix_power(base, exp)
    return acc


def tr_triple(x: Mat2, y: Mat2) -> ComplexTriple:
    """(tr x, tr y, tr xy)."""
    u = (
        x[0, 0] * y[0, 0]
        + x[0, 1] * y[1, 0]
        + x[1, 0] * y[0, 1]
        + x[1, 1] * y[1, 1]
    )
    return ComplexTriple(complex(tr2(x)), complex(tr2(y)), complex(u))


def _std_normal_complex(rng: np.random.Generator) -> complex:
    return complex(rng.standard_normal(), rng.standard_normal())


def random_sl2(rng: np.random.Generator) -> Mat2:
    """Random SL(2,C) element: normal a, b, c (|a| >= 0.1), d = (1 + bc)/a."""
    while True:
        a = _std_normal_complex(rng)
        if abs(a) >= 0.1:
            break
    b = _std_normal_complex(rng)
    c = _std_normal_complex(rng)
    d = (1 + b * c) / a
    return mat2(a, b, c, d)


def random_lower_triangular(rng: np.random.Generator) -> Mat2:
    """Random lower-triangular determinant-one matrix."""
    while True:
        lam = _std_normal_complex(rng)
        if abs(lam) >= 0.1:
            break
    r = _std_normal_complex(rng)
    return mat2(lam, 0, r, 1 / lam)


def y_t(t: complex) -> Mat2:
    """The normalized trace-t element [[t, 1], [-1, 0]]."""
    return mat2(t, 1, -1, 0)


def x_from(a: complex, b: complex, pt: ComplexTriple) -> Mat2:
    """[[a, b], [u + b - a t, s - a]]; with y_t(t) it realizes traces (s, t, u).

    (a, b) must satisfy the determinant-one conic a(s-a) - b(u+b-at) = 1.
    """
    s, t, u = pt
    residual = a * (s - a) - b * (u + b - a * t) - 1
    if abs(residual) >= 1e-9:
        raise ConicViolationError(
            f"(a, b) violates the conic a(s-a) - b(u+b-at) = 1 by {abs(residual):.3e}"
        )
    return mat2(a, b, u + b - a * t, s - a)


def conjugate_pair(z: Mat2, x: Mat2, y: Mat2) -> tuple[Mat2, Mat2]:
    """(z x z^-1, z y z^-1)."""
    zi = inverse(z)
    return z @ x @ zi, z @ y @ zi


def common_eigenvector_defect(x: Mat2, y: Mat2) -> complex:
    """J(tr x, tr y, tr xy); approximately zero iff x, y share an eigenvector."""
    return J().evaluate(*tr_triple(x, y))


def pi_triple(x: Mat2, y: Mat2) -> np.ndarray:
    """Projective coordinates (a_x b_y + b_x (t - a_y) : b_x : b_y) of the
    conjugation-quotient map, normalized so the largest-modulus entry is 1."""
    t = tr2(y)
    v = np.array(
        [x[0, 0] * y[0, 1] + x[0, 1] * (t - y[0, 0]), x[0, 1], y[0, 1]],
        dtype=complex,
    )
    mags = np.abs(v)
    idx = int(np.argmax(mags))
    if mags[idx] < 1e-12:
        raise ReduciblePairError(
            "projective image degenerates (b_x = b_y = 0 with a triangular pair)"
        )
    return v / v[idx]


def pi_map(x: Mat2, y: Mat2, j_tol: float = 1e-9) -> tuple[ComplexTriple, np.ndarray]:
    """The quotient map by simultaneous lower-triangular conjugation.

    Returns the trace triple and the normalized fiber coordinates; requires
    the pair off the reducible locus (|J| > j_tol).
    """
    triple = tr_triple(x, y)
    jval = J().evaluate(*triple)
    if abs(jval) <= j_tol:
        raise ReduciblePairError(
            f"pair is reducible within tolerance (J = {jval:.3e})"
        )
    return triple, pi_triple(x, y)


def projectively_equal(p: np.ndarray, q: np.ndarray, tol: float = 1e-7) -> bool:
    """Componentwise comparison after largest-modulus normalization."""
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    p = p / p[int(np.argmax(np.abs(p)))]
    q = q / q[int(np.argmax(np.abs(q)))]
    return bool(np.max(np.abs(p - q)) < tol)


class CentralizerParams(NamedTuple):
    """Parameters (t, gamma, delta) with gamma^2 - (t^2 - 4) delta^2 = 4."""

    t: complex
    gamma: complex
    delta: complex


def centralizer_sample(t: complex, delta: complex, branch: int = 1) -> CentralizerParams:
    """Parameters of a centralizer element of y_t with the given delta.

    gamma = branch * principal sqrt of 4 + (t^2 - 4) delta^2.
    """
    gamma = branch * cmath.sqrt(4 + (t * t - 4) * delta * delta)
    return CentralizerParams(t, gamma, delta)


def centralizer_element(params: CentralizerParams) -> Mat2:
    """[[(gamma + t delta)/2, delta], [-delta, (gamma - t delta)/2]]."""
    t, gamma, delta = params
    defect = gamma * gamma - (t * t - 4) * delta * delta - 4
    if abs(defect) >= 1e-9:
        raise PreconditionFailure(
            f"centralizer parameters violate gamma^2-(t^2-4)delta^2=4 by {abs(defect):.3e}"
        )
    return mat2((gamma + t * delta) / 2, delta, -delta, (gamma - t * delta) / 2)


def _eigenvector(m: Mat2, lam: complex) -> np.ndarray:
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    v1 = np.array([b, lam - a], dtype=complex)
    v2 = np.array([lam - d, c], dtype=complex)
    v = v1 if np.linalg.norm(v1) >= np.linalg.norm(v2) else v2
    n = np.linalg.norm(v)
    if n < 1e-150:
        raise ParabolicTraceError("no usable eigenvector (matrix is scalar-like)")
    return v / n


def conjugator_between(g1: Mat2, g2: Mat2) -> Mat2:
    """Determinant-one C with C g1 C^-1 = g2 for equal traces != +-2.

    Both matrices are diagonalized with the eigenvalue
    (trace + principal sqrt(trace^2 - 4)) / 2 listed first; C = V2 V1^-1,
    rescaled by 1/sqrt(det) to land in SL(2,C).
    """
    t1, t2 = tr2(g1), tr2(g2)
    if abs(t1 - t2) >= 1e-8:
        raise TraceMismatchError(f"traces differ: {t1} vs {t2}")
    alpha = (t1 + t2) / 2
    disc = alpha * alpha - 4
    if abs(disc) <= 1e-8:
        raise ParabolicTraceError(f"trace {alpha} is parabolic/central within tolerance")
    root = cmath.sqrt(disc)
    lam = (alpha + root) / 2
    mu = (alpha - root) / 2
    v1 = np.column_stack([_eigenvector(g1, lam), _eigenvector(g1, mu)])
    v2 = np.column_stack([_eigenvector(g2, lam), _eigenvector(g2, mu)])
    c = v2 @ adjugate(v1) / det2(v1)
    scale = cmath.sqrt(det2(c))
    if abs(scale) < 1e-150:
        raise ParabolicTraceError("conjugator collapsed to a singular matrix")
    return c / scale


def mat_to_json(m: Mat2) -> list:
    """Row-major [[re, im] pairs] nesting."""
    return [[[float(m[i, j].real), float(m[i, j].imag)] for j in range(2)] for i in range(2)]


def mat_from_json(data) -> Mat2:
    return np.array(
        [[complex(*data[i][j]) for j in range(2)] for i in range(2)], dtype=complex
    )
