"""Symbolic trace polynomials of words on SL(2,C).

For x, y in SL(2,C) the algebra they generate is spanned by {1, x, y, xy},
and Cayley-Hamilton (m^2 = tr(m) m - 1) closes multiplication over
Z[s, t, u] with s = tr x, t = tr y, u = tr(xy).  Folding a word through
this basis calculus yields its Fricke trace polynomial P_w exactly:
tr w(x, y) = P_w(s, t, u) for all pairs (x, y).

Also here: Dickson polynomials D_k, E_k (parameter a = 1), the derived
phi_k = E_{k-1}, the reducibility discriminant J, and the singular-locus
data of the hypersurfaces {P_[x^n,y^m] = alpha}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .poly import ComplexTriple, TracePoly
from .rootfind import complex_roots
from .words import FreeWord

__all__ = [
    "J",
    "SingularData",
    "SymbolicSL2",
    "commutator_quotient",
    "dickson",
    "identity_element",
    "mul_basis",
    "phi",
    "power_word_u_coeff",
    "singular_sets",
    "surface_gradient",
    "symbolic_word",
    "trace_of",
    "trace_polynomial",
]

_S = TracePoly.variable("s")
_T = TracePoly.variable("t")
_U = TracePoly.variable("u")
_ONE = TracePoly.one()


class SymbolicSL2(NamedTuple):
    """Coefficients (p0, p1, p2, p3) of an element in the basis {1, x, y, xy}."""

    p0: TracePoly
    p1: TracePoly
    p2: TracePoly
    p3: TracePoly


def identity_element() -> SymbolicSL2:
    z = TracePoly.zero()
    return SymbolicSL2(_ONE, z, z, z)


def _mul_x(m: SymbolicSL2) -> SymbolicSL2:
    # 1*x = x;  x*x = s x - 1;  y*x = s y + t x + (u - s t) - xy;
    # (xy)*x = u x + y - t
    p0, p1, p2, p3 = m
    return SymbolicSL2(
        -p1 + (_U - _S * _T) * p2 - _T * p3,
        p0 + _S * p1 + _T * p2 + _U * p3,
        _S * p2 + p3,
        -p2,
    )


def _mul_y(m: SymbolicSL2) -> SymbolicSL2:
    # 1*y = y;  x*y = xy;  y*y = t y - 1;  (xy)*y = t xy - x
    p0, p1, p2, p3 = m
    return SymbolicSL2(
        -p2,
        -p3,
        p0 + _T * p2,
        p1 + _T * p3,
    )


def _scale(m: SymbolicSL2, factor: TracePoly) -> SymbolicSL2:
    return SymbolicSL2(*(factor * p for p in m))


def _sub(a: SymbolicSL2, b: SymbolicSL2) -> SymbolicSL2:
    return SymbolicSL2(*(pa - pb for pa, pb in zip(a, b)))


def mul_basis(m: SymbolicSL2, generator: str, inverse: bool = False) -> SymbolicSL2:
    """Right-multiply by x, y, or their inverses (x^-1 = s - x, y^-1 = t - y)."""
    if generator == "x":
        product = _mul_x(m)
        if not inverse:
            return product
        return _sub(_scale(m, _S), product)
    if generator == "y":
        product = _mul_y(m)
        if not inverse:
            return product
        return _sub(_scale(m, _T), product)
    raise ValueError(f"unknown generator {generator!r}")


def trace_of(m: SymbolicSL2) -> TracePoly:
    """tr(p0 + p1 x + p2 y + p3 xy) = 2 p0 + s p1 + t p2 + u p3."""
    return 2 * m.p0 + _S * m.p1 + _T * m.p2 + _U * m.p3


def symbolic_word(word: FreeWord) -> SymbolicSL2:
    """The image of a word in the {1, x, y, xy} basis."""
    m = identity_element()
    for gen, step in word.letters():
        m = mul_basis(m, gen, inverse=step < 0)
    return m


@lru_cache(maxsize=None)
def trace_polynomial(word: FreeWord) -> TracePoly:
    """The Fricke trace polynomial P_w with tr w(x,y) = P_w(s, t, u)."""
    return trace_of(symbolic_word(word))


_J = TracePoly(
    {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 1): -1, (0, 0, 0): -4}
)


def J() -> TracePoly:
    """s^2 + t^2 + u^2 - s t u - 4; vanishes iff the pair shares an eigenvector."""
    return _J


@lru_cache(maxsize=None)
def dickson(kind: str, k: int, var: str = "s") -> TracePoly:
    """Dickson polynomial D_k or E_k with parameter a = 1, in ``var``.

    D_0 = 2, D_1 = x, D_k = x D_{k-1} - D_{k-2}; E likewise from E_0 = 1.
    D_k(s) is the trace of the k-th power of a trace-s element of SL(2,C).
    """
    if kind not in ("D", "E"):
        raise ValueError("kind must be 'D' or 'E'")
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = TracePoly.variable(var)
    prev = TracePoly.constant(2) if kind == "D" else TracePoly.one()
    if k == 0:
        return prev
    cur = x
    for _ in range(k - 1):
        prev, cur = cur, x * cur - prev
    return cur


def phi(k: int, var: str = "s") -> TracePoly:
    """phi_k = E_{k-1}(., 1); the u-coefficient building block of P_{x^n y^m}."""
    if k < 1:
        raise ValueError("k must be positive")
    return dickson("E", k - 1, var)


def _power_word(n: int, m: int) -> FreeWord:
    return FreeWord([("x", n), ("y", m)])


def power_word_u_coeff(n: int, m: int) -> tuple[int, TracePoly]:
    """Sign and magnitude of the u-coefficient of P_{x^n y^m}.

    P_{x^n y^m} = u * f(s, t) + h(s, t) with f = sign * phi_|n|(s) phi_|m|(t);
    returns (sign, phi_|n|(s) phi_|m|(t)).
    """
    if n == 0 or m == 0:
        raise ValueError("n and m must be nonzero")
    p = trace_polynomial(_power_word(n, m))
    if p.degree_in("u") != 1:
        raise AssertionError(f"P_(x^{n} y^{m}) is not linear in u")
    coeff = p.coefficient_in("u", 1)
    magnitude = phi(abs(n), "s") * phi(abs(m), "t")
    if coeff == magnitude:
        return 1, magnitude
    if coeff == -magnitude:
        return -1, magnitude
    raise AssertionError(f"u-coefficient of P_(x^{n} y^{m}) is not +-phi*phi")


def commutator_quotient(n: int, m: int) -> TracePoly:
    """Q with P_[x^n, y^m] - 2 = Q * J; equals (phi_|n|(s) phi_|m|(t))^2."""
    if n == 0 or m == 0:
        raise ValueError("n and m must be nonzero")
    word = FreeWord([("x", n), ("y", m), ("x", -n), ("y", -m)])
    p = trace_polynomial(word)
    q = (p - 2).div_exact(_J)
    if q is None:
        raise AssertionError(f"P_[x^{n},y^{m}] - 2 is not divisible by J")
    expected = (phi(abs(n), "s") * phi(abs(m), "t")) ** 2
    if q != expected:
        raise AssertionError(f"quotient for [x^{n},y^{m}] is not (phi phi)^2")
    return q


class SingularData(NamedTuple):
    """Critical trace values controlling singularities of {P_[x^n,y^m] = alpha}.

    ``a_n``/``a_m`` are the roots of (v^2-4) phi_k'(v) + v phi_k(v) for
    k = n (variable s) and k = m (variable t); ``b_nm`` the induced alpha
    values.  Singular surfaces require alpha in b_nm.
    """

    a_n: tuple[complex, ...]
    a_m: tuple[complex, ...]
    b_nm: tuple[complex, ...]


def _critical_roots(k: int) -> list[complex]:
    p = phi(k, "s")
    crit = (TracePoly.variable("s", 2) - 4) * p.partial("s") + _S * p
    coeffs = crit.univariate_in("s", {"t": 0, "u": 0})
    return complex_roots(coeffs, merge_tol=1e-7)


def singular_sets(n: int, m: int) -> SingularData:
    """Candidate singular trace data for the surface {P_[x^n,y^m] = alpha}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    a_n = _critical_roots(n)
    a_m = _critical_roots(m) if m != n else list(a_n)
    if len(a_n) > n + 1 or len(a_m) > m + 1:
        raise AssertionError("critical root count exceeds the n+1 bound")
    phi_n = phi(n, "s")
    phi_m = phi(m, "s")
    alphas: list[complex] = []
    for si in a_n:
        for tj in a_m:
            prod = phi_n.evaluate(si, 0, 0) * phi_m.evaluate(tj, 0, 0)
            val = 2 - prod * prod * (si * si - 4) * (tj * tj - 4) / 4
            if all(abs(val - seen) > 1e-7 for seen in alphas):
                alphas.append(val)
    alphas.sort(key=lambda z: (z.real, z.imag))
    if len(alphas) > (n + 1) * (m + 1):
        raise AssertionError("alpha count exceeds the (n+1)(m+1) bound")
    return SingularData(tuple(a_n), tuple(a_m), tuple(alphas))


def surface_gradient(
    p: TracePoly, pt: ComplexTriple
) -> tuple[complex, complex, complex]:
    """(dP/ds, dP/dt, dP/du) evaluated at the point."""
    return (
        p.partial("s").evaluate(*pt),
        p.partial("t").evaluate(*pt),
        p.partial("u").evaluate(*pt),
    )
