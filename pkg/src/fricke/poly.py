"""Exact sparse polynomials in the trace coordinates s, t, u.

Coefficients are arbitrary-precision Python integers; a polynomial is a map
from exponent triples (es, et, eu) to nonzero coefficients, so equality of
the term maps is equality of polynomials.  Complex evaluation converts the
exact coefficients to double precision and runs a sparse Horner scheme, one
variable at a time.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

__all__ = ["ComplexTriple", "TracePoly", "S", "T", "U"]

VARIABLES = ("s", "t", "u")
_AXIS = {"s": 0, "t": 1, "u": 2}


class ComplexTriple(NamedTuple):
    """A point (s, t, u) of affine 3-space over the complex numbers."""

    s: complex
    t: complex
    u: complex


def _grlex(expo: tuple[int, int, int]) -> tuple[int, tuple[int, int, int]]:
    # graded lexicographic with s > t > u; used to pick leading terms
    return (expo[0] + expo[1] + expo[2], expo)


def _print_key(expo: tuple[int, int, int]):
    # display order: highest single-variable power first, then total degree,
    # then s before t before u; matches how Fricke polynomials are usually
    # written (s^2 + t^2 + u^2 - s*t*u - 2)
    es, et, eu = expo
    return (-max(expo), -(es + et + eu), (-es, -et, -eu))


class TracePoly:
    """Element of Z[s, t, u] stored sparsely in canonical form."""

    __slots__ = ("_terms", "_horner")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[tuple[int, int, int], int] = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = int(coeff)
                if coeff == 0:
                    continue
                es, et, eu = expo
                if es < 0 or et < 0 or eu < 0:
                    raise ValueError(f"negative exponent in {expo}")
                clean[(int(es), int(et), int(eu))] = coeff
        self._terms = clean
        self._horner = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "TracePoly":
        return cls()

    @classmethod
    def one(cls) -> "TracePoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "TracePoly":
        return cls({(0, 0, 0): int(c)})

    @classmethod
    def variable(cls, name: str, power: int = 1) -> "TracePoly":
        if name not in _AXIS:
            raise ValueError(f"unknown variable {name!r}")
        expo = [0, 0, 0]
        expo[_AXIS[name]] = power
        return cls({tuple(expo): 1})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int, int], int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(expo == (0, 0, 0) for expo in self._terms)

    def constant_coefficient(self) -> int:
        return self._terms.get((0, 0, 0), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: str) -> int:
        if not self._terms:
            return -1
        axis = _AXIS[var]
        return max(e[axis] for e in self._terms)

    def coefficient_in(self, var: str, k: int) -> "TracePoly":
        """The coefficient of var**k, a polynomial in the other variables."""
        axis = _AXIS[var]
        out: dict[tuple[int, int, int], int] = {}
        for expo, c in self._terms.items():
            if expo[axis] == k:
                reduced = list(expo)
                reduced[axis] = 0
                out[tuple(reduced)] = c
        return TracePoly(out)

    # -- ring arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "TracePoly | None":
        if isinstance(value, TracePoly):
            return value
        if isinstance(value, int):
            return TracePoly.constant(value)
        return None

    def __add__(self, other) -> "TracePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for expo, c in other._terms.items():
            v = out.get(expo, 0) + c
            if v:
                out[expo] = v
            else:
                out.pop(expo, None)
        return TracePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TracePoly":
        return TracePoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "TracePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TracePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "TracePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int, int], int] = {}
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                v = out.get(key, 0) + ca * cb
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return TracePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TracePoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TracePoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- calculus and evaluation --------------------------------------------

    def partial(self, var: str) -> "TracePoly":
        """Formal partial derivative with respect to ``var``."""
        axis = _AXIS[var]
        out: dict[tuple[int, int, int], int] = {}
        for expo, c in self._terms.items():
            k = expo[axis]
            if k == 0:
                continue
            reduced = list(expo)
            reduced[axis] = k - 1
            key = tuple(reduced)
            out[key] = out.get(key, 0) + c * k
        return TracePoly(out)

    def _horner_form(self):
        if self._horner is None:
            by_s: dict[int, dict[int, dict[int, int]]] = {}
            for (es, et, eu), c in self._terms.items():
                by_s.setdefault(es, {}).setdefault(et, {})[eu] = c
            self._horner = tuple(
                (
                    es,
                    tuple(
                        (et, tuple(sorted(by_u.items(), reverse=True)))
                        for et, by_u in sorted(by_t.items(), reverse=True)
                    ),
                )
                for es, by_t in sorted(by_s.items(), reverse=True)
            )
        return self._horner

    @staticmethod
    def _horner_1d(entries, value: complex) -> complex:
        acc = 0j
        prev = None
        for e, c in entries:
            acc = complex(c) if prev is None else acc * value ** (prev - e) + complex(c)
            prev = e
        if prev:
            acc *= value**prev
        return acc

    def evaluate(self, s: complex, t: complex, u: complex) -> complex:
        """Evaluate at a complex point (sparse Horner in s, then t, then u)."""
        acc = 0j
        prev = None
        for es, t_part in self._horner_form():
            inner = 0j
            prev_t = None
            for et, u_entries in t_part:
                val_u = self._horner_1d(u_entries, u)
                inner = val_u if prev_t is None else inner * t ** (prev_t - et) + val_u
                prev_t = et
            if prev_t:
                inner *= t**prev_t
            acc = inner if prev is None else acc * s ** (prev - es) + inner
            prev = es
        if prev:
            acc *= s**prev
        return acc

    def div_exact(self, divisor: "TracePoly") -> "TracePoly | None":
        """Exact quotient self / divisor over Z[s,t,u], or None.

        Single-divisor reduction in graded-lex order; since an exact multiple
        keeps a divisible leading term at every step, the first non-divisible
        leading term (monomial or integer coefficient) proves inexactness.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_q = max(divisor._terms, key=_grlex)
        lead_qc = divisor._terms[lead_q]
        rem = dict(self._terms)
        quot: dict[tuple[int, int, int], int] = {}
        while rem:
            lead_r = max(rem, key=_grlex)
            shift = (
                lead_r[0] - lead_q[0],
                lead_r[1] - lead_q[1],
                lead_r[2] - lead_q[2],
            )
            if min(shift) < 0:
                return None
            qc, residue = divmod(rem[lead_r], lead_qc)
            if residue:
                return None
            quot[shift] = qc
            for expo, c in divisor._terms.items():
                key = (expo[0] + shift[0], expo[1] + shift[1], expo[2] + shift[2])
                v = rem.get(key, 0) - qc * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return TracePoly(quot)

    def univariate_in(self, var: str, values: Mapping[str, complex]) -> list[complex]:
        """Dense ascending coefficient list in ``var`` after substituting the
        other two variables with the complex ``values``."""
        axis = _AXIS[var]
        others = [v for v in VARIABLES if v != var]
        missing = [v for v in others if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        assigned = [0j, 0j, 0j]
        for v in others:
            assigned[_AXIS[v]] = complex(values[v])
        out = [0j] * (self.degree_in(var) + 1 if self._terms else 1)
        if not self._terms:
            return [0j]
        for expo, c in self._terms.items():
            factor = complex(c)
            for v in others:
                ax = _AXIS[v]
                if expo[ax]:
                    factor *= assigned[ax] ** expo[ax]
            out[expo[axis]] += factor
        return out

    # -- presentation ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], int]]:
        """Terms in canonical display order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_print_key)]

    @staticmethod
    def _monomial_str(expo: tuple[int, int, int]) -> str:
        parts = []
        for var, e in zip(VARIABLES, expo):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for expo, coeff in self.sorted_terms():
            mono = self._monomial_str(expo)
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"TracePoly({str(self)!r})"

    # -- serialization ---------------------------------------------------------

    def to_json_terms(self) -> list[dict]:
        """JSON form: [{"e": [es, et, eu], "c": "<decimal integer>"}, ...]."""
        return [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, data: Iterable[Mapping]) -> "TracePoly":
        return cls({tuple(item["e"]): int(item["c"]) for item in data})


S = TracePoly.variable("s")
T = TracePoly.variable("t")
U = TracePoly.variable("u")
