"""Laurent polynomials in q with coefficients in Z>=0 extended by infinity.

Arithmetic follows the usual conventions for counting faces: inf + x = inf,
inf * n = inf for n >= 1 and inf * 0 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Coefficient = Union[int, _Infinity]


def coeff_add(a: Coefficient, b: Coefficient) -> Coefficient:
    if a is INF or b is INF:
        return INF
    return a + b


def coeff_mul(a: Coefficient, b: Coefficient) -> Coefficient:
    if a == 0 or b == 0:
        return 0
    if a is INF or b is INF:
        return INF
    return a * b


def _check_coeff(c):
    if c is INF:
        return c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficient must be a non-negative int or INF, got {c!r}")
    if c < 0:
        raise ValueError(f"coefficient must be non-negative, got {c}")
    return c


@dataclass(frozen=True)
class ExtPolynomial:
    """Sparse map exponent -> coefficient; zero coefficients are never stored."""

    terms: tuple[tuple[int, Coefficient], ...] = ()

    def __post_init__(self):
        merged: dict[int, Coefficient] = {}
        for e, c in self.terms:
            merged[int(e)] = coeff_add(merged.get(int(e), 0), _check_coeff(c))
        cleaned = tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_dict(cls, d: Mapping[int, Coefficient]) -> "ExtPolynomial":
        return cls(tuple(d.items()))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coefficient]) -> "ExtPolynomial":
        """Coefficients listed from q^0 upward."""
        return cls(tuple(enumerate(coeffs)))

    @classmethod
    def constant(cls, c: Coefficient) -> "ExtPolynomial":
        return cls(((0, c),))

    @classmethod
    def monomial(cls, exponent: int, c: Coefficient = 1) -> "ExtPolynomial":
        return cls(((exponent, c),))

    def as_dict(self) -> dict[int, Coefficient]:
        return dict(self.terms)

    def coeff(self, exponent: int) -> Coefficient:
        return self.as_dict().get(exponent, 0)

    @property
    def min_exponent(self):
        return self.terms[0][0] if self.terms else None

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else None

    def is_finite(self) -> bool:
        return all(c is not INF for _, c in self.terms)

    def __add__(self, other: "ExtPolynomial") -> "ExtPolynomial":
        if not isinstance(other, ExtPolynomial):
            return NotImplemented
        return ExtPolynomial(self.terms + other.terms)

    def __mul__(self, other) -> "ExtPolynomial":
        if isinstance(other, ExtPolynomial):
            out: dict[int, Coefficient] = {}
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    out[e1 + e2] = coeff_add(out.get(e1 + e2, 0), coeff_mul(c1, c2))
            return ExtPolynomial.from_dict(out)
        if other is INF or isinstance(other, int):
            return ExtPolynomial(tuple((e, coeff_mul(c, other)) for e, c in self.terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExtPolynomial":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ExtPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "ExtPolynomial":
        """Multiply by q^k (k may be negative)."""
        return ExtPolynomial(tuple((e + k, c) for e, c in self.terms))

    def at_one(self) -> Coefficient:
        total: Coefficient = 0
        for _, c in self.terms:
            total = coeff_add(total, c)
        return total

    def to_pairs(self) -> list[list]:
        return [[e, "inf" if c is INF else c] for e, c in self.terms]

    @classmethod
    def from_pairs(cls, pairs) -> "ExtPolynomial":
        return cls(tuple((int(e), INF if c == "inf" else int(c)) for e, c in pairs))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            cs = "inf" if c is INF else str(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if c == 1 else f"{cs}{mono}")
        return " + ".join(parts)


ONE_PLUS_Q = ExtPolynomial.from_coeffs([1, 1])
