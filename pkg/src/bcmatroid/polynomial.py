"""Exact integer polynomials in one and two variables."""
from __future__ import annotations

from math import comb
from typing import Iterable, Mapping


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ``coeffs[k]`` of ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_descending(cls, coeffs: Iterable[int], low_degree: int = 0) -> IntPolynomial:
        """Build ``a_0 t^(n+u) + ... + a_n t^u`` from ``(a_0, ..., a_n)`` and ``u``."""
        return cls([0] * low_degree + list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def low_degree(self) -> int:
        """Exponent of the largest power of ``t`` dividing the polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def descending(self) -> tuple[int, ...]:
        """Coefficients from the leading term down to the lowest nonzero term."""
        return self.coeffs[self.low_degree():][::-1]

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPolynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another polynomial."""
        acc = IntPolynomial() if isinstance(x, IntPolynomial) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k``; negative ``k`` divides (exactly) by ``t**-k``."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise ValueError(f"not divisible by t^{-k}")
        return IntPolynomial(self.coeffs[-k:])

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else str(a)) + ("t" if k == 1 else f"t^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    return IntPolynomial([x])


T = IntPolynomial([0, 1])


class BivariatePolynomial:
    """Integer polynomial in ``x`` and ``y`` stored as ``{(i, j): coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def from_corank_nullity(cls, counts: Mapping[tuple[int, int], int]) -> BivariatePolynomial:
        """Expand ``sum counts[a, b] * (x-1)^a (y-1)^b``."""
        out: dict[tuple[int, int], int] = {}
        for (a, b), n in counts.items():
            for i in range(a + 1):
                ci = comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    cj = comb(b, j) * (-1) ** (b - j)
                    out[i, j] = out.get((i, j), 0) + n * ci * cj
        return cls(out)

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivariatePolynomial(out)

    def __mul__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out: dict[tuple[int, int], int] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                out[a + c, b + d] = out.get((a + c, b + d), 0) + u * v
        return BivariatePolynomial(out)

    def monomial_shift(self, dx: int, dy: int) -> BivariatePolynomial:
        return BivariatePolynomial({(i + dx, j + dy): v for (i, j), v in self.terms.items()})

    def swap(self) -> BivariatePolynomial:
        return BivariatePolynomial({(j, i): v for (i, j), v in self.terms.items()})

    def __call__(self, x, y):
        return sum(v * x ** i * y ** j for (i, j), v in self.terms.items())

    def at_y_zero(self) -> IntPolynomial:
        """The univariate polynomial ``P(t, 0)``."""
        deg = max((i for (i, j) in self.terms if j == 0), default=-1)
        cs = [0] * (deg + 1)
        for (i, j), v in self.terms.items():
            if j == 0:
                cs[i] += v
        return IntPolynomial(cs)

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.terms[i, j]) for (i, j) in sorted(self.terms)]

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BivariatePolynomial({dict(sorted(self.terms.items()))})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), v in sorted(self.terms.items(), key=lambda kv: (-kv[0][0] - kv[0][1], -kv[0][0])):
            mono = ("" if i == 0 else ("x" if i == 1 else f"x^{i}")) + \
                   ("" if j == 0 else ("y" if j == 1 else f"y^{j}"))
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}{mono}")
        return " + ".join(parts).replace("+ -", "- ")
