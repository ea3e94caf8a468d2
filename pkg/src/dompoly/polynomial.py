"""Dense integer polynomials with ascending coefficient order.

Coefficients are Python ints, so nothing ever overflows.  ``coeffs[i]`` is
the coefficient of ``x**i``; trailing zeros are stripped, which makes the
zero polynomial the empty tuple and gives a canonical form for equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable


@dataclass(frozen=True)
class DomPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> DomPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> DomPolynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def padded(self, length: int) -> list[int]:
        """Coefficients padded with zeros to ``length`` entries."""
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def lowest_degree(self) -> int | None:
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return None

    def __add__(self, other: DomPolynomial) -> DomPolynomial:
        other = _coerce(other)
        size = max(len(self), len(other))
        return DomPolynomial(a + b for a, b in zip(self.padded(size), other.padded(size)))

    __radd__ = __add__

    def __neg__(self) -> DomPolynomial:
        return DomPolynomial(-a for a in self.coeffs)

    def __sub__(self, other: DomPolynomial) -> DomPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> DomPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: DomPolynomial) -> DomPolynomial:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DomPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> DomPolynomial:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_by_x(self, k: int = 1) -> DomPolynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return ZERO
        return DomPolynomial([0] * k + list(self.coeffs))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def key(self) -> str:
        """Canonical serialization, e.g. ``0,0,9,18,15,6,1``; zero is ``0``."""
        return ",".join(map(str, self.coeffs)) if self.coeffs else "0"

    @classmethod
    def from_key(cls, text: str) -> DomPolynomial:
        text = text.strip()
        if not text:
            raise ValueError("empty coefficient list")
        return cls(int(tok) for tok in text.split(","))

    def __str__(self):
        return to_display(self)


def _coerce(p) -> DomPolynomial:
    if isinstance(p, DomPolynomial):
        return p
    if isinstance(p, int):
        return DomPolynomial([p])
    return NotImplemented


ZERO = DomPolynomial()
ONE = DomPolynomial([1])
X = DomPolynomial([0, 1])


def add(p: DomPolynomial, q: DomPolynomial) -> DomPolynomial:
    return p + q


def subtract(p: DomPolynomial, q: DomPolynomial) -> DomPolynomial:
    return p - q


def multiply(p: DomPolynomial, q: DomPolynomial) -> DomPolynomial:
    return p * q


def scale_by_x(p: DomPolynomial, k: int = 1) -> DomPolynomial:
    return p.scale_by_x(k)


def binomial_power(n: int) -> DomPolynomial:
    """(1 + x)**n, built from the binomial coefficients directly."""
    if n < 0:
        raise ValueError("negative exponent")
    return DomPolynomial(comb(n, i) for i in range(n + 1))


def _term(coeff: int, power: int) -> str:
    mag = abs(coeff)
    if power == 0:
        return str(mag)
    var = "x" if power == 1 else f"x^{power}"
    return var if mag == 1 else f"{mag}{var}"


def to_display(p: DomPolynomial, descending: bool = False) -> str:
    """Human form such as ``3x + 3x^2 + x^3``; ascending powers by default."""
    terms = [(i, a) for i, a in enumerate(p.coeffs) if a]
    if not terms:
        return "0"
    if descending:
        terms.reverse()
    out = ""
    for k, (i, a) in enumerate(terms):
        if k == 0:
            out = ("-" if a < 0 else "") + _term(a, i)
        else:
            out += (" - " if a < 0 else " + ") + _term(a, i)
    return out


_TERM_RE = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def parse_display(text: str) -> DomPolynomial:
    """Inverse of :func:`to_display` (either power order)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM_RE.match(body)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse term {body!r}")
        digits, var, power = m.groups()
        c = int(digits) if digits else 1
        e = 0 if not var else int(power) if power else 1
        coeffs[e] = coeffs.get(e, 0) + (c if sign == "+" else -c)
    if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
        raise ValueError(f"cannot parse {text!r}")
    size = max(coeffs) + 1
    return DomPolynomial(coeffs.get(i, 0) for i in range(size))
