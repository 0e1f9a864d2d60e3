"""Exact sparse multivariate polynomials over the rationals.

A polynomial in ``nvars`` variables is a finite map from exponent tuples to
nonzero :class:`fractions.Fraction` coefficients.  Values are immutable and
hashable, so they can be shared between worker processes and used as dict keys.

Iteration and serialization use graded-lex order: ascending total degree, and
within one degree ``x0`` heavy monomials first (``x^2, xy, y^2``).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def grlex_key(exp: Exponent):
    """Sort key for graded-lex order (see module docstring)."""
    return (sum(exp), tuple(-e for e in exp))


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, graded-lex order."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def monomials_upto(nvars: int, degree: int, start: int = 0) -> list[Exponent]:
    """All exponent vectors with ``start <= |e| <= degree``, graded-lex order."""
    out = []
    for k in range(start, degree + 1):
        out.extend(monomials(nvars, k))
    return out


def multinomial(exp: Sequence[int]) -> int:
    """The multinomial coefficient ``|exp|! / prod(e_j!)``."""
    out = factorial(sum(exp))
    for e in exp:
        out //= factorial(e)
    return out


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text) -> Fraction:
    """Parse ``"num/den"``, ``"num"`` or an int into a Fraction.

    Floats and decimal strings are rejected; nothing in this package is
    allowed to pass through binary floating point.
    """
    if isinstance(text, bool):
        raise ValueError(f"not an exact rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str) and "." not in text and "e" not in text.lower():
        return Fraction(text.strip())
    raise ValueError(f"not an exact rational: {text!r}")


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | Iterable = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            value = clean.get(exp, Fraction(0)) + Fraction(coef)
            clean[exp] = value
        self.nvars = nvars
        self._terms = {e: c for e, c in sorted(clean.items(), key=lambda t: grlex_key(t[0])) if c != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for nvars={nvars}")
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: Scalar = 1) -> "Poly":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def linear_sum(cls, nvars: int) -> "Poly":
        """``s(x) = x_1 + ... + x_n``."""
        return cls(nvars, {tuple(int(i == j) for j in range(nvars)): 1 for i in range(nvars)})

    # -- basic accessors ----------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """A copy of the term map, in graded-lex order."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def __contains__(self, exp) -> bool:
        return tuple(exp) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    @property
    def term_count(self) -> int:
        """Number of nonzero coefficients (the L0 norm)."""
        return len(self._terms)

    @property
    def coeff_sum(self) -> Fraction:
        """Value at the all-ones point (the L1 norm for nonnegative polynomials)."""
        return sum(self._terms.values(), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def top_form(self) -> "Poly":
        """The homogeneous part of highest degree."""
        d = self.degree
        return Poly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.nvars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exp: Sequence[int]) -> "Poly":
        """Multiply by the monomial ``x^exp``."""
        exp = tuple(exp)
        return Poly(self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def sort_key(self):
        """Deterministic ordering key: coefficients laid out in graded-lex order."""
        return tuple((grlex_key(e), c) for e, c in self._terms.items())

    # -- evaluation and substitution ----------------------------------------

    def __call__(self, *point):
        return self.eval(point)

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        point = [Fraction(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, polynomial has {self.nvars} variables")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def swap(self, i: int = 0, j: int = 1) -> "Poly":
        """Interchange variables ``i`` and ``j``."""
        def flip(e):
            e = list(e)
            e[i], e[j] = e[j], e[i]
            return tuple(e)
        return Poly(self.nvars, {flip(e): c for e, c in self._terms.items()})

    # -- domain operations --------------------------------------------------

    def homogenize(self, d: int) -> "Poly":
        """Replace each ``c x^a`` by ``c x^a s(x)^(d-|a|)``."""
        if d < self.degree:
            raise ValueError(f"cannot homogenize degree {self.degree} polynomial to degree {d}")
        s = Poly.linear_sum(self.nvars)
        powers = [Poly.const(self.nvars, 1)]
        for _ in range(d):
            powers.append(powers[-1] * s)
        out = Poly.zero(self.nvars)
        for e, c in self._terms.items():
            out = out + powers[d - sum(e)].shift(e) * c
        return out

    def restrict_to_hyperplane(self) -> "Poly":
        """Substitute ``x_n = 1 - (x_1 + ... + x_{n-1})``.

        The result is returned in the original ``nvars`` variables with the
        last exponent always zero; for ``nvars == 1`` this is the value at 1.
        """
        n = self.nvars
        lin = Poly.const(n, 1) - (Poly.linear_sum(n) - Poly.var(n, n - 1))
        out = Poly.zero(n)
        powers = {0: Poly.const(n, 1)}
        for e, c in self._terms.items():
            k = e[-1]
            if k not in powers:
                powers[k] = lin ** k
            out = out + powers[k].shift(e[:-1] + (0,)) * c
        return out

    def divide_by_affine(self) -> tuple["Poly", Fraction]:
        """Divide by ``s(x) - 1``; return ``(quotient, remainder)``.

        ``self == quotient * (s - 1) + remainder`` holds exactly.  The
        remainder is the constant value of ``self`` on the hyperplane
        ``s(x) = 1``; ``ValueError`` is raised when ``self`` is not constant
        there, since then no constant remainder exists.
        """
        n = self.nvars
        lin = Poly.const(n, 1) - (Poly.linear_sum(n) - Poly.var(n, n - 1))
        # group by power of the last variable: self = sum_k a_k * x_n^k
        by_power: dict[int, dict] = {}
        for e, c in self._terms.items():
            by_power.setdefault(e[-1], {})[e[:-1] + (0,)] = c
        top = max(by_power, default=0)
        coeffs = [Poly(n, by_power.get(k, {})) for k in range(top + 1)]
        # synthetic division by (x_n - lin)
        quotient_coeffs = [None] * top
        carry = Poly.zero(n)
        for k in range(top, 0, -1):
            carry = coeffs[k] + lin * carry if k < top else coeffs[k]
            quotient_coeffs[k - 1] = carry
        remainder = coeffs[0] + lin * carry if top > 0 else coeffs[0]
        if any(sum(e) for e in remainder):
            raise ValueError("polynomial is not constant on the hyperplane s(x) = 1")
        quotient = Poly.zero(n)
        for k, b in enumerate(quotient_coeffs):
            quotient = quotient + b.shift((0,) * (n - 1) + (k,))
        return quotient, remainder.coeff((0,) * n)

    def hyperplane_value(self):
        """The constant value on ``s(x) = 1``, or ``None`` if not constant."""
        try:
            return self.divide_by_affine()[1]
        except ValueError:
            return None

    def symmetrize(self) -> "Poly":
        """``(p(x, y) + p(y, x)) / 2`` for two-variable polynomials."""
        if self.nvars != 2:
            raise ValueError("symmetrize requires nvars == 2")
        return (self + self.swap()) / 2

    # -- presentation -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coef": format_fraction(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data) -> "Poly":
        if not isinstance(data, dict):
            raise ValueError("polynomial JSON must be an object")
        if "nvars" not in data:
            raise ValueError("polynomial JSON: missing field 'nvars'")
        if "terms" not in data or not isinstance(data["terms"], list):
            raise ValueError("polynomial JSON: field 'terms' must be a list")
        nvars = data["nvars"]
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 1:
            raise ValueError("polynomial JSON: field 'nvars' must be a positive integer")
        terms = {}
        for i, t in enumerate(data["terms"]):
            if not isinstance(t, dict) or "exp" not in t or "coef" not in t:
                raise ValueError(f"polynomial JSON: terms[{i}] needs 'exp' and 'coef'")
            exp = t["exp"]
            if not isinstance(exp, list) or len(exp) != nvars or not all(
                isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in exp
            ):
                raise ValueError(f"polynomial JSON: terms[{i}].exp must be {nvars} nonnegative integers")
            try:
                coef = parse_fraction(t["coef"])
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"polynomial JSON: terms[{i}].coef: {exc}") from None
            exp = tuple(exp)
            terms[exp] = terms.get(exp, Fraction(0)) + coef
        return cls(nvars, terms)

    def __str__(self):
        if not self._terms:
            return "0"
        names = ["x", "y"] if self.nvars == 2 else [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0]))):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"Poly({self.nvars}, {str(self)!r})"


def xy() -> tuple[Poly, Poly]:
    """The two coordinate polynomials in two variables."""
    return Poly.var(2, 0), Poly.var(2, 1)


def parse_poly(text: str, nvars: int = 2) -> Poly:
    """Parse a small sum-of-monomials expression like ``"x^7 + 7/2*x^5*y"``.

    Variables are ``x, y`` for two variables, or ``x1 .. xn``.  Only ``+``,
    ``-``, ``*``, ``^`` and rational coefficients are understood.
    """
    names = ["x", "y"] if nvars == 2 else [f"x{i + 1}" for i in range(nvars)]
    index = {n: i for i, n in enumerate(names)}
    text = text.replace(" ", "").replace("-", "+-")
    out: dict[Exponent, Fraction] = {}
    for chunk in filter(None, text.split("+")):
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coef = Fraction(sign)
        exp = [0] * nvars
        for factor in chunk.split("*"):
            base, _, power = factor.partition("^")
            if base in index:
                exp[index[base]] += int(power or 1)
            else:
                coef *= Fraction(base)
        out[tuple(exp)] = out.get(tuple(exp), Fraction(0)) + coef
    return Poly(nvars, out)
