"""Closed-form polynomials equal to 1 on the hyperplane ``s(x) = 1``.

``invariant_poly(d)`` gives the root-of-unity invariant family; for odd ``d``
it has nonnegative coefficients and the fewest possible terms.  Whitney
polynomials play the same role in three or more variables.  ``tensor_op``
and ``substitute`` produce new examples from old ones while preserving the
hyperplane identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple, Sequence

from .poly import Poly, Scalar


@lru_cache(maxsize=None)
def _lucas_like(d: int) -> Poly:
    """``q_d`` with ``q_0 = 2``, ``q_1 = x`` and ``q_{k+1} = x q_k + y q_{k-1}``."""
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    prev, cur = Poly.const(2, 2), x
    if d == 0:
        return prev
    for _ in range(d - 1):
        prev, cur = cur, x * cur + y * prev
    return cur


def invariant_poly(d: int) -> Poly:
    """The degree-``d`` invariant polynomial ``p_d(x, y)``.

    Computed from the integer recurrence, never from the radical form.
    """
    if d < 1:
        raise ValueError("d must be positive")
    sign = 1 if d % 2 else -1
    return _lucas_like(d) + Poly(2, {(0, d): sign})


def closed_form_coefficients(d: int) -> list[Fraction]:
    """``c_k = (2r+1)(2r-k)! / (k! (2r+1-2k)!)`` for ``d = 2r+1``, ``0 <= k <= r``."""
    if d < 1 or d % 2 == 0:
        raise ValueError("closed form is for odd d")
    r = (d - 1) // 2
    return [
        Fraction((2 * r + 1) * factorial(2 * r - k), factorial(k) * factorial(2 * r + 1 - 2 * k))
        for k in range(r + 1)
    ]


def closed_form_poly(d: int) -> Poly:
    """``sum_k c_k x^(d-2k) y^k + y^d`` from the closed-form coefficients."""
    coeffs = closed_form_coefficients(d)
    terms = {(d - 2 * k, k): c for k, c in enumerate(coeffs)}
    terms[(0, d)] = terms.get((0, d), 0) + 1
    return Poly(2, terms)


def lucas(d: int) -> int:
    a, b = 2, 1
    for _ in range(d):
        a, b = b, a + b
    return a


def l1_closed_form(d: int) -> int:
    """Coefficient sum ``p_d(1, 1)``, checked against ``Lucas(d) + 1``."""
    if d % 2 == 0:
        raise ValueError("l1_closed_form is for odd d")
    value = invariant_poly(d).coeff_sum
    expected = lucas(d) + 1
    if value != expected:
        raise AssertionError(f"p_{d}(1,1) = {value} but Lucas({d}) + 1 = {expected}")
    return int(value)


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    i = 2
    while i * i <= k:
        if k % i == 0:
            return False
        i += 1
    return True


def primality_congruence(d: int) -> bool:
    """Whether ``p_d == x^d + y^d`` modulo ``d`` (coefficientwise)."""
    diff = invariant_poly(d) - Poly(2, {(d, 0): 1, (0, d): 1})
    result = all(c.denominator == 1 and c.numerator % d == 0 for _, c in diff.items())
    if result != (d == 1 or is_prime(d)):
        raise AssertionError(f"congruence and primality disagree at d = {d}")
    return result


def whitney_poly(n: int, d: int) -> Poly:
    """``t (1 + u + ... + u^(d-1)) + u^d`` with ``t = x_1 + ... + x_{n-1}``, ``u = x_n``."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    terms = {}
    for i in range(n - 1):
        for k in range(d):
            e = [0] * n
            e[i] = 1
            e[-1] = k
            terms[tuple(e)] = 1
    terms[(0,) * (n - 1) + (d,)] = 1
    return Poly(n, terms)


def pure_top_power(p: Poly) -> tuple[int, ...]:
    """Exponent of the highest pure power of the last variable present in ``p``."""
    n = p.nvars
    pures = [e for e in p if all(k == 0 for k in e[:-1]) and e[-1] > 0]
    if not pures:
        raise ValueError("polynomial has no pure power of the last variable")
    return max(pures, key=lambda e: e[-1])


def tensor_op(p: Poly, which: str = "W", c: Scalar | None = None, target=None) -> Poly:
    """Apply ``W`` or ``V`` to the term ``x^target`` of ``p``.

    ``W`` replaces ``c x^target`` by ``c x^target s(x)``; ``V`` does the same
    with ``c / 2``.  ``c`` defaults to the full coefficient of the target, so
    ``W`` adds ``n - 1`` terms and ``V`` adds ``n``.  ``target`` defaults to
    the highest pure power of the last variable.
    """
    if which not in ("W", "V"):
        raise ValueError("which must be 'W' or 'V'")
    target = pure_top_power(p) if target is None else tuple(target)
    have = p.coeff(target)
    if have <= 0:
        raise ValueError(f"target term x^{target} absent or not positive")
    c = have if c is None else Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    amount = c if which == "W" else c / 2
    if amount > have:
        raise ValueError(f"coefficient {have} of x^{target} is smaller than {amount}")
    piece = Poly.monomial(target, amount)
    return p - piece + piece * Poly.linear_sum(p.nvars)


def tensor_word(n: int, w_steps: int, v_steps: int) -> Poly:
    """``V^v W^w s(x)``, each step on the highest pure power of ``x_n``."""
    p = Poly.linear_sum(n)
    for _ in range(w_steps):
        p = tensor_op(p, "W")
    for _ in range(v_steps):
        p = tensor_op(p, "V")
    return p


class Substitution(NamedTuple):
    poly: Poly
    nonnegative: bool
    term_count: int
    coeff_sum: Fraction


def substitute(d: int, m: int, a: int, b: int, c: Scalar) -> Substitution:
    """``p_d - c x^a y^b (p_m - 1)`` for odd ``d`` and even ``m``.

    The result always equals 1 on ``x + y = 1``; nonnegativity is reported,
    not assumed.
    """
    if d % 2 == 0 or m % 2 == 1:
        raise ValueError("need odd d and even m")
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    f = invariant_poly(d) - (invariant_poly(m) - 1).shift((a, b)) * Fraction(c)
    return Substitution(f, f.is_nonnegative(), f.term_count, f.coeff_sum)


def apply_substitutions(base: Poly, steps: Sequence[tuple[int, int, int, Scalar]]) -> Poly:
    """Iterate the substitution: subtract ``c x^a y^b (p_m - 1)`` for each ``(m, a, b, c)``."""
    f = base
    for m, a, b, c in steps:
        if m % 2:
            raise ValueError("m must be even")
        f = f - (invariant_poly(m) - 1).shift((a, b)) * Fraction(c)
    return f
