"""Closed forms for polylogarithms at nonpositive indices.

For a composition (s1, ..., sr) of nonnegative integers, the series with
coefficients neg_taylor_coeff lies in Z[1/(1-z)]; closed forms are
returned as coefficient lists on the powers (1-z)^0, (1-z)^-1, ....

Four routes are implemented.  "recursion" iterates the exact operator
recursion f -> theta_0^s (lambda f) on polynomials in Y = 1/(1-z).  The
series routes "T", "R" and "F" expand the function as the extended
polylogarithm of an explicit star series built from Stirling-weighted
shuffle powers of (x0+x1)*, of x0* sh x1*, and of x1* - 1; the nested
summation indices k_i range over 0..M_i with M_i = s1+..+si - (k1+..+
k_{i-1}), the last index being forced to k_r = M_r (its binomial is 1),
and each term carries the product of the remaining binomials C(M_i, k_i).
All routes are normalized so the depth >= 1 closed forms vanish at z = 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from ..errors import DomainError
from ..star_series import StarSeries, plane_star, shuffle_power, shuffle_star
from .series import _check_composition, stirling2

ROUTES = ("T", "R", "F", "recursion")


def _stirling_block(k: int, base: StarSeries, shift: StarSeries) -> StarSeries:
    """shift sh sum over j of S2(k, j) j! base^(sh j), the k >= 1 case of
    the three series factors."""
    acc = StarSeries.zero()
    for j in range(1, k + 1):
        coeff = stirling2(k, j) * factorial(j)
        acc += coeff * shuffle_power(base, j)
    return shuffle_star(shift, acc)


def _route_factor(route: str, k: int) -> StarSeries:
    if route == "T":
        if k == 0:
            return plane_star(1, 1)
        return _stirling_block(k, plane_star(1, 1), plane_star(0, 1))
    if route == "R":
        both = shuffle_star(plane_star(1, 0), plane_star(0, 1))
        if k == 0:
            return both
        return _stirling_block(k, both, plane_star(0, 1))
    if route == "F":
        lam = plane_star(0, 1) - StarSeries.one()
        if k == 0:
            return lam
        return _stirling_block(k, lam, plane_star(0, 1))
    raise ValueError(f"unknown route {route!r}")


def _nested_indices(s: Sequence[int]):
    """Yield (indices, coefficient) for the constrained nested sum: the
    i-th index runs over 0..M_i, the last is pinned to M_r."""
    r = len(s)

    def rec(i: int, used: int, prefix: tuple, coeff: int):
        budget = sum(s[: i + 1]) - used
        if i == r - 1:
            yield prefix + (budget,), coeff
            return
        for k in range(budget + 1):
            yield from rec(i + 1, used + k, prefix + (k,), coeff * comb(budget, k))

    yield from rec(0, 0, (), 1)


def build_neg_series(s: Iterable[int], route: str = "T") -> StarSeries:
    """The star series whose extended polylogarithm is the nonpositive-
    index polylogarithm of the composition s.  The empty composition gives
    the unit series (the constant function 1)."""
    s = _check_composition(s, 0)
    if route not in ("T", "R", "F"):
        raise ValueError(f"route must be one of T, R, F, got {route!r}")
    if not s:
        return StarSeries.one()
    acc = StarSeries.zero()
    for indices, coeff in _nested_indices(s):
        term = _route_factor(route, indices[0])
        for k in indices[1:]:
            term = shuffle_star(term, _route_factor(route, k))
        acc += coeff * term
    return acc


def _closed_form_from_series(series: StarSeries) -> list:
    """Convert a star series supported on empty words with integer
    exponents 0 <= a0 <= a1 into coefficients on powers of 1/(1-z),
    using z^a = (1 - (1-z))^a."""
    out: dict = {}
    for t, c in series.terms.items():
        if len(t.w) != 0:
            raise DomainError("series has word parts; not a pure star polynomial")
        if t.a0.denominator != 1 or t.a1.denominator != 1 or t.a0 < 0 or t.a1 < 0:
            raise DomainError("series exponents do not lie in Z[1/(1-z)]")
        if t.a0 > t.a1:
            raise DomainError("series does not lie in Z[1/(1-z)]")
        a0, a1 = int(t.a0), int(t.a1)
        for i in range(a0 + 1):
            j = a1 - i
            out[j] = out.get(j, Fraction(0)) + c * comb(a0, i) * (-1) ** i
    deg = max((j for j, v in out.items() if v), default=0)
    return [out.get(j, Fraction(0)) for j in range(deg + 1)]


def _lambda_times(p: list) -> list:
    """Multiply a polynomial in Y = 1/(1-z) by lambda = Y - 1."""
    out = [Fraction(0)] * (len(p) + 1)
    for j, c in enumerate(p):
        out[j + 1] += c
        out[j] -= c
    return out


def _theta0(p: list) -> list:
    """theta_0 = z d/dz on polynomials in Y: theta_0 Y^j = j (Y^(j+1) - Y^j)."""
    out = [Fraction(0)] * (len(p) + 1)
    for j, c in enumerate(p):
        if j:
            out[j + 1] += j * c
            out[j] -= j * c
    return out


def _trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p = p[:-1]
    return p


def li_neg_closed_form(s: Iterable[int], route: str = "recursion") -> list:
    """The nonpositive-index polylogarithm of the composition s as exact
    coefficients on (1-z)^0, (1-z)^-1, ..., normalized to vanish at z = 0
    for nonempty s.  The empty composition returns [1]."""
    s = _check_composition(s, 0)
    if route == "recursion":
        p = [Fraction(1)]
        for part in reversed(s):
            p = _lambda_times(p)
            for _ in range(part):
                p = _theta0(p)
    elif route in ("T", "R", "F"):
        p = _closed_form_from_series(build_neg_series(s, route))
    else:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    p = [Fraction(c) for c in p]
    if s:
        p[0] -= sum(p, Fraction(0))  # normalize so the value at z = 0 is 0
    return _trim(p)


def closed_form_taylor_coeff(coeffs: Sequence, n: int) -> Fraction:
    """n-th Taylor coefficient (n >= 1) of sum_j coeffs[j] (1-z)^(-j)."""
    if n < 1:
        raise ValueError("Taylor coefficients are indexed by n >= 1")
    total = Fraction(0)
    for j, c in enumerate(coeffs):
        if j and c:
            total += Fraction(c) * comb(n + j - 1, j - 1)
    return total
