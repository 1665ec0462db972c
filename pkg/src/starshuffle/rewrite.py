"""Rewriting star series into normal form modulo the kernel ideal.

Working in the Laurent subalgebra (integer x0-exponents k, natural
x1-exponents l), the two congruences

    (k, l) -> (k - 1, l) - (k - 1, l - 1)        for k >= 1, l >= 1
    (k, l) -> (k, l - 1) + (k + 1, l)            for k <= -1, l >= 1

hold modulo the ideal generated by x0* sh x1* - x1* + 1, and each step
strictly decreases |k| + l on the rewritten monomial.  Iterating until no
term has k != 0 and l >= 1 yields a normal form supported on terms with
k * l = 0; a series lies in the ideal exactly when its normal form is 0.
"""

from __future__ import annotations

import random

from .errors import DomainError
from .star_series import StarSeries, StarTerm, term_sort_key


def _check_laurent(s: StarSeries) -> None:
    if not s.is_laurent():
        raise DomainError(
            "rewriting needs integer x0-exponents and nonnegative integer x1-exponents"
        )


def _rewritable(terms: dict) -> list:
    return [t for t in terms if t.a0 != 0 and t.a1 >= 1]


def _apply_rule(terms: dict, t: StarTerm) -> None:
    c = terms.pop(t)
    k, l = t.a0, t.a1
    if k >= 1:
        pieces = (
            (StarTerm(t.w, k - 1, l), c),
            (StarTerm(t.w, k - 1, l - 1), -c),
        )
    else:
        pieces = (
            (StarTerm(t.w, k, l - 1), c),
            (StarTerm(t.w, k + 1, l), c),
        )
    for key, dc in pieces:
        nc = terms.get(key, 0) + dc
        if nc:
            terms[key] = nc
        else:
            terms.pop(key, None)


def rewrite_trace(
    s: StarSeries, strategy: str = "measure", rng: random.Random | None = None
) -> list[StarSeries]:
    """Run the rewriting loop and return every intermediate state,
    starting with s and ending with its normal form.

    strategy "measure" always rewrites a monomial of maximal |k| + l (ties
    broken by term order), which is deterministic; strategy "random" picks
    any rewritable monomial using rng.
    """
    _check_laurent(s)
    if strategy not in ("measure", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "random" and rng is None:
        rng = random.Random()
    terms = dict(s.terms)
    states = [StarSeries(terms)]
    while True:
        candidates = _rewritable(terms)
        if not candidates:
            return states
        if strategy == "measure":
            t = max(candidates, key=lambda t: (abs(t.a0) + t.a1, term_sort_key(t)))
        else:
            t = rng.choice(sorted(candidates, key=term_sort_key))
        _apply_rule(terms, t)
        states.append(StarSeries(terms))


def normal_form(
    s: StarSeries, strategy: str = "measure", rng: random.Random | None = None
) -> StarSeries:
    """Normal form modulo the ideal: no term has both exponents nonzero.

    The result does not depend on the strategy; "measure" is the
    deterministic default.
    """
    return rewrite_trace(s, strategy=strategy, rng=rng)[-1]


def kernel_member(s: StarSeries) -> bool:
    """Does s lie in the ideal generated by x0* sh x1* - x1* + 1?"""
    return not normal_form(s)
