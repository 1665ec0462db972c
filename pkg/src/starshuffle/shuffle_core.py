"""Exact arithmetic in the free algebra over {x0, x1} and its stuffle cousin.

NCPoly is a noncommutative polynomial: a finite Word -> Fraction map with
concatenation as ``*``.  The shuffle product, unshuffle coproduct, left and
right residuals, the exchangeability test and the X/Y projections live here
as module functions.  YPoly is the analogue over the indexed alphabet
{y_k : k >= 1}, whose words are tuples of positive integers, with the
quasi-shuffle (stuffle) product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

from .linear import LinearCombination
from .words import EPSILON, Word, composition_of_word, word_of_composition


class NCPoly(LinearCombination):
    """Noncommutative polynomial over {x0, x1} with rational coefficients.

    ``*`` is concatenation (or scalar multiplication when one side is a
    rational number); use shuffle() for the shuffle product.
    """

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({EPSILON: 1})

    @classmethod
    def from_word(cls, w: Word, coeff=1) -> "NCPoly":
        return cls({w: coeff})

    def degree(self) -> int:
        """Length of the longest word present; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return conc(self, other)
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        return format_poly(self)


def conc(p: NCPoly, q: NCPoly) -> NCPoly:
    """Concatenation product."""
    out: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            key = u + v
            out[key] = out.get(key, 0) + cu * cv
    return NCPoly(out)


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> dict:
    """Shuffle of two words as a Word -> int multiplicity map.

    Cached; callers must treat the returned dict as read-only.
    """
    if len(u) == 0:
        return {v: 1}
    if len(v) == 0:
        return {u: 1}
    out: dict = {}
    lu = Word._raw(u[-1], 1)
    lv = Word._raw(v[-1], 1)
    for w, c in _shuffle_words(u[:-1], v).items():
        key = w + lu
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle_words(u, v[:-1]).items():
        key = w + lv
        out[key] = out.get(key, 0) + c
    return out


def shuffle(p: NCPoly, q: NCPoly) -> NCPoly:
    """Shuffle product, extended bilinearly."""
    out: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            c = cu * cv
            for w, m in _shuffle_words(u, v).items():
                out[w] = out.get(w, 0) + c * m
    return NCPoly(out)


def unshuffle(w: Word) -> dict:
    """Unshuffle coproduct of a word: a (Word, Word) -> Fraction map.

    Each letter is primitive, so the coproduct of a word is the product of
    x (x) 1 + 1 (x) x over its letters.  Dual to shuffle:
    sum of m * <p|w1><q|w2> over the coproduct equals <shuffle(p, q)|w>.
    """
    out = {(EPSILON, EPSILON): Fraction(1)}
    for a in w:
        letter = Word._raw(a, 1)
        nxt: dict = {}
        for (u, v), c in out.items():
            k1 = (u + letter, v)
            nxt[k1] = nxt.get(k1, 0) + c
            k2 = (u, v + letter)
            nxt[k2] = nxt.get(k2, 0) + c
        out = nxt
    return out


def left_residual(p: NCPoly, s: NCPoly) -> NCPoly:
    """p left-divides s: the polynomial with <p \\ s | w> = <s | w p>."""
    out: dict = {}
    for v, cv in s.terms.items():
        for u, cu in p.terms.items():
            if v.endswith(u):
                key = v[: len(v) - len(u)]
                out[key] = out.get(key, 0) + cu * cv
    return NCPoly(out)


def right_residual(s: NCPoly, p: NCPoly) -> NCPoly:
    """p right-divides s: the polynomial with <s / p | w> = <s | p w>."""
    out: dict = {}
    for v, cv in s.terms.items():
        for u, cu in p.terms.items():
            if v.startswith(u):
                key = v[len(u) :]
                out[key] = out.get(key, 0) + cu * cv
    return NCPoly(out)


def is_exchangeable(p: NCPoly) -> bool:
    """True when the coefficient of each word depends only on how many
    x0's and x1's it contains (all words of a bidegree share one value,
    absent words counting as zero)."""
    classes: dict = {}
    for w, c in p.terms.items():
        key = (w.count(0), w.count(1))
        classes.setdefault(key, []).append(c)
    for (n0, n1), coeffs in classes.items():
        if any(c != coeffs[0] for c in coeffs):
            return False
        if len(coeffs) < comb(n0 + n1, n0) and coeffs[0] != 0:
            return False
    return True


class YPoly(LinearCombination):
    """Polynomial over the alphabet {y_k : k >= 1}; words are tuples of
    positive integers.  ``*`` is concatenation; use stuffle() for the
    quasi-shuffle product."""

    @classmethod
    def _insert(cls, data: dict, key, coeff: Fraction) -> None:
        key = tuple(key)
        if any(not isinstance(k, int) or k < 1 for k in key):
            raise ValueError(f"y-word indices must be positive integers, got {key!r}")
        data[key] = data.get(key, 0) + coeff

    @classmethod
    def one(cls) -> "YPoly":
        return cls({(): 1})

    @classmethod
    def from_yword(cls, yw, coeff=1) -> "YPoly":
        return cls({tuple(yw): coeff})

    def __mul__(self, other):
        if isinstance(other, YPoly):
            out: dict = {}
            for u, cu in self.terms.items():
                for v, cv in other.terms.items():
                    key = u + v
                    out[key] = out.get(key, 0) + cu * cv
            return YPoly(out)
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for yw in sorted(self.terms, key=lambda t: (len(t), t)):
            c = self.terms[yw]
            body = "y[" + ",".join(map(str, yw)) + "]"
            bits.append((c, f"{abs(c)}*{body}"))
        parts = []
        for i, (c, text) in enumerate(bits):
            if i == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append(("- " if c < 0 else "+ ") + text)
        return " ".join(parts)


@lru_cache(maxsize=None)
def _stuffle_words(u: tuple, v: tuple) -> dict:
    """Quasi-shuffle of two y-words; cached, treat the result as read-only."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict = {}
    for w, c in _stuffle_words(u[1:], v).items():
        key = (u[0],) + w
        out[key] = out.get(key, 0) + c
    for w, c in _stuffle_words(u, v[1:]).items():
        key = (v[0],) + w
        out[key] = out.get(key, 0) + c
    for w, c in _stuffle_words(u[1:], v[1:]).items():
        key = (u[0] + v[0],) + w
        out[key] = out.get(key, 0) + c
    return out


def stuffle(p: YPoly, q: YPoly) -> YPoly:
    """Quasi-shuffle (stuffle) product, extended bilinearly."""
    out: dict = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            c = cu * cv
            for w, m in _stuffle_words(u, v).items():
                out[w] = out.get(w, 0) + c * m
    return YPoly(out)


def pi_y(p: NCPoly) -> YPoly:
    """Project onto words ending in x1 (plus the empty word) and transcribe
    them to y-words; words ending in x0 are sent to zero."""
    out: dict = {}
    for w, c in p.terms.items():
        if len(w) and w[-1] != 1:
            continue
        key = composition_of_word(w)
        out[key] = out.get(key, 0) + c
    return YPoly(out)


def pi_x(q: YPoly) -> NCPoly:
    """Transcribe y-words back to words over {x0, x1}; right adjoint of
    pi_y for the canonical scalar products on both sides."""
    out: dict = {}
    for yw, c in q.terms.items():
        key = word_of_composition(yw)
        out[key] = out.get(key, 0) + c
    return NCPoly(out)


def format_poly(p: NCPoly) -> str:
    """Render as ``3/2*011 + 1*0 - 2`` (bare rationals are coefficients of
    the empty word); the zero polynomial prints as ``0``."""
    if not p.terms:
        return "0"
    parts = []
    for w in sorted(p.terms, key=lambda w: (len(w), tuple(w))):
        c = p.terms[w]
        body = str(abs(c)) if len(w) == 0 else f"{abs(c)}*{w}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_poly(text: str) -> NCPoly:
    """Inverse of format_poly.  Terms are ``coeff*word`` or bare rationals
    (coefficients of the empty word), joined by + and -."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    s = s.replace("-", "+-")
    out: dict = {}
    for piece in s.split("+"):
        if piece in ("", "-"):
            if piece == "-":
                raise ValueError("dangling sign in polynomial text")
            continue
        if "*" in piece:
            cs, ws = piece.split("*", 1)
            if ws and any(ch not in "01" for ch in ws):
                raise ValueError(f"bad word {ws!r} in polynomial text")
            key = Word(ws)
            c = Fraction(cs)
        else:
            key = EPSILON
            c = Fraction(piece)
        out[key] = out.get(key, 0) + c
    return NCPoly(out)
