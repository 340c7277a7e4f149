"""Formal rational linear combinations of terms (elements of the free GDN superalgebra)."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .terms import Alphabet, Generator, Leaf, Node, Term, TermSyntaxError, _TermParser, print_term

__all__ = ["GdnElement", "format_coeff", "parse_element", "as_element"]


def format_coeff(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GdnElement:
    """Finite map term -> nonzero Fraction.  The empty map is zero.

    ``e * f`` is the (unreduced) product when ``f`` is an element or term,
    and scalar multiplication when ``f`` is a number.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Term, object] | Iterable[tuple[Term, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[Term, Fraction] = {}
        for t, v in items:
            if not isinstance(t, Term):
                raise TypeError(f"keys must be Terms, got {type(t).__name__}")
            v = c.get(t, 0) + Fraction(v)
            if v:
                c[t] = v
            else:
                c.pop(t, None)
        self._c = c

    @classmethod
    def from_term(cls, t: Term, coeff=1) -> "GdnElement":
        return cls({t: coeff})

    @classmethod
    def _raw(cls, c: dict) -> "GdnElement":
        e = cls.__new__(cls)
        e._c = c
        return e

    # -- container protocol
    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __iter__(self):
        return iter(sorted(self._c, key=lambda t: t.sort_key))

    def __contains__(self, t):
        return t in self._c

    def __getitem__(self, t: Term) -> Fraction:
        return self._c.get(t, Fraction(0))

    def items(self):
        """(term, coeff) pairs in the deterministic term order."""
        return [(t, self._c[t]) for t in self]

    def terms(self):
        return list(self)

    def __eq__(self, other):
        if isinstance(other, Term):
            other = GdnElement.from_term(other)
        if isinstance(other, int) and other == 0:
            return not self._c
        if not isinstance(other, GdnElement):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    # -- linear structure
    def _add(self, other: "GdnElement", scale) -> "GdnElement":
        c = dict(self._c)
        for t, v in other._c.items():
            w = c.get(t, 0) + scale * v
            if w:
                c[t] = w
            else:
                c.pop(t, None)
        return GdnElement._raw(c)

    def __add__(self, other):
        other = as_element(other)
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._add(as_element(other), -1)

    def __rsub__(self, other):
        return as_element(other)._add(self, -1)

    def __neg__(self):
        return GdnElement._raw({t: -v for t, v in self._c.items()})

    def scale(self, k) -> "GdnElement":
        k = Fraction(k)
        if not k:
            return GdnElement()
        return GdnElement._raw({t: k * v for t, v in self._c.items()})

    def circ(self, other) -> "GdnElement":
        """Bilinear extension of the magma product; no reduction."""
        other = as_element(other)
        c: dict[Term, Fraction] = {}
        for s, a in self._c.items():
            for t, b in other._c.items():
                n = Node(s, t)
                c[n] = c.get(n, 0) + a * b
        return GdnElement._raw({t: v for t, v in c.items() if v})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if isinstance(other, (GdnElement, Term)):
            return self.circ(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if isinstance(other, Term):
            return GdnElement.from_term(other).circ(self)
        return NotImplemented

    # -- gradings
    def parity(self) -> int:
        """Common parity of all terms; raises if the element is not homogeneous."""
        ps = {t.parity for t in self._c}
        if len(ps) > 1:
            raise ValueError(f"element is not parity-homogeneous: {self}")
        return ps.pop() if ps else 0

    def is_homogeneous(self) -> bool:
        return len({t.parity for t in self._c}) <= 1

    def lengths(self) -> set[int]:
        return {t.length for t in self._c}

    def __str__(self):
        return format_element(self.items(), print_term)

    def __repr__(self):
        return f"GdnElement({str(self)!r})"


def format_element(items, show) -> str:
    """Signed sum ``c1 t1 + c2 t2 - ...``; coefficient 1 is omitted."""
    if not items:
        return "0"
    out = []
    for i, (t, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = show(t) if a == 1 else f"{format_coeff(a)} {show(t)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def as_element(x) -> GdnElement:
    if isinstance(x, GdnElement):
        return x
    if isinstance(x, Term):
        return GdnElement.from_term(x)
    if isinstance(x, Generator):
        return GdnElement.from_term(Leaf(x))
    if isinstance(x, int) and x == 0:
        return GdnElement()
    raise TypeError(f"cannot convert {type(x).__name__} to GdnElement")


_COEFF = re.compile(r"(\d+)(?:\s*/\s*(\d+))?")


def parse_element(text: str, alphabet: Alphabet) -> GdnElement:
    """Parse ``"((x*y)*x) + 2 (y*(x*x)) - 1/2 x"``; ``"0"`` is zero."""
    p = _TermParser(text, alphabet)
    if p.peek() == "0":
        save = p.pos
        p.pos += 1
        if not p.peek():
            return GdnElement()
        p.pos = save
    acc: dict[Term, Fraction] = {}
    first = True
    while True:
        ch = p.peek()
        sign = 1
        if ch in "+-" and ch:
            sign = -1 if ch == "-" else 1
            p.pos += 1
        elif not first:
            raise TermSyntaxError(f"expected '+' or '-', found {ch or 'end of input'!r}", text, p.pos)
        p.peek()
        coeff = Fraction(1)
        m = _COEFF.match(text, p.pos)
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise TermSyntaxError("zero denominator", text, p.pos)
            coeff = Fraction(int(m.group(1)), den)
            p.pos = m.end()
            p.peek()
            if p.pos < len(text) and text[p.pos] == "*":
                p.pos += 1
        t = p.term()
        acc[t] = acc.get(t, 0) + sign * coeff
        first = False
        if not p.peek():
            break
    return GdnElement(acc)
