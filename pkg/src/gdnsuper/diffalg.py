"""
The free differential supercommutative algebra kD_s[X].

A monomial is a sorted word of derivative factors ``D^i(a)``; sorting is by
``(i, rank(a))`` and a word repeating an odd factor is zero.  The product
of two monomials is concatenation followed by sorting, with a Koszul sign
counting the odd-odd pairs that had to cross.  ``D`` acts by the Leibniz
rule and ``x o y = x * D(y)`` is the GDN circle product.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from .element import format_element
from .terms import Alphabet, Generator
from .tableau import letter_multisets, partitions

__all__ = [
    "MAX_ORDER",
    "DFactor",
    "DMonomial",
    "DiffElement",
    "canonical_monomial",
    "mul",
    "derive",
    "circ",
    "weight",
    "compare",
    "leading",
    "parse_monomial",
    "enumerate_monomials",
]

MAX_ORDER = 10**6


class DFactor:
    """D^order(gen)."""

    __slots__ = ("order", "gen", "key")

    def __init__(self, order: int, gen: Generator):
        if not isinstance(order, int) or order < 0:
            raise ValueError(f"derivative order must be a nonnegative integer, got {order!r}")
        if order > MAX_ORDER:
            raise OverflowError(f"derivative order {order} exceeds {MAX_ORDER}")
        self.order = order
        self.gen = gen
        self.key = (order, gen.rank)

    @property
    def parity(self) -> int:
        return self.gen.parity

    def raised(self) -> "DFactor":
        return DFactor(self.order + 1, self.gen)

    def __eq__(self, other):
        return isinstance(other, DFactor) and self.order == other.order and self.gen == other.gen

    def __hash__(self):
        return hash((self.order, self.gen))

    def __lt__(self, other: "DFactor"):
        return self.key < other.key

    def __str__(self):
        return self.gen.name if self.order == 0 else f"D^{self.order}[{self.gen.name}]"

    def __repr__(self):
        return f"DFactor({self})"


class DMonomial:
    """Admissible sorted word of factors.  Build through :func:`canonical_monomial`."""

    __slots__ = ("factors", "parity", "sort_key", "_hash")

    def __init__(self, factors: Sequence[DFactor] = ()):
        factors = tuple(factors)
        keys = [f.key for f in factors]
        if keys != sorted(keys):
            raise ValueError("factors must be sorted by (order, rank)")
        for a, b in zip(factors, factors[1:]):
            if a.key == b.key and a.parity == 1:
                raise ValueError(f"repeated odd factor {a}")
        self.factors = factors
        self.parity = sum(f.parity for f in factors) % 2
        # order (*): length, then (order, rank) pairs from the last factor back
        self.sort_key = (len(factors), tuple(reversed(keys)))
        self._hash = hash(self.sort_key)

    @classmethod
    def _trusted(cls, factors: tuple) -> "DMonomial":
        # factors already sorted and admissible
        m = cls.__new__(cls)
        m.factors = factors
        m.parity = sum(f.parity for f in factors) % 2
        m.sort_key = (len(factors), tuple(f.key for f in reversed(factors)))
        m._hash = hash(m.sort_key)
        return m

    @property
    def length(self) -> int:
        return len(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, DMonomial) and self.sort_key == other.sort_key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "DMonomial"):
        return self.sort_key < other.sort_key

    def __str__(self):
        return " ".join(str(f) for f in self.factors) if self.factors else "1"

    def __repr__(self):
        return f"DMonomial({str(self)!r})"


def _sort_signed(fs: Sequence[DFactor]):
    """(sign, sorted tuple) or (0, None) when an odd factor repeats."""
    odd_keys = [f.key for f in fs if f.parity == 1]
    if len(set(odd_keys)) != len(odd_keys):
        return 0, None
    inv = 0
    for i in range(len(odd_keys)):
        ki = odd_keys[i]
        for j in range(i + 1, len(odd_keys)):
            if ki > odd_keys[j]:
                inv += 1
    # stable: equal even factors are interchangeable anyway
    return (-1 if inv % 2 else 1), tuple(sorted(fs, key=lambda f: f.key))


def canonical_monomial(fs: Iterable[DFactor]) -> "DiffElement":
    """Sorted monomial times its Koszul sign, or zero."""
    s, srt = _sort_signed(list(fs))
    if not s:
        return DiffElement()
    return DiffElement._raw({DMonomial._trusted(srt): Fraction(s)})


def _mono_mul(u: DMonomial, v: DMonomial):
    return _sort_signed(u.factors + v.factors)


def _mono_derive(u: DMonomial) -> dict:
    out: dict[DMonomial, Fraction] = {}
    fs = u.factors
    for i in range(len(fs)):
        s, srt = _sort_signed(fs[:i] + (fs[i].raised(),) + fs[i + 1 :])
        if s:
            m = DMonomial._trusted(srt)
            c = out.get(m, 0) + s
            if c:
                out[m] = c
            else:
                del out[m]
    return out


class DiffElement:
    """Finite map DMonomial -> nonzero Fraction.  ``*`` is the associative product."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[DMonomial, object] | Iterable[tuple[DMonomial, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[DMonomial, Fraction] = {}
        for m, v in items:
            if not isinstance(m, DMonomial):
                raise TypeError(f"keys must be DMonomials, got {type(m).__name__}")
            v = c.get(m, 0) + Fraction(v)
            if v:
                c[m] = v
            else:
                c.pop(m, None)
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "DiffElement":
        e = cls.__new__(cls)
        e._c = c
        return e

    @classmethod
    def one(cls) -> "DiffElement":
        return cls._raw({DMonomial(): Fraction(1)})

    @classmethod
    def from_factor(cls, order: int, gen: Generator) -> "DiffElement":
        return cls._raw({DMonomial((DFactor(order, gen),)): Fraction(1)})

    @classmethod
    def from_monomial(cls, m: DMonomial, coeff=1) -> "DiffElement":
        return cls({m: coeff})

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __iter__(self):
        """Monomials in decreasing (*) order."""
        return iter(sorted(self._c, key=lambda m: m.sort_key, reverse=True))

    def __contains__(self, m):
        return m in self._c

    def __getitem__(self, m: DMonomial) -> Fraction:
        return self._c.get(m, Fraction(0))

    def items(self):
        return [(m, self._c[m]) for m in self]

    def monomials(self):
        return list(self)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._c
        if not isinstance(other, DiffElement):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def _add(self, other: "DiffElement", k) -> "DiffElement":
        c = dict(self._c)
        for m, v in other._c.items():
            w = c.get(m, 0) + k * v
            if w:
                c[m] = w
            else:
                c.pop(m, None)
        return DiffElement._raw(c)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, DiffElement):
            return NotImplemented
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, DiffElement):
            return NotImplemented
        return self._add(other, -1)

    def __neg__(self):
        return DiffElement._raw({m: -v for m, v in self._c.items()})

    def scale(self, k) -> "DiffElement":
        k = Fraction(k)
        if not k:
            return DiffElement()
        return DiffElement._raw({m: k * v for m, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if isinstance(other, DiffElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def parity(self) -> int:
        ps = {m.parity for m in self._c}
        if len(ps) > 1:
            raise ValueError(f"element is not parity-homogeneous: {self}")
        return ps.pop() if ps else 0

    def weights(self) -> set[int]:
        return {weight(m) for m in self._c if m.factors}

    def __str__(self):
        return format_element(self.items(), str)

    def __repr__(self):
        return f"DiffElement({str(self)!r})"


def mul(u: DiffElement, v: DiffElement) -> DiffElement:
    acc: dict[DMonomial, Fraction] = {}
    for m, a in u._c.items():
        for n, b in v._c.items():
            s, srt = _mono_mul(m, n)
            if not s:
                continue
            p = DMonomial._trusted(srt)
            c = acc.get(p, 0) + s * a * b
            if c:
                acc[p] = c
            else:
                del acc[p]
    return DiffElement._raw(acc)


def derive(u: DiffElement) -> DiffElement:
    acc: dict[DMonomial, Fraction] = {}
    for m, a in u._c.items():
        for n, b in _mono_derive(m).items():
            c = acc.get(n, 0) + a * b
            if c:
                acc[n] = c
            else:
                del acc[n]
    return DiffElement._raw(acc)


def circ(u: DiffElement, v: DiffElement) -> DiffElement:
    """u o v = u * D(v)."""
    return mul(u, derive(v))


def weight(u: DMonomial) -> int:
    if not u.factors:
        raise ValueError("weight of the empty monomial is undefined")
    return sum(f.order for f in u.factors) - len(u.factors) + 1


def compare(u: DMonomial, v: DMonomial) -> int:
    """-1, 0 or 1 according to the order (*)."""
    a, b = u.sort_key, v.sort_key
    return (a > b) - (a < b)


def leading(f: DiffElement) -> tuple[DMonomial, Fraction]:
    if not f:
        raise ValueError("the zero element has no leading monomial")
    m = max(f._c, key=lambda m: m.sort_key)
    return m, f._c[m]


# --------------------------------------------------------------------------
# text form and enumeration
# --------------------------------------------------------------------------

_FACTOR = re.compile(r"\s*(?:D\^(\d+)\[([A-Za-z_][A-Za-z0-9_]*)\]|([A-Za-z_][A-Za-z0-9_]*))")


def parse_monomial(text: str, alphabet: Alphabet) -> DiffElement:
    """Parse ``"x y D^2[xi]"`` (any factor order) into a signed monomial or zero."""
    fs = []
    pos = 0
    text = text.rstrip()
    if text.strip() == "1":
        return DiffElement.one()
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m:
            raise ValueError(f"bad monomial syntax at position {pos} in {text!r}")
        order = int(m.group(1)) if m.group(1) else 0
        name = m.group(2) or m.group(3)
        if name not in alphabet:
            raise ValueError(f"unknown generator {name!r}")
        fs.append(DFactor(order, alphabet[name]))
        pos = m.end()
    return canonical_monomial(fs)


def _with_orders(gens: Sequence[Generator], orders: Sequence[int]) -> Iterator[DMonomial]:
    """Admissible monomials whose multiset of orders is ``orders``."""
    counts = sorted(Counter(orders).items())
    choices = [letter_multisets(gens, m) for _, m in counts]
    for pick in product(*choices):
        fs = []
        for (o, _), letters in zip(counts, pick):
            fs.extend(DFactor(o, g) for g in sorted(letters))
        yield DMonomial._trusted(tuple(fs))


def enumerate_monomials(
    alphabet: Alphabet,
    length: int,
    *,
    max_order: int | None = None,
    order_sum: int | None = None,
) -> list[DMonomial]:
    """Admissible monomials of ``length`` with every order <= ``max_order``
    and/or total order ``order_sum``, in increasing (*) order."""
    if length < 0:
        raise ValueError("length must be >= 0")
    if max_order is None and order_sum is None:
        raise ValueError("give max_order or order_sum")
    gens = alphabet.generators
    if order_sum is not None:
        shapes = []
        for p in partitions(order_sum):
            if len(p) <= length and (max_order is None or not p or p[0] <= max_order):
                shapes.append(p + (0,) * (length - len(p)))
    else:
        shapes = combinations_with_replacement(range(max_order + 1), length)
    out = []
    for orders in shapes:
        out.extend(_with_orders(gens, orders))
    out.sort(key=lambda m: m.sort_key)
    return out
