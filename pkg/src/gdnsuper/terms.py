"""
Alphabets, binary term trees and the root-number calculus.

A term is an element of the free magma over a finite, ordered alphabet of
homogeneous generators.  Terms are immutable and hashable; length, parity,
root number and a total ordering key are computed once at construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Generator",
    "Alphabet",
    "Term",
    "Leaf",
    "Node",
    "TermSyntaxError",
    "root",
    "parity",
    "length",
    "left_normed",
    "right_normed",
    "is_simple",
    "simple_letters",
    "parse_term",
    "print_term",
    "term_key",
    "enumerate_terms",
    "catalan",
]


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    rank: int

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity of {self.name!r} must be 0 or 1, got {self.parity!r}")

    def __lt__(self, other: "Generator") -> bool:
        return self.rank < other.rank

    def __le__(self, other: "Generator") -> bool:
        return self.rank <= other.rank

    def __gt__(self, other: "Generator") -> bool:
        return self.rank > other.rank

    def __ge__(self, other: "Generator") -> bool:
        return self.rank >= other.rank

    def __repr__(self):
        return f"{self.name}:{self.parity}"


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Alphabet:
    """Finite well-ordered set of generators; listing order is the order."""

    DEFAULT = "x:0,xi:1"

    def __init__(self, pairs: Iterable[tuple[str, int]]):
        gens = []
        seen = set()
        for rank, (name, par) in enumerate(pairs):
            if not _IDENT.match(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
            gens.append(Generator(name, int(par), rank))
        if not gens:
            raise ValueError("alphabet must be nonempty")
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_name = {g.name: g for g in gens}

    @classmethod
    def parse(cls, spec: str) -> "Alphabet":
        """Parse ``"x:0,y:0,xi:1"``."""
        pairs = []
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            name, sep, par = item.partition(":")
            if not sep or par.strip() not in ("0", "1"):
                raise ValueError(f"bad alphabet entry {item!r}; expected name:0 or name:1")
            pairs.append((name.strip(), int(par)))
        return cls(pairs)

    def __getitem__(self, name: str) -> Generator:
        return self._by_name[name]

    def __contains__(self, name) -> bool:
        return name in self._by_name

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @property
    def even(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.parity == 0)

    @property
    def odd(self) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.parity == 1)

    def leaf(self, name: str) -> "Leaf":
        return Leaf(self[name])

    def spec(self) -> str:
        return ",".join(f"{g.name}:{g.parity}" for g in self.generators)

    def __repr__(self):
        return f"Alphabet({self.spec()!r})"


class Term:
    """Binary product tree.  Use :class:`Leaf` and :class:`Node`."""

    __slots__ = ("length", "parity", "root", "_struct", "_hash")

    @property
    def sort_key(self):
        return (self.length, self.root, self._struct)

    def __lt__(self, other: "Term") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self):
        return print_term(self)

    def __repr__(self):
        return f"Term({print_term(self)!r})"

    def __hash__(self):
        return self._hash


class Leaf(Term):
    __slots__ = ("gen",)

    def __init__(self, gen: Generator):
        self.gen = gen
        self.length = 1
        self.parity = gen.parity
        self.root = 0
        self._struct = (0, gen.rank)
        self._hash = hash(("leaf", gen))

    def __eq__(self, other):
        return isinstance(other, Leaf) and self.gen == other.gen

    __hash__ = Term.__hash__


class Node(Term):
    __slots__ = ("left", "right")

    def __init__(self, left: Term, right: Term):
        self.left = left
        self.right = right
        self.length = left.length + right.length
        self.parity = (left.parity + right.parity) % 2
        if isinstance(right, Leaf):
            self.root = left.root + 1
        else:
            self.root = left.root + right.root
        self._struct = (1, left._struct, right._struct)
        self._hash = hash((left._hash, right._hash))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, Node)
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Term.__hash__


def root(t: Term) -> int:
    return t.root


def parity(t: Term) -> int:
    return t.parity


def length(t: Term) -> int:
    return t.length


def term_key(t: Term):
    """Deterministic total order: length, then root, then structure by rank."""
    return t.sort_key


def _as_term(x) -> Term:
    if isinstance(x, Term):
        return x
    if isinstance(x, Generator):
        return Leaf(x)
    raise TypeError(f"expected Term or Generator, got {type(x).__name__}")


def left_normed(ts: Sequence) -> Term:
    """(((t1*t2)*t3)*...*tn)"""
    if not ts:
        raise ValueError("left_normed needs a nonempty list")
    it = iter(ts)
    acc = _as_term(next(it))
    for t in it:
        acc = Node(acc, _as_term(t))
    return acc


def right_normed(ts: Sequence) -> Term:
    """(t1*(t2*(...*(tn-1*tn))))"""
    if not ts:
        raise ValueError("right_normed needs a nonempty list")
    acc = _as_term(ts[-1])
    for t in reversed(ts[:-1]):
        acc = Node(_as_term(t), acc)
    return acc


def is_simple(t: Term) -> bool:
    """True for right-normed products of generators (a single letter counts)."""
    while isinstance(t, Node):
        if not isinstance(t.left, Leaf):
            return False
        t = t.right
    return True


def simple_letters(t: Term) -> tuple[Generator, ...]:
    """Letters of a simple term in printed order, ``[a_r, ..., a_1]``."""
    out = []
    while isinstance(t, Node):
        if not isinstance(t.left, Leaf):
            raise ValueError(f"{print_term(t)} is not a simple term")
        out.append(t.left.gen)
        t = t.right
    out.append(t.gen)
    return tuple(out)


# --------------------------------------------------------------------------
# text form:  term := ident | "(" term "*" term ")"
# --------------------------------------------------------------------------


class TermSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _TermParser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise TermSyntaxError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def term(self) -> Term:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            left = self.term()
            self.expect("*")
            right = self.term()
            self.expect(")")
            return Node(left, right)
        m = _NAME.match(self.text, self.pos)
        if not m:
            found = ch or "end of input"
            raise TermSyntaxError(f"expected generator or '(', found {found!r}", self.text, self.pos)
        name = m.group(0)
        if name not in self.alphabet:
            raise TermSyntaxError(f"unknown generator {name!r}", self.text, self.pos)
        self.pos = m.end()
        return Leaf(self.alphabet[name])


def parse_term(text: str, alphabet: Alphabet) -> Term:
    p = _TermParser(text, alphabet)
    t = p.term()
    if p.peek():
        raise TermSyntaxError("trailing input", text, p.pos)
    return t


def print_term(t: Term) -> str:
    if isinstance(t, Leaf):
        return t.gen.name
    parts = []
    stack = [t]
    # iterative to survive deep left/right spines
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, Leaf):
            parts.append(item.gen.name)
        else:
            stack.extend((")", item.right, "*", item.left, "("))
    return "".join(parts)


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _terms_of_length(gens: tuple[Generator, ...], n: int) -> tuple[Term, ...]:
    if n == 1:
        return tuple(Leaf(g) for g in gens)
    out = []
    for k in range(1, n):
        lefts = _terms_of_length(gens, k)
        rights = _terms_of_length(gens, n - k)
        out.extend(Node(a, b) for a in lefts for b in rights)
    return tuple(out)


def enumerate_terms(alphabet: Alphabet, n: int) -> tuple[Term, ...]:
    """All terms of length ``n``: every bracketing times every letter assignment."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return _terms_of_length(alphabet.generators, n)
