"""
GDN supertableaux: recognition, reconstruction and enumeration.

A tableau is the left-normed term ``[a, mu_1, ..., mu_n]_L`` over simple
factors ``mu_i = [a_{i,r_i}, ..., a_{i,1}]_R``.  The *free letters* are the
head ``a`` together with every ``a_{i,j}`` with ``j >= 2``; read in chain
order (head, then each factor left to right without its last letter) they
must be non-increasing.  Condition (iv') requires the odd free letters to be
pairwise distinct, head included.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .terms import Alphabet, Generator, Leaf, Node, Term, is_simple, left_normed, print_term, right_normed, simple_letters

__all__ = [
    "Tableau",
    "NotATableau",
    "decompose_tableau",
    "as_tableau",
    "is_tableau",
    "enumerate_tableaux",
    "partitions",
    "letter_multisets",
]


@dataclass(frozen=True)
class Tableau:
    head: Generator
    # each factor in printed order (a_{i,r_i}, ..., a_{i,1})
    factors: tuple[tuple[Generator, ...], ...] = ()

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)

    @property
    def length(self) -> int:
        return 1 + sum(self.lengths)

    def free_letters(self) -> tuple[Generator, ...]:
        out = [self.head]
        for f in self.factors:
            out.extend(f[:-1])
        return tuple(out)

    def to_term(self) -> Term:
        return left_normed([Leaf(self.head)] + [right_normed([Leaf(g) for g in f]) for f in self.factors])

    def __str__(self):
        return print_term(self.to_term())


class NotATableau(ValueError):
    """Raised by :func:`decompose_tableau`; ``condition`` names the first failure."""

    def __init__(self, condition: str, detail: str):
        super().__init__(f"not a tableau, condition ({condition}): {detail}")
        self.condition = condition


def _violation(head: Generator, factors: Sequence[Sequence[Generator]]) -> tuple[str, str] | None:
    rs = [len(f) for f in factors]
    for i in range(len(factors) - 1):
        if rs[i] < rs[i + 1]:
            return "i", f"factor lengths {rs} not non-increasing"
    for i in range(len(factors) - 1):
        if rs[i] == rs[i + 1] and factors[i][-1] < factors[i + 1][-1]:
            return "ii", f"last letters of equal-length factors {i + 1},{i + 2} increase"
    chain = [head]
    for f in factors:
        chain.extend(f[:-1])
    for u, v in zip(chain, chain[1:]):
        if u < v:
            return "iii", f"free letters {[g.name for g in chain]} not non-increasing"
    odd = [g for g in chain if g.parity == 1]
    if len(set(odd)) != len(odd):
        return "iv'", "repeated odd free letter"
    for i in range(len(factors) - 1):
        a, b = factors[i][-1], factors[i + 1][-1]
        if rs[i] == rs[i + 1] and a == b and a.parity == 1:
            return "v", f"equal-length factors {i + 1},{i + 2} share odd last letter {a.name}"
    return None


def _shape(t: Term) -> tuple[Generator, list[tuple[Generator, ...]]]:
    factors = []
    while isinstance(t, Node):
        if not is_simple(t.right):
            raise NotATableau("shape", f"right factor {print_term(t.right)} is not simple")
        factors.append(simple_letters(t.right))
        t = t.left
    factors.reverse()
    return t.gen, factors


def decompose_tableau(t: Term) -> Tableau:
    head, factors = _shape(t)
    bad = _violation(head, factors)
    if bad:
        raise NotATableau(*bad)
    return Tableau(head, tuple(factors))


def as_tableau(t: Term) -> Tableau | None:
    try:
        return decompose_tableau(t)
    except NotATableau:
        return None


def is_tableau(t: Term) -> bool:
    return as_tableau(t) is not None


# --------------------------------------------------------------------------
# enumeration, shape first
# --------------------------------------------------------------------------


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples; ``()`` for ``n == 0``."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def letter_multisets(gens: Sequence[Generator], size: int) -> list[tuple[Generator, ...]]:
    """Non-increasing ``size``-tuples over ``gens`` with no odd letter repeated."""
    desc = sorted(gens, reverse=True)
    out = []
    for combo in combinations_with_replacement(desc, size):
        odd = [g for g in combo if g.parity == 1]
        if len(set(odd)) == len(odd):
            out.append(combo)
    return out


def enumerate_tableaux(alphabet: Alphabet, n: int) -> list[Tableau]:
    """All tableaux of length ``n``, sorted by the term order."""
    if n < 1:
        raise ValueError("length must be >= 1")
    gens = alphabet.generators
    found = []
    for shape in partitions(n - 1):
        groups = []  # (r, multiplicity) runs of the shape
        for r in shape:
            if groups and groups[-1][0] == r:
                groups[-1][1] += 1
            else:
                groups.append([r, 1])
        lasts_choices = [letter_multisets(gens, m) for _, m in groups]
        frees = letter_multisets(gens, n - len(shape))
        for lasts in product(*lasts_choices):
            last_letters = [g for grp in lasts for g in grp]
            for free in frees:
                it = iter(free[1:])
                factors = []
                for r, last in zip(shape, last_letters):
                    body = tuple(next(it) for _ in range(r - 1))
                    factors.append(body + (last,))
                found.append(Tableau(free[0], tuple(factors)))
    found.sort(key=lambda tab: tab.to_term().sort_key)
    return found
