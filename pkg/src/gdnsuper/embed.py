"""
The embedding phi of the free GDN superalgebra into kD_s[X], and the
normal form it induces.

``phi`` sends a generator to itself and a product to the circle product.
The leading monomial of ``phi`` of a tableau is read off the tableau
directly and every weight-0 monomial arises this way exactly once, so
greedy elimination of leading monomials recovers tableau coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .diffalg import DFactor, DiffElement, DMonomial, _sort_signed, _with_orders, circ, leading, weight
from .element import GdnElement, as_element
from .tableau import Tableau, decompose_tableau, partitions
from .terms import Alphabet, Leaf, Term

__all__ = [
    "phi",
    "phi_term",
    "leading_tableau_monomial",
    "monomial_to_tableau",
    "nf_embed",
    "enumerate_weight0",
]


@lru_cache(maxsize=None)
def phi_term(t: Term) -> DiffElement:
    if isinstance(t, Leaf):
        return DiffElement.from_factor(0, t.gen)
    return circ(phi_term(t.left), phi_term(t.right))


def phi(e) -> DiffElement:
    """Linear, multiplicative extension of a -> a; accepts terms and elements."""
    if isinstance(e, Term):
        return phi_term(e)
    acc: dict[DMonomial, Fraction] = {}
    for t, c in as_element(e)._c.items():
        for m, d in phi_term(t)._c.items():
            v = acc.get(m, 0) + c * d
            if v:
                acc[m] = v
            else:
                del acc[m]
    return DiffElement._raw(acc)


def _as_tab(t) -> Tableau:
    return t if isinstance(t, Tableau) else decompose_tableau(t)


def leading_tableau_monomial(t) -> tuple[DMonomial, int]:
    """Leading monomial of phi(t) and its coefficient, from the shape alone.

    phi of the left-normed product is ``a * D(phi(mu_1)) * ... * D(phi(mu_n))``
    and the top part of ``D(phi(mu_i))`` is ``a_{i,r}...a_{i,2} D^r(a_{i,1})``;
    the sign is the cost of sorting that word.
    """
    tab = _as_tab(t)
    word = [DFactor(0, tab.head)]
    for f in tab.factors:
        word.extend(DFactor(0, g) for g in f[:-1])
        word.append(DFactor(len(f), f[-1]))
    s, srt = _sort_signed(word)
    if not s:
        raise AssertionError(f"tableau {tab} has an inadmissible leading word")
    return DMonomial._trusted(srt), s


def monomial_to_tableau(u: DMonomial) -> Tableau:
    """The tableau whose leading monomial is ``u`` (which must have weight 0)."""
    w = weight(u)
    if w != 0:
        raise ValueError(f"monomial {u} has weight {w}, expected 0")
    zero = sorted((f.gen for f in u.factors if f.order == 0), key=lambda g: -g.rank)
    tops = sorted((f for f in u.factors if f.order > 0), key=lambda f: f.key, reverse=True)
    head, rest = zero[0], iter(zero[1:])
    factors = []
    for f in tops:
        body = tuple(next(rest) for _ in range(f.order - 1))
        factors.append(body + (f.gen,))
    return decompose_tableau(Tableau(head, tuple(factors)).to_term())


def nf_embed(e) -> GdnElement:
    """Tableau normal form by greedy elimination of leading monomials of phi(e)."""
    f = phi(e)
    out: dict[Term, Fraction] = {}
    while f:
        u, c = leading(f)
        if weight(u) != 0:
            raise RuntimeError(f"leading monomial {u} of weight {weight(u)}: phi image left the weight-0 part")
        tab = monomial_to_tableau(u)
        t = tab.to_term()
        _, s = leading_tableau_monomial(tab)
        k = c / s
        out[t] = out.get(t, 0) + k
        f = f - phi_term(t).scale(k)
        if u in f:
            raise RuntimeError(f"elimination failed to remove {u}")
    return GdnElement(out)


def enumerate_weight0(alphabet: Alphabet, n: int) -> list[DMonomial]:
    """Admissible monomials of length ``n`` and weight 0, in increasing (*) order."""
    if n < 1:
        raise ValueError("length must be >= 1")
    out = []
    for p in partitions(n - 1):
        if len(p) <= n - 1:
            out.extend(_with_orders(alphabet.generators, p + (0,) * (n - len(p))))
    out.sort(key=lambda m: m.sort_key)
    return out
