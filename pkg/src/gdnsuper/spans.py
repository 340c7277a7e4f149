"""
Exact linear algebra over tableau and monomial coordinates, and the
bounded-degree verification suites built on it.

Everything is graded by length, so every subspace is handled one degree
at a time.  A :class:`SpanBasis` keeps rows in echelon form keyed by
their largest index in the deterministic basis order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Sequence

from .diffalg import DiffElement, DMonomial, derive, enumerate_monomials, mul
from .element import GdnElement, as_element
from .embed import phi
from .normal import EngineMismatch, normal_form
from .rewrite import ls_defect, rc_defect
from .tableau import enumerate_tableaux, is_tableau
from .terms import Alphabet, Generator, Leaf, Term, enumerate_terms, left_normed, print_term

__all__ = [
    "SpanBasis",
    "coordinates",
    "span_contains",
    "span_insert",
    "symmetrization",
    "right_power",
    "CheckReport",
    "RelationSet",
    "check_identities",
    "check_agreement",
    "check_engel_identity",
    "check_nilpotency",
    "gdn_ideal_slice",
    "diff_ideal_slice",
    "check_pbw_slice",
    "check_lemma42",
    "check_lemma43",
]


# --------------------------------------------------------------------------
# coordinates and spans
# --------------------------------------------------------------------------


def coordinates(e) -> dict:
    """Sparse coefficient vector of a normal-form GdnElement or a DiffElement."""
    if isinstance(e, DiffElement):
        return dict(e._c)
    e = as_element(e)
    for t in e._c:
        if not is_tableau(t):
            raise ValueError(f"{print_term(t)} is not a tableau; normalize the element first")
    return dict(e._c)


def _vector(e) -> dict:
    if isinstance(e, Mapping):
        return {k: Fraction(v) for k, v in e.items() if v}
    if isinstance(e, (DiffElement, GdnElement)):
        return dict(e._c)
    return dict(as_element(e)._c)


def _top(v: dict):
    return max(v, key=lambda k: k.sort_key)


class SpanBasis:
    """Echelon basis of a subspace.

    ``rows`` maps each pivot index to a row whose largest index is that
    pivot, with coefficient 1 there.  Indices are Terms or DMonomials.
    """

    __slots__ = ("rows",)

    def __init__(self, vectors: Iterable = ()):
        self.rows: dict = {}
        for v in vectors:
            self.insert(v)

    def copy(self) -> "SpanBasis":
        b = SpanBasis()
        b.rows = dict(self.rows)
        return b

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> dict:
        """Remainder of ``v`` after elimination against the rows."""
        v = _vector(v)
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v
            k = max(hits, key=lambda k: k.sort_key)
            c = v[k]
            for idx, a in self.rows[k].items():
                w = v.get(idx, 0) - c * a
                if w:
                    v[idx] = w
                else:
                    v.pop(idx, None)

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def insert(self, v) -> bool:
        """Add ``v``; returns False when it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = _top(r)
        c = r[p]
        self.rows[p] = {k: a / c for k, a in r.items()}
        return True

    def vectors(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows, key=lambda k: k.sort_key)]

    def elements(self) -> list:
        out = []
        for row in self.vectors():
            k = next(iter(row))
            out.append(DiffElement(row) if isinstance(k, DMonomial) else GdnElement(row))
        return out

    def contains_span(self, other: "SpanBasis") -> bool:
        return all(self.contains(r) for r in other.rows.values())

    def __eq__(self, other):
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return self.rank == other.rank and self.contains_span(other)

    __hash__ = None

    def __repr__(self):
        return f"SpanBasis(rank={self.rank})"


def span_contains(basis: SpanBasis, e) -> bool:
    return basis.contains(e)


def span_insert(basis: SpanBasis, e) -> SpanBasis:
    """A new basis spanning ``basis`` and ``e``; the input is left unchanged."""
    b = basis.copy()
    b.insert(e)
    return b


# --------------------------------------------------------------------------
# symmetric and power products
# --------------------------------------------------------------------------


def symmetrization(xs: Sequence) -> GdnElement:
    """Sum of the left-normed products over all orderings of ``xs`` (unreduced)."""
    if not xs:
        raise ValueError("symmetrization needs at least one argument")
    xs = [as_element(x) for x in xs]
    acc = GdnElement()
    for perm in permutations(range(len(xs))):
        p = xs[perm[0]]
        for i in perm[1:]:
            p = p.circ(xs[i])
        acc = acc + p
    return acc


def right_power(x, n: int) -> GdnElement:
    """x_L^n: right multiplication by ``x`` applied ``n - 1`` times to ``x``."""
    if n < 1:
        raise ValueError("power must be >= 1")
    x = as_element(x)
    p = x
    for _ in range(n - 1):
        p = p.circ(x)
    return p


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witness: str | None = None

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        line = f"{self.name}: {'pass' if self.passed else 'FAIL'}"
        if self.witness:
            line += f" (witness: {self.witness})"
        return line


def _nf(e, method):
    return normal_form(e, method)


def _guard(name: str, run: Callable[[], CheckReport]) -> CheckReport:
    try:
        return run()
    except EngineMismatch as err:
        return CheckReport(name, False, {}, str(err))


# --------------------------------------------------------------------------
# defining identities and engine agreement
# --------------------------------------------------------------------------


def _term_triples(alphabet: Alphabet, max_length: int):
    by_len = {k: enumerate_terms(alphabet, k) for k in range(1, max_length - 1)}
    for l1 in range(1, max_length - 1):
        for l2 in range(1, max_length - l1):
            for l3 in range(1, max_length - l1 - l2 + 1):
                for a in by_len[l1]:
                    for b in by_len[l2]:
                        for c in by_len[l3]:
                            yield a, b, c


def check_identities(alphabet: Alphabet, max_length: int, method: str = "rewrite") -> CheckReport:
    """Both defining identities vanish on every term triple of total length <= max_length."""
    name = "identities"

    def run():
        n = 0
        for a, b, c in _term_triples(alphabet, max_length):
            for label, defect in (("ls", ls_defect), ("rc", rc_defect)):
                n += 1
                r = _nf(defect(a, b, c), method)
                if r:
                    w = f"{label}_defect({a}, {b}, {c}) -> {r}"
                    return CheckReport(name, False, {"checked": n}, w)
        return CheckReport(name, True, {"checked": n, "max_length": max_length})

    return _guard(name, run)


def check_agreement(alphabet: Alphabet, max_length: int) -> CheckReport:
    """Both engines agree, and preserve phi, on every term of length <= max_length."""
    name = "agreement"
    n = 0
    for k in range(1, max_length + 1):
        for t in enumerate_terms(alphabet, k):
            n += 1
            a = normal_form(t, "rewrite")
            b = normal_form(t, "embed")
            if a != b:
                return CheckReport(name, False, {"checked": n}, f"{t}: rewrite {a}, embed {b}")
            if phi(a) != phi(t):
                return CheckReport(name, False, {"checked": n}, f"phi changes under nf for {t}")
    return CheckReport(name, True, {"checked": n, "max_length": max_length})


# --------------------------------------------------------------------------
# Engel identity and nilpotency
# --------------------------------------------------------------------------


def check_engel_identity(t: int, method: str = "rewrite") -> CheckReport:
    """The symmetrization identity over t+1 distinct even generators, plus the
    inclusion-exclusion expansion of (x_1 + ... + x_t)_L^t."""
    if not 1 <= t <= 4:
        raise ValueError("t must be between 1 and 4")
    name = f"engel(t={t})"
    alphabet = Alphabet([(f"x{i}", 0) for i in range(1, t + 2)])
    xs = [Leaf(g) for g in alphabet]

    def run():
        lhs = symmetrization(xs)
        rhs = symmetrization(xs[1:]).circ(xs[0]).scale(t) + GdnElement({left_normed(xs): math.factorial(t)})
        diff = _nf(lhs - rhs, method)
        if diff:
            return CheckReport(name, False, {}, f"S(x1..x{t + 1}) - rhs -> {diff}")
        # formal identity in the free magma: no reduction involved
        ys = xs[:t]
        total = right_power(sum((as_element(y) for y in ys), GdnElement()), t)
        expect = GdnElement()
        for r in range(1, t):
            for sub in combinations(ys, r):
                part = right_power(sum((as_element(y) for y in sub), GdnElement()), t)
                expect = expect + part.scale((-1) ** (t - r + 1))
        sym = symmetrization(ys)
        if total - sym != expect:
            return CheckReport(name, False, {}, "inclusion-exclusion expansion differs")
        if _nf(total - sym - expect, method):
            return CheckReport(name, False, {}, "inclusion-exclusion fails after normalization")
        return CheckReport(name, True, {"t": t, "terms": len(lhs)})

    return _guard(name, run)


def check_nilpotency(alphabet: Alphabet, length: int, method: str = "rewrite") -> CheckReport:
    """Every term of ``length`` over an all-odd alphabet normalizes to 0."""
    if alphabet.even:
        raise ValueError("nilpotency check needs an alphabet of odd generators only")
    name = f"nilpotency(length={length})"

    def run():
        terms = enumerate_terms(alphabet, length)
        for t in terms:
            r = _nf(t, method)
            if r:
                return CheckReport(name, False, {"terms": len(terms)}, f"{t} -> {r}")
        return CheckReport(name, True, {"terms": len(terms), "bound": 3 * len(alphabet.odd)})

    return _guard(name, run)


# --------------------------------------------------------------------------
# ideal slices
# --------------------------------------------------------------------------


class RelationSet:
    """Homogeneous generating set S of an ideal (parity and length homogeneous)."""

    def __init__(self, alphabet: Alphabet, relations: Iterable = ()):
        self.alphabet = alphabet
        rels = []
        for r in relations:
            e = as_element(r)
            if not e:
                continue
            if not e.is_homogeneous():
                raise ValueError(f"relation {e} is not parity-homogeneous")
            if len(e.lengths()) != 1:
                raise ValueError(f"relation {e} mixes lengths")
            rels.append(e)
        self.relations: tuple[GdnElement, ...] = tuple(rels)

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def max_length(self) -> int:
        return max((next(iter(r.lengths())) for r in self.relations), default=0)


def _tableau_terms(alphabet: Alphabet, n: int) -> list[Term]:
    return [tab.to_term() for tab in enumerate_tableaux(alphabet, n)]


def gdn_ideal_slice(S: RelationSet, L: int, method: str = "rewrite") -> dict[int, SpanBasis]:
    """Per-degree bases (degrees 1..L) of the two-sided ideal generated by S."""
    if L < S.max_length():
        raise ValueError(f"L = {L} is below the longest relation ({S.max_length()})")
    A = S.alphabet
    tabs = {k: _tableau_terms(A, k) for k in range(1, L)}
    out: dict[int, SpanBasis] = {}
    for d in range(1, L + 1):
        B = SpanBasis()
        for s in S:
            if next(iter(s.lengths())) == d:
                B.insert(_nf(s, method))
        for k in range(1, d):
            for f in out[d - k].elements():
                for tau in tabs[k]:
                    B.insert(_nf(f.circ(tau), method))
                    B.insert(_nf(as_element(tau).circ(f), method))
        out[d] = B
    return out


def _power_derive(f: DiffElement, t: int) -> DiffElement:
    for _ in range(t):
        f = derive(f)
    return f


def diff_ideal_slice(S: RelationSet, L: int) -> dict[int, SpanBasis]:
    """Per-degree bases of span{u * D^t(phi(s))} with weight-0 products.

    A monomial ``u`` of length ``m`` and total order ``sigma`` gives weight 0
    exactly for ``t = m - sigma``; the empty ``u`` pairs with ``t = 0``.
    """
    if L < S.max_length():
        raise ValueError(f"L = {L} is below the longest relation ({S.max_length()})")
    A = S.alphabet
    out = {d: SpanBasis() for d in range(1, L + 1)}
    for s in S:
        ls = next(iter(s.lengths()))
        ps = phi(s)
        derived = {0: ps}
        for m in range(0, L - ls + 1):
            d = ls + m
            if m == 0:
                out[d].insert(ps)
                continue
            for sigma in range(0, m + 1):
                t = m - sigma
                if t not in derived:
                    derived[t] = _power_derive(ps, t)
                for u in enumerate_monomials(A, m, order_sum=sigma):
                    out[d].insert(mul(DiffElement.from_monomial(u), derived[t]))
    return out


def check_pbw_slice(S: RelationSet, L: int, method: str = "rewrite") -> CheckReport:
    """phi of the GDN ideal slice equals the differential ideal slice at every degree <= L."""
    name = f"pbw(L={L})"

    def run():
        g = gdn_ideal_slice(S, L, method)
        dslice = diff_ideal_slice(S, L)
        dims = []
        for d in range(1, L + 1):
            img = SpanBasis(phi(e) for e in g[d].elements())
            dims.append({"degree": d, "gdn": g[d].rank, "phi": img.rank, "diff": dslice[d].rank})
            if img != dslice[d]:
                missing = next(
                    (e for e in dslice[d].elements() if not img.contains(e)),
                    next((e for e in img.elements() if not dslice[d].contains(e)), None),
                )
                return CheckReport(name, False, {"dimensions": dims}, f"degree {d}: {missing}")
        return CheckReport(name, True, {"dimensions": dims})

    return _guard(name, run)


# --------------------------------------------------------------------------
# left-normed slot products for the Engel inclusions
# --------------------------------------------------------------------------

Slot = Callable[[int], list]


def _slot_product(slots: Sequence[Slot], d: int, method: str) -> SpanBasis:
    """Degree-d slice of [V_1, ..., V_k]_L, each V_i given per degree by spanning terms."""
    cur = {n: SpanBasis(_nf(t, method) for t in slots[0](n)) for n in range(1, d + 1)}
    for j, slot in enumerate(slots[1:], start=1):
        nxt = {}
        for n in range(1, d + 1):
            B = SpanBasis()
            for n1 in range(1, n):
                for f in cur[n1].elements():
                    for t in slot(n - n1):
                        B.insert(_nf(f.circ(t), method))
            nxt[n] = B
        cur = nxt
    return cur[d]


def _tabs_by(alphabet: Alphabet, parity: int | None = None, min_length: int = 1) -> Slot:
    cache: dict[int, list] = {}

    def slot(n: int) -> list:
        if n not in cache:
            ts = _tableau_terms(alphabet, n) if n >= min_length else []
            cache[n] = [t for t in ts if parity is None or t.parity == parity]
        return cache[n]

    return slot


def _letters(gens: Sequence[Generator]) -> Slot:
    return lambda n: [Leaf(g) for g in gens] if n == 1 else []


def _v_power(alphabet: Alphabet, n: int, d: int, method: str) -> SpanBasis:
    """Degree-d slice of (A^2)^n by the recursion V^n = sum (V^i o V^{n-i})."""
    sq = _tabs_by(alphabet, min_length=2)
    memo: dict[tuple[int, int], SpanBasis] = {}

    def V(k: int, e: int) -> SpanBasis:
        if (k, e) in memo:
            return memo[(k, e)]
        if k == 1:
            B = SpanBasis(as_element(t) for t in sq(e))
        else:
            B = SpanBasis()
            for i in range(1, k):
                for e1 in range(1, e):
                    left = V(i, e1)
                    if not left.rank:
                        continue
                    right = V(k - i, e - e1)
                    for f in left.elements():
                        for g in right.elements():
                            B.insert(_nf(f.circ(g), method))
        memo[(k, e)] = B
        return B

    return V(n, d)


def check_lemma42(n: int, d: int, method: str = "rewrite") -> CheckReport:
    """(A^2)^n lies in A_L^{n+1} at degree d, over the free algebra on {x, xi}."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    name = f"lemma42(n={n}, d={d})"
    A = Alphabet.parse("x:0,xi:1")

    def run():
        lhs = _v_power(A, n, d, method)
        rhs = _slot_product([_tabs_by(A)] * (n + 1), d, method)
        details = {"lhs_rank": lhs.rank, "rhs_rank": rhs.rank}
        for e in lhs.elements():
            if not rhs.contains(e):
                return CheckReport(name, False, details, str(e))
        return CheckReport(name, True, details)

    return _guard(name, run)


def check_lemma43(d: int, method: str = "rewrite") -> CheckReport:
    """[A0, A1, A1, A1]_L lies in [A0, A1, A0]_L + [A0, A1, A1, kX1]_L at degree d,
    over the free algebra on {x, y, xi, eta}."""
    if not 1 <= d <= 5:
        raise ValueError("d must be between 1 and 5")
    name = f"lemma43(d={d})"
    A = Alphabet.parse("x:0,y:0,xi:1,eta:1")
    A0, A1, kX1 = _tabs_by(A, 0), _tabs_by(A, 1), _letters(A.odd)

    def run():
        lhs = _slot_product([A0, A1, A1, A1], d, method)
        rhs = _slot_product([A0, A1, A0], d, method)
        for e in _slot_product([A0, A1, A1, kX1], d, method).elements():
            rhs.insert(e)
        details = {"lhs_rank": lhs.rank, "rhs_rank": rhs.rank}
        for e in lhs.elements():
            if not rhs.contains(e):
                return CheckReport(name, False, details, str(e))
        return CheckReport(name, True, details)

    return _guard(name, run)
