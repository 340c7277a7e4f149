"""
Normal forms in the tableau basis by rewriting with the defining identities.

Every step used here is an exact identity of the free GDN superalgebra:

* right supercommutativity permutes the factors of a left-normed product;
* left supersymmetry swaps two adjacent letters inside a right-normed
  product, emitting two correction terms of strictly larger root number.

Letter exchanges inside one simple term (:func:`reorder_tail`) and between
two simple terms (:func:`interchange`) are compositions of these.  The
normal-form driver follows the constructive induction on (length, root):
subterms are normalized first, products of tableaux are brought into the
form ``[a, mu_1, ..., mu_n]_L`` with simple ``mu_i``, and that form is
sorted letter by letter.  Every correction has the same length and a
larger root than the term it came from, which bounds the recursion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .element import GdnElement, as_element
from .tableau import as_tableau, decompose_tableau
from .terms import Generator, Leaf, Node, Term, is_simple, left_normed, print_term, right_normed, simple_letters

__all__ = [
    "ls_defect",
    "rc_defect",
    "reorder_tail",
    "transpose_tail",
    "interchange",
    "interchange_sign",
    "nf_rewrite",
    "termination_measure",
    "clear_cache",
]

_HALF = Fraction(1, 2)


def _sgn(p: int) -> int:
    return -1 if p % 2 else 1


def _parity_of(x) -> int:
    if isinstance(x, Term):
        return x.parity
    return as_element(x).parity()


def ls_defect(x, y, z) -> GdnElement:
    """x(yz) - (xy)z - (-1)^{|x||y|} (y(xz) - (yx)z), unreduced."""
    s = _sgn(_parity_of(x) * _parity_of(y))
    x, y, z = as_element(x), as_element(y), as_element(z)
    return x.circ(y.circ(z)) - x.circ(y).circ(z) - (y.circ(x.circ(z)) - y.circ(x).circ(z)).scale(s)


def rc_defect(x, y, z) -> GdnElement:
    """(xy)z - (-1)^{|y||z|} (xz)y, unreduced."""
    s = _sgn(_parity_of(y) * _parity_of(z))
    x, y, z = as_element(x), as_element(y), as_element(z)
    return x.circ(y).circ(z) - x.circ(z).circ(y).scale(s)


def termination_measure(t: Term) -> tuple[int, int]:
    """(length, length - 1 - root); corrections are strictly smaller."""
    return (t.length, t.length - 1 - t.root)


# --------------------------------------------------------------------------
# letter exchanges inside simple terms
# --------------------------------------------------------------------------


def _leaves(letters: Sequence[Generator]) -> list[Term]:
    return [Leaf(g) for g in letters]


def _in_prefix(prefix: Sequence[Generator], t: Term) -> Term:
    """c_0 * (c_1 * (... * t))"""
    for g in reversed(prefix):
        t = Node(Leaf(g), t)
    return t


def _reorder_print(letters: Sequence[Generator], src: Sequence[int]):
    """Rearrange a simple term so that new[q] = letters[src[q]] (printed indices).

    The last letter must stay put.  Returns ``(sign, new_letters, corr)`` with
    ``[letters]_R = sign * [new_letters]_R + corr`` exactly.
    """
    r = len(letters)
    if sorted(src) != list(range(r)):
        raise ValueError(f"not a permutation: {src}")
    if src[-1] != r - 1:
        raise ValueError("the last letter of a simple term cannot be moved")
    cur = list(range(r))
    L = list(letters)
    sign = 1
    corr: dict[Term, Fraction] = {}
    for q in range(r):
        k = cur.index(src[q])
        while k > q:
            # swap printed positions k-1, k: x(yZ) = s y(xZ) + (xy)Z - s (yx)Z
            i = k - 1
            x, y = L[i], L[i + 1]
            s = _sgn(x.parity * y.parity)
            Z = right_normed(_leaves(L[i + 2 :]))
            xy = _in_prefix(L[:i], Node(Node(Leaf(x), Leaf(y)), Z))
            yx = _in_prefix(L[:i], Node(Node(Leaf(y), Leaf(x)), Z))
            corr[xy] = corr.get(xy, 0) + sign
            corr[yx] = corr.get(yx, 0) - sign * s
            sign *= s
            L[i], L[i + 1] = y, x
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
            k -= 1
    return sign, tuple(L), GdnElement(corr)


def reorder_tail(mu: Term, perm: Sequence[int]):
    """Permute the letters ``a_r, ..., a_2`` of a simple term ``[a_r, ..., a_1]_R``.

    Positions are numbered from the right as usual (``a_1`` is position 1).
    ``perm[k-1]`` is the old position of the letter that ends up at position
    ``k``, so ``perm[0]`` must be 1.  Returns ``(sign, mu2, correction)`` with
    ``mu = sign * mu2 + correction``; all correction terms have the length of
    ``mu`` and root > 1.
    """
    if not is_simple(mu):
        raise ValueError(f"{print_term(mu)} is not a simple term")
    letters = simple_letters(mu)
    r = len(letters)
    perm = list(perm)
    if len(perm) != r or sorted(perm) != list(range(1, r + 1)):
        raise ValueError(f"perm must be a permutation of 1..{r}")
    if perm[0] != 1:
        raise ValueError("permutation must fix position 1")
    src = [r - perm[r - 1 - q] for q in range(r)]
    sign, new, corr = _reorder_print(letters, src)
    return sign, right_normed(_leaves(new)), corr


def transpose_tail(mu: Term, i: int, j: int):
    """Swap the letters at positions ``i, j >= 2`` of a simple term."""
    r = mu.length
    perm = list(range(1, r + 1))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return reorder_tail(mu, perm)


def _move_print(letters, frm: int, to: int):
    r = len(letters)
    order = [k for k in range(r) if k != frm]
    order.insert(to, frm)
    return _reorder_print(letters, order)


def _wrap_right(corr: GdnElement, tail: Sequence[Term]) -> GdnElement:
    """Right-multiply every term of ``corr`` by ``tail`` in left-normed fashion."""
    out = {}
    for t, c in corr._c.items():
        for f in tail:
            t = Node(t, f)
        out[t] = c
    return GdnElement._raw(out)


def interchange_sign(mu: Term, nu: Term, i: int, j: int) -> int:
    """Koszul sign of exchanging ``a_i`` of ``mu`` with ``b_j`` of ``nu``."""
    a = simple_letters(mu)[::-1]  # a[k-1] = a_k
    b = simple_letters(nu)[::-1]
    mid = sum(g.parity for g in a[: i - 1]) + sum(g.parity for g in b[j:])
    ai, bj = a[i - 1].parity, b[j - 1].parity
    return _sgn(ai * (mid + bj) + bj * mid)


def interchange(mu: Term, nu: Term, i: int, j: int):
    """Exchange letter ``a_i`` of ``mu`` with ``b_j`` of ``nu`` inside ``(mu * nu)``.

    Both arguments are simple terms of length >= 2 and ``2 <= i <= len(mu)``,
    ``2 <= j <= len(nu)``.  Returns ``(sign, mu2, nu2, correction)`` with
    ``(mu * nu) = sign * (mu2 * nu2) + correction`` exactly.

    The exchange is a chain of five exact moves: bring ``a_i`` to the front
    of ``mu``, commute it against ``nu``, swap it with ``b_j`` inside
    ``(a_i * nu)``, commute back, and put ``b_j`` where ``a_i`` was.
    """
    if not (is_simple(mu) and is_simple(nu)):
        raise ValueError("interchange needs simple terms")
    p, q = mu.length, nu.length
    if p < 2 or q < 2:
        raise ValueError("interchange needs terms of length >= 2")
    if not (2 <= i <= p and 2 <= j <= q):
        raise ValueError(f"indices out of range: i={i} (2..{p}), j={j} (2..{q})")
    A = simple_letters(mu)
    B = simple_letters(nu)
    ai_at, bj_at = p - i, q - j  # printed indices

    corr = GdnElement()
    nu_t = right_normed(_leaves(B))

    # 1. mu = s1 (a_i * mu_hat) + C1
    s1, A1, C1 = _move_print(A, ai_at, 0)
    ai, hat = A1[0], A1[1:]
    hat_t = right_normed(_leaves(hat))
    corr = corr + _wrap_right(C1, [nu_t])
    sign = s1
    # 2. ((a_i * hat) * nu) = s2 ((a_i * nu) * hat)
    hat_par = sum(g.parity for g in hat) % 2
    sign *= _sgn(hat_par * nu_t.parity)
    # 3. (a_i * nu) = s3 (b_j * nu') + C3
    s3, W, C3 = _reorder_print((ai,) + B, _transposition(q + 1, 0, 1 + bj_at))
    corr = corr + _wrap_right(C3, [hat_t]).scale(sign)
    sign *= s3
    bj, nu2 = W[0], W[1:]
    nu2_t = right_normed(_leaves(nu2))
    # 4. ((b_j * nu') * hat) = s4 ((b_j * hat) * nu')
    sign *= _sgn(nu2_t.parity * hat_par)
    # 5. (b_j * hat) = s5 mu' + C5
    s5, A2, C5 = _move_print((bj,) + tuple(hat), 0, ai_at)
    corr = corr + _wrap_right(C5, [nu2_t]).scale(sign)
    sign *= s5
    return sign, right_normed(_leaves(A2)), nu2_t, corr


def _transposition(n: int, u: int, v: int) -> list[int]:
    order = list(range(n))
    order[u], order[v] = order[v], order[u]
    return order


# --------------------------------------------------------------------------
# the main case: [a, mu_1, ..., mu_n]_L with simple mu_i
# --------------------------------------------------------------------------


class _Principal:
    """Tracks  lam = sign * [head, f_1, ..., f_n]_L + corr  through exact moves."""

    def __init__(self, head: Generator, factors: Sequence[Sequence[Generator]]):
        self.head = head
        self.factors = [tuple(f) for f in factors]
        self.sign = 1
        self.corr = GdnElement()
        self.root = len(self.factors)
        self.length = 1 + sum(len(f) for f in self.factors)

    def term(self) -> Term:
        return left_normed([Leaf(self.head)] + [right_normed(_leaves(f)) for f in self.factors])

    def _fpar(self, k: int) -> int:
        return sum(g.parity for g in self.factors[k]) % 2

    def permute(self, order: Sequence[int]):
        """Right supercommutativity; exact."""
        odd = [self._fpar(k) for k in range(len(self.factors))]
        inv = 0
        for x in range(len(order)):
            if not odd[order[x]]:
                continue
            for y in range(x + 1, len(order)):
                if odd[order[y]] and order[x] > order[y]:
                    inv += 1
        self.sign *= _sgn(inv)
        self.factors = [self.factors[k] for k in order]

    def _to_front(self, ks: Sequence[int]):
        order = list(ks) + [k for k in range(len(self.factors)) if k not in ks]
        self.permute(order)
        back = [0] * len(order)
        for pos, k in enumerate(order):
            back[k] = pos
        return back

    def _add_corr(self, c: GdnElement, tail_from: int):
        tail = [right_normed(_leaves(f)) for f in self.factors[tail_from:]]
        w = _wrap_right(c, tail)
        for t in w._c:
            if t.length != self.length or t.root <= self.root:
                raise AssertionError(
                    f"exchange produced {print_term(t)} with root {t.root} <= {self.root}"
                )
        self.corr = self.corr + w.scale(self.sign)

    def tail_move(self, k: int, src: Sequence[int]):
        """Reorder the free letters of the simple term (head * f_k)."""
        back = self._to_front([k])
        S = (self.head,) + self.factors[0]
        s, new, c = _reorder_print(S, src)
        self._add_corr(c, 1)
        self.sign *= s
        self.head, self.factors[0] = new[0], tuple(new[1:])
        self.permute(back)

    def cross_move(self, k: int, l: int, i: int, j: int):
        """Exchange a_{k,i} with a_{l,j} through ((head * f_k) * f_l)."""
        back = self._to_front([k, l])
        mu = right_normed(_leaves((self.head,) + self.factors[0]))
        nu = right_normed(_leaves(self.factors[1]))
        s, mu2, nu2, c = interchange(mu, nu, i, j)
        self._add_corr(c, 2)
        self.sign *= s
        A = simple_letters(mu2)
        self.head, self.factors[0] = A[0], A[1:]
        self.factors[1] = simple_letters(nu2)
        self.permute(back)

    # slots: 'h' for the head, (k, pos) for a_{k,pos} with pos >= 2
    def slots(self):
        out = ["h"]
        for k, f in enumerate(self.factors):
            r = len(f)
            out.extend((k, pos) for pos in range(r, 1, -1))
        return out

    def letter(self, slot) -> Generator:
        if slot == "h":
            return self.head
        k, pos = slot
        f = self.factors[k]
        return f[len(f) - pos]

    def transpose(self, u, v):
        if u == "h" or v == "h":
            k, pos = v if u == "h" else u
            r = len(self.factors[k])
            self.tail_move(k, _transposition(r + 1, 0, 1 + r - pos))
        elif u[0] == v[0]:
            k = u[0]
            r = len(self.factors[k])
            self.tail_move(k, _transposition(r + 1, 1 + r - u[1], 1 + r - v[1]))
        else:
            self.cross_move(u[0], v[0], u[1], v[1])

    def sort_factors(self):
        keys = [(-len(f), -f[-1].rank) for f in self.factors]
        order = sorted(range(len(keys)), key=lambda k: keys[k])
        self.permute(order)


def _main_case(head: Generator, factors: Sequence[Sequence[Generator]]) -> GdnElement:
    st = _Principal(head, factors)
    st.sort_factors()
    slots = st.slots()
    for s in range(len(slots)):
        best = max(range(s, len(slots)), key=lambda t: (st.letter(slots[t]).rank, -t))
        if st.letter(slots[best]).rank > st.letter(slots[s]).rank:
            st.transpose(slots[s], slots[best])

    def halve(move) -> GdnElement:
        # lam = s0 P + c0 and, after a move returning to P, lam = -s0 P + c1
        s0, c0 = st.sign, st.corr
        move()
        if st.sign != -s0:
            raise AssertionError(f"expected a sign flip for {print_term(st.term())}")
        return _nf_sum((c0 + st.corr).scale(_HALF))

    chain = [st.letter(x) for x in slots]
    for s in range(len(chain) - 1):
        if chain[s] == chain[s + 1] and chain[s].parity == 1:
            return halve(lambda: st.transpose(slots[s], slots[s + 1]))
    for k in range(len(st.factors) - 1):
        f, g = st.factors[k], st.factors[k + 1]
        if len(f) == len(g) and f[-1] == g[-1] and f[-1].parity == 1:

            def swap_back(k=k, r=len(f)):
                order = list(range(len(st.factors)))
                order[k], order[k + 1] = k + 1, k
                st.permute(order)
                for pos in range(r, 1, -1):
                    st.transpose((k, pos), (k + 1, pos))

            return halve(swap_back)

    t = st.term()
    decompose_tableau(t)  # sanity: must now be a tableau
    return GdnElement({t: st.sign}) + _nf_sum(st.corr)


# --------------------------------------------------------------------------
# products of tableaux and the general driver
# --------------------------------------------------------------------------


def _nf_sum(e: GdnElement) -> GdnElement:
    acc: dict[Term, Fraction] = {}
    for t, c in e._c.items():
        for u, d in _nf_term(t)._c.items():
            acc[u] = acc.get(u, 0) + c * d
    return GdnElement(acc)


def _lift(e: GdnElement, fn) -> GdnElement:
    acc: dict[Term, Fraction] = {}
    for t, c in e._c.items():
        for u, d in fn(t)._c.items():
            acc[u] = acc.get(u, 0) + c * d
    return GdnElement(acc)


def _spine(tab: Term):
    """Head generator and simple factors (as terms) of a tableau term."""
    factors = []
    while isinstance(tab, Node):
        factors.append(tab.right)
        tab = tab.left
    factors.reverse()
    return tab.gen, factors


@lru_cache(maxsize=None)
def _nf_product(sig: Term, tau: Term) -> GdnElement:
    """Normal form of (sig * tau) for tableaux ``sig`` and ``tau``."""
    a, mus = _spine(sig)
    b, nus = _spine(tau)
    if mus:
        if len(nus) <= 1:
            # tau is simple: [a, mu_1, ..., mu_p, tau]_L
            return _main_case(a, [simple_letters(m) for m in mus] + [simple_letters(tau)])
        # ((X * mu_p) * tau) = (-1)^{|mu_p||tau|} ((X * tau) * mu_p)
        mu_p = mus[-1]
        X = left_normed([Leaf(a)] + mus[:-1])
        inner = _nf_product(X, tau)
        s = _sgn(mu_p.parity * tau.parity)
        return _lift(inner, lambda k: _nf_product(k, mu_p)).scale(s)
    if len(nus) <= 1:
        return _main_case(a, [simple_letters(tau)])
    # a * (B * nu_q) = (a * B) * nu_q + (-1)^{|a||B|} (B * (a * nu_q) - (B * a) * nu_q)
    B = left_normed([Leaf(b)] + nus[:-1])
    nu_q = nus[-1]
    s = _sgn(sig.parity * B.parity)
    t1 = _lift(_nf_product(sig, B), lambda k: _nf_product(k, nu_q))
    t2 = _lift(_nf_product(sig, nu_q), lambda k: _nf_product(B, k))
    t3 = _lift(_nf_product(B, sig), lambda k: _nf_product(k, nu_q))
    return t1 + (t2 - t3).scale(s)


@lru_cache(maxsize=None)
def _nf_term(t: Term) -> GdnElement:
    if isinstance(t, Leaf) or as_tableau(t) is not None:
        return GdnElement({t: 1})
    left = _nf_term(t.left)
    right = _nf_term(t.right)
    acc: dict[Term, Fraction] = {}
    for u, c in left._c.items():
        for v, d in right._c.items():
            for w, e in _nf_product(u, v)._c.items():
                acc[w] = acc.get(w, 0) + c * d * e
    return GdnElement(acc)


def nf_rewrite(e) -> GdnElement:
    """Tableau normal form of a term or element, by identity rewriting."""
    return _nf_sum(as_element(e))


def clear_cache():
    _nf_term.cache_clear()
    _nf_product.cache_clear()
