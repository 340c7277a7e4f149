from fractions import Fraction

import pytest
from hypothesis import given, settings

from gdnsuper import (
    decompose_tableau,
    enumerate_tableaux,
    enumerate_terms,
    enumerate_weight0,
    leading,
    leading_tableau_monomial,
    monomial_to_tableau,
    nf_embed,
    parse_monomial,
    phi,
    weight,
)
from gdnsuper.terms import Alphabet

from helpers import A2, A4, E, T, terms

X = Alphabet.parse("x:0")
XI = Alphabet.parse("xi:1")


def M(text):
    return parse_monomial(text, A4)


def mono(text):
    (m,) = M(text).monomials()
    return m


def rank(vectors):
    """Plain Gaussian elimination over Q on dict vectors."""
    rows = []
    for v in vectors:
        v = dict(v)
        for piv, r in rows:
            if piv in v:
                c = v[piv]
                for k, a in r.items():
                    v[k] = v.get(k, 0) - c * a
                    if not v[k]:
                        del v[k]
        if v:
            piv = next(iter(v))
            c = v[piv]
            rows.append((piv, {k: Fraction(a) / c for k, a in v.items()}))
    return len(rows)


def test_phi_examples():
    assert phi(T("x")) == M("x")
    assert phi(T("(xi*xi)")) == M("xi D^1[xi]")
    assert phi(T("(y*(x*xi))")) == M("y D^1[x] D^1[xi]") + M("x y D^2[xi]")
    assert phi(E("2 x - (x*y)")) == M("x").scale(2) - M("x D^1[y]")


def test_leading_tableau_monomial_examples():
    assert leading_tableau_monomial(T("x")) == (mono("x"), 1)
    assert leading_tableau_monomial(T("(y*(x*xi))")) == (mono("x y D^2[xi]"), 1)
    assert leading_tableau_monomial(decompose_tableau(T("(x*x)"))) == (mono("x D^1[x]"), 1)


def test_monomial_to_tableau_examples():
    assert monomial_to_tableau(mono("x y D^2[xi]")).to_term() == T("(y*(x*xi))")
    assert monomial_to_tableau(mono("x D^1[x]")).to_term() == T("(x*x)")
    with pytest.raises(ValueError, match="weight -1"):
        monomial_to_tableau(mono("x y D^1[xi] D^1[eta]"))


def test_nf_embed_examples():
    assert nf_embed(T("(x*(y*x))")) == E("((x*y)*x) + (y*(x*x)) - ((y*x)*x)")
    assert nf_embed(T("((y*(x*xi))*x)")) == T("((y*(x*xi))*x)")
    assert nf_embed(T("(xi*(xi*xi))")) == 0


def test_weight0_enumeration_examples():
    assert sorted(str(m) for m in enumerate_weight0(X, 3)) == ["x D^1[x] D^1[x]", "x x D^2[x]"]
    assert enumerate_weight0(XI, 3) == []
    assert [str(m) for m in enumerate_weight0(X, 1)] == ["x"]


def test_leading_formula_and_inverse_length5():
    for n in range(1, 6):
        seen = set()
        for tab in enumerate_tableaux(A4, n):
            m, s = leading_tableau_monomial(tab)
            assert leading(phi(tab.to_term())) == (m, s)
            assert monomial_to_tableau(m) == tab
            seen.add(m)
        assert len(seen) == len(enumerate_tableaux(A4, n))


@pytest.mark.parametrize("alphabet", [X, XI, A2, A4])
def test_counts_match(alphabet):
    for n in range(1, 7):
        assert len(enumerate_tableaux(alphabet, n)) == len(enumerate_weight0(alphabet, n))


@pytest.mark.parametrize("alphabet,top", [(X, 7), (A2, 5), (A4, 4)])
def test_rank_of_phi_image_equals_tableau_count(alphabet, top):
    # the image of all terms has the dimension of the free algebra in that degree
    for n in range(1, top + 1):
        images = [phi(t)._c for t in enumerate_terms(alphabet, n)]
        assert rank(images) == len(enumerate_tableaux(alphabet, n))


@settings(max_examples=100, deadline=None)
@given(terms(max_leaves=6))
def test_phi_lands_in_weight_zero(t):
    for m in phi(t).monomials():
        assert weight(m) == 0 and m.length == t.length


@settings(max_examples=100, deadline=None)
@given(terms(max_leaves=6))
def test_nf_embed_is_sound(t):
    assert phi(nf_embed(t)) == phi(t)
