import pytest
from hypothesis import given

from gdnsuper import Leaf, Node, TermSyntaxError, enumerate_terms, left_normed, parse_term, print_term, right_normed
from gdnsuper.terms import Alphabet, catalan, is_simple, simple_letters

from helpers import A4, T, terms

x, y, xi, eta = (Leaf(A4[n]) for n in ("x", "y", "xi", "eta"))


def test_root_examples():
    assert x.root == 0
    assert T("(x*(y*(x*y)))").root == 1
    assert T("(((x*y)*x)*y)").root == 3
    assert T("((x*y)*(x*y))").root == 2


def test_parity_and_length():
    assert xi.parity == 1
    assert T("(xi*eta)").parity == 0
    assert T("(x*xi)").parity == 1
    assert x.length == 1
    assert T("(x*(y*x))").length == 3
    assert T("(((x*y)*x)*y)").length == 4


def test_bracketings():
    A = Alphabet.parse("x:0,y:0,z:0")
    a, b, c = (Leaf(g) for g in A)
    assert print_term(left_normed([a, b, c])) == "((x*y)*z)"
    assert print_term(right_normed([a, b, c])) == "(x*(y*z))"
    assert left_normed([a]) == a
    with pytest.raises(ValueError):
        left_normed([])
    with pytest.raises(ValueError):
        right_normed([])


def test_parse_structure():
    A = Alphabet.parse("x:0,y:0,z:0")
    a, b, c = (Leaf(g) for g in A)
    assert parse_term("(x*(y*z))", A) == Node(a, Node(b, c))
    assert parse_term("((x*y)*z)", A) == Node(Node(a, b), c)
    assert parse_term(" ( x * ( y*z ) ) ", A) == Node(a, Node(b, c))


@pytest.mark.parametrize("text,msg", [("(x*w)", "unknown generator"), ("(x*y", r"expected '\)'"), ("(x*y))", "trailing"), ("", "expected generator")])
def test_parse_errors(text, msg):
    with pytest.raises(TermSyntaxError, match=msg) as err:
        parse_term(text, A4)
    assert err.value.pos >= 0


def test_alphabet_parsing():
    A = Alphabet.parse("x:0, y:0 ,xi:1")
    assert [g.rank for g in A] == [0, 1, 2]
    assert A.odd == (A["xi"],) and A.spec() == "x:0,y:0,xi:1"
    for bad in ("x:2", "x", "x:0,x:1", "", "1x:0"):
        with pytest.raises(ValueError):
            Alphabet.parse(bad)


def test_simple_terms():
    assert is_simple(x) and is_simple(T("(x*(y*xi))"))
    assert not is_simple(T("((x*y)*xi)"))
    assert simple_letters(T("(x*(y*xi))")) == (A4["x"], A4["y"], A4["xi"])


def test_enumeration_counts():
    for n in range(1, 6):
        ts = enumerate_terms(A4, n)
        assert len(ts) == catalan(n - 1) * 4**n
        assert len(set(ts)) == len(ts)


def test_round_trip_exhaustive_length4():
    for n in range(1, 5):
        for t in enumerate_terms(A4, n):
            assert parse_term(print_term(t), A4) == t


def test_print_deep_spine():
    t = left_normed([x] * 3000)
    assert t.root == 2999
    assert print_term(t).count("*") == 2999


@given(terms())
def test_root_bounds(t):
    assert 0 <= t.root <= t.length - 1
    if t.length >= 2 and t.root == t.length - 1:
        # equality case: left-normed over generators
        s = t
        while isinstance(s, Node):
            assert isinstance(s.right, Leaf)
            s = s.left


@given(terms(max_leaves=4), terms(max_leaves=4))
def test_root_of_product(m, n):
    assert Node(m, n).root == m.root + max(1, n.root)


@given(terms(max_leaves=3), terms(max_leaves=3), terms(max_leaves=3))
def test_root_monotonicity(m1, m2, m3):
    assert Node(Node(m1, m2), m3).root == Node(Node(m1, m3), m2).root
    if m1.root > m2.root:
        assert Node(m1, m3).root > Node(m2, m3).root
        if m1.root > 1:
            assert Node(m3, m1).root > Node(m3, m2).root
        if m1.root == 1:
            assert Node(m3, m1).root == Node(m3, m2).root


@given(terms())
def test_round_trip_property(t):
    assert parse_term(print_term(t), A4) == t
    assert hash(parse_term(print_term(t), A4)) == hash(t)


@given(terms(), terms())
def test_order_is_total(s, t):
    assert (s < t) + (t < s) + (s == t) == 1
