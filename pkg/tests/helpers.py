from hypothesis import strategies as st

from gdnsuper import Alphabet, GdnElement, Leaf, Node, parse_element, parse_term

A2 = Alphabet.parse("x:0,xi:1")
A4 = Alphabet.parse("x:0,y:0,xi:1,eta:1")


def T(text, alphabet=A4):
    return parse_term(text, alphabet)


def E(text, alphabet=A4):
    return parse_element(text, alphabet)


def terms(alphabet=A4, max_leaves=6):
    leaves = st.sampled_from(alphabet.generators).map(Leaf)
    return st.recursive(leaves, lambda ch: st.builds(Node, ch, ch), max_leaves=max_leaves)


def elements(alphabet=A4, max_leaves=5):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(st.tuples(terms(alphabet, max_leaves), coeff), max_size=4).map(GdnElement)

