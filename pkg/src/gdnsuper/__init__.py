"""Normal forms and bounded-degree checks for free Gelfand-Dorfman-Novikov superalgebras."""

from .diffalg import (
    DFactor,
    DiffElement,
    DMonomial,
    canonical_monomial,
    circ,
    compare,
    derive,
    enumerate_monomials,
    leading,
    mul,
    parse_monomial,
    weight,
)
from .element import GdnElement, as_element, parse_element
from .embed import enumerate_weight0, leading_tableau_monomial, monomial_to_tableau, nf_embed, phi
from .normal import EngineMismatch, normal_form
from .rewrite import interchange, interchange_sign, ls_defect, nf_rewrite, rc_defect, reorder_tail, transpose_tail
from .spans import (
    CheckReport,
    RelationSet,
    SpanBasis,
    check_agreement,
    check_engel_identity,
    check_identities,
    check_lemma42,
    check_lemma43,
    check_nilpotency,
    check_pbw_slice,
    coordinates,
    diff_ideal_slice,
    gdn_ideal_slice,
    right_power,
    span_contains,
    span_insert,
    symmetrization,
)
from .tableau import NotATableau, Tableau, decompose_tableau, enumerate_tableaux, is_tableau
from .terms import (
    Alphabet,
    Generator,
    Leaf,
    Node,
    Term,
    TermSyntaxError,
    enumerate_terms,
    left_normed,
    length,
    parity,
    parse_term,
    print_term,
    right_normed,
    root,
)

__version__ = "0.1.0"
