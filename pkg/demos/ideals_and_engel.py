"""Bounded-degree checks: an ideal slice seen from both sides, and the
identities behind the Engel-type results.

Run: python demos/ideals_and_engel.py
"""

from gdnsuper import Alphabet, RelationSet, check_engel_identity, check_lemma42, check_lemma43, check_pbw_slice, parse_term

X = Alphabet.parse("x:0")
r = check_pbw_slice(RelationSet(X, [parse_term("(x*x)", X)]), 6)
print(r.summary())
print("degree  gdn  phi  diff")
for d in r.details["dimensions"]:
    print(f"{d['degree']:>6} {d['gdn']:>4} {d['phi']:>4} {d['diff']:>5}")

print()
for t in (1, 2, 3, 4):
    print(check_engel_identity(t).summary())
for rep in (check_lemma42(2, 5), check_lemma42(3, 6), check_lemma43(5)):
    print(rep.summary(), rep.details)
