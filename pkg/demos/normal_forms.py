"""Two routes to the same normal form.

Run: python demos/normal_forms.py
"""

from gdnsuper import Alphabet, Node, interchange, nf_embed, nf_rewrite, parse_term, phi

A = Alphabet.parse("x:0,y:0,xi:1,eta:1")

# Left supersymmetry with z = x: three tableaux, two of root 2.
t = parse_term("(x*(y*x))", A)
print(f"{t}  ->  {nf_rewrite(t)}")

# Odd letters anticommute past each other, and squares of odd letters in a
# free slot vanish.
for text in ["((x*xi)*eta)", "(xi*(xi*xi))", "((xi*eta)*(xi*(x*y)))"]:
    t = parse_term(text, A)
    print(f"{t}  ->  {nf_rewrite(t)}")

# The embedding gives the same answer by a completely different mechanism:
# phi lands in the weight-0 part of the differential algebra and the leading
# monomial names the tableau to subtract next.
t = parse_term("((x*(y*xi))*(y*(x*eta)))", A)
print()
print("phi:", phi(t))
print("rewrite:", nf_rewrite(t))
print("embed:  ", nf_embed(t))

# One letter exchange between simple factors, with its exact correction.
mu, nu = parse_term("(x*(y*xi))", A), parse_term("(y*(x*eta))", A)
sign, mu2, nu2, corr = interchange(mu, nu, 2, 2)
print()
print(f"{Node(mu, nu)} = {'' if sign > 0 else '-'}{Node(mu2, nu2)} + [{corr}]")
print("correction roots:", sorted({u.root for u in corr}), "versus", Node(mu, nu).root)
