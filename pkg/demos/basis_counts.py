"""Graded dimensions of free GDN superalgebras, counted two ways.

Tableaux on one side, weight-0 monomials of the differential algebra on the
other.  Over a single even letter both give the partition numbers p(n-1).

Run: python demos/basis_counts.py
"""

from gdnsuper import Alphabet, enumerate_tableaux, enumerate_weight0

for spec in ["x:0", "xi:1", "x:0,xi:1", "xi:1,eta:1", "x:0,y:0,xi:1,eta:1"]:
    A = Alphabet.parse(spec)
    top = 8 if len(A) == 1 else 6
    tabs = [len(enumerate_tableaux(A, n)) for n in range(1, top + 1)]
    mons = [len(enumerate_weight0(A, n)) for n in range(1, top + 1)]
    flag = "" if tabs == mons else "   MISMATCH"
    print(f"{spec:<22} {tabs}{flag}")

# All-odd alphabets are nilpotent: the dimensions die out.
A = Alphabet.parse("xi:1,eta:1")
print("last nonzero degree over {xi, eta}:", max(n for n in range(1, 9) if enumerate_tableaux(A, n)))
