"""
Building an algebra and reading off its basic invariants
========================================================

"""

from pathlib import Path

# Everything starts from a small presentation file: a field, variable
# names, and the relations cutting out the quotient.
from artinv import build_algebra, load_presentation

HERE = Path(__file__).parent
pres = load_presentation(HERE / "presentations" / "cube.alg")
print(f"presentation digest: {pres.digest()}")

# Building runs Buchberger and enumerates the standard monomials; it
# fails loudly if the quotient is not finite dimensional.
A = build_algebra(pres)
print(f"length: {A.dim}")
print(f"hilbert function: {A.hilbert_function()}")

# The standard monomials form the working basis of the quotient.
one, zero = A.field.one, A.field.zero
basis = [str(A.polynomial_from_element(
    tuple(one if j == i else zero for j in range(A.dim))))
    for i in range(A.dim)]
print(f"basis: {', '.join(basis)}")

# The socle is everything killed by the maximal ideal; a 1-dimensional
# socle is exactly the Gorenstein condition for these rings.
socle = A.socle()
print(f"socle dimension: {socle.space.dim}")
print(f"gorenstein: {A.is_gorenstein()}")

# Quotients by ideals are plain linear algebra once the multiplication
# table is in hand.
y = A.parse_element("y")
N = A.ideal_from_strings(["y"])
print(f"length of A/(y): {A.dim - N.space.dim}")
print(f"annihilator of y has dimension {A.annihilator(y).space.dim}")
