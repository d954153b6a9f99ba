"""
When the Rees number beats the Dilworth number
==============================================

"""

from pathlib import Path

from artinv import build_algebra, dilworth_oracle, load_presentation, mu, rees_number

HERE = Path(__file__).parent
A = build_algebra(load_presentation(HERE / "presentations" / "cube.alg"))

# The Dilworth number is the largest minimal-generator count over all
# ideals.  Over F2 this ring is small enough to enumerate every ideal.
d = dilworth_oracle(A)
print(f"dilworth number: {d.value} (checked {d.ideal_count} ideals)")
for maximizer in d.maximizers:
    basis = ", ".join(str(p) for p in maximizer.basis_polynomials())
    print(f"  maximizer needing {d.value} generators: span({basis})")

# The Rees number is the largest length of A modulo a single nonunit.
# It always dominates the Dilworth number, and here it is strictly bigger.
r = rees_number(A)
witness = A.polynomial_from_element(r.witness)
print(f"rees number: {r.value} [{r.mode}], attained by {witness}")

# The gap is visible by hand: the powers of the maximal ideal need at
# most 3 generators each, yet A/(x) has length 4.
for i in (1, 2, 3):
    print(f"  mu(m^{i}) = {mu(A, A.mpow(i))}")
quotient = A.dim - A.ideal_from_strings(["x"]).space.dim
print(f"  length of A/(x) = {quotient}")
