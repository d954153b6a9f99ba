"""
Which integer sequences are Hilbert functions
=============================================

"""

from artinv import OSequence, is_admissible, macaulay_bound

# A sequence starting 1, n, ... is the Hilbert function of some graded
# quotient exactly when each entry respects the binomial growth bound
# computed from the previous one.
for values in [(1, 3, 3, 1), (1, 3, 1, 1), (1, 3, 1, 2), (1, 4, 10, 21)]:
    seq = OSequence(values)
    print(f"{values}: admissible = {is_admissible(seq)}")

# The bound itself is easy to inspect.  After h_2 = 1 the next entry
# can be at most 1, so (1, 3, 1, 2) is impossible.
for degree, value in [(1, 3), (2, 1)]:
    print(f"  growth bound after h_{degree} = {value}: "
          f"{macaulay_bound(value, degree)}")

# Shape tags classify short candidates: unimodal, symmetric, stretched
# (all middle entries equal to 1), almost stretched (at most one 2).
for values in [(1, 4, 1, 1), (1, 3, 2, 1), (1, 5, 5, 1)]:
    tags = OSequence(values).shape_tags()
    print(f"{values}: {', '.join(tags) or 'no tags'}")
