"""
A verdict that flips with the coefficient field
===============================================

"""

import dataclasses
from pathlib import Path

from artinv import build_algebra, exactness, load_presentation, rees_number

HERE = Path(__file__).parent / "presentations"
pres = load_presentation(HERE / "char_family.alg")

# Same seven relations, two fields.  Swapping the field is one line.
over_q = build_algebra(pres)
over_f2 = build_algebra(dataclasses.replace(pres, field_name="F2"))

# The Hilbert functions agree, so nothing coarse separates the two.
print(f"hilbert function over Q:  {over_q.hilbert_function()}")
print(f"hilbert function over F2: {over_f2.hilbert_function()}")

# The Rees numbers do not.  Over Q a rational linear combination keeps
# the quotient small; over F2 there are too few scalars and every
# nonunit leaves a longer quotient behind.
rq = rees_number(over_q)
rf = rees_number(over_f2)
print(f"rees number over Q:  {rq.value} [{rq.mode}]")
print(f"rees number over F2: {rf.value} [{rf.mode}]")

# The exactness verdicts therefore split: exact over Q, refuted over F2
# by exhaustive ideal enumeration.
vq = exactness(over_q)
vf = exactness(over_f2)
print(f"over Q:  {type(vq).__name__}, value {vq.value}")
print(f"over F2: {type(vf).__name__}, dilworth {vf.dilworth} < rees {vf.rees}")
print(f"  refutation enumerated {vf.evidence.ideal_count} ideals")
