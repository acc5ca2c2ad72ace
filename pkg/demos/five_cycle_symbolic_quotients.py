"""
Symbolic quotients of the 5-cycle
=================================

The complex below has the five diagonals of a pentagon as facets.  Its
Stanley-Reisner ideal is the edge ideal of the 5-cycle.  We ask when the
quotient of consecutive symbolic powers is Cohen-Macaulay.
"""

from monlc import SimplicialComplex, is_matroid, lc_piece, stanley_reisner_ideal, symbolic_power
from monlc.symbolic import nonmatroid_witness, symbolic_quotient_report

D = SimplicialComplex.from_faces(5, [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)])
I = stanley_reisner_ideal(D)
print("I =", I)
print("matroid:", is_matroid(D))

# one row per t: dimension, depth and the CM verdict of I^(t)/I^(t+1)
rep = symbolic_quotient_report(D, (1, 2, 3))
for row in rep.rows:
    print(f"t={row.t}  dim={row.dim}  depth={row.depth}  CM={row.is_CM}  gCM={row.is_gCM}")

# basis exchange fails somewhere, and that failure points at a nonzero piece
u, vw, U, a = nonmatroid_witness(D)
print("exchange fails for", u, "against", vw, "inside", U)
h = lc_piece(symbolic_power(I, 3), symbolic_power(I, 2), len(U) + 1, a)
print(f"so H^{len(U) + 1} of I^(2)/I^(3) is nonzero at a = {a}: dim {h}")
