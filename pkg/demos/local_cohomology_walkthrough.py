"""
Reading local cohomology off degree complexes
=============================================

Each graded piece of H^i_m(I/J) is the reduced cohomology of a pair of
simplicial complexes attached to the multidegree.  Here we look at a few of
those complexes by hand, then let the box scan do the rest.
"""

from monlc import MonomialIdeal, RingContext, degree_complex, depth_and_cm, lc_piece

R = RingContext.standard(3)
I = MonomialIdeal(R, [(2, 1, 0), (0, 1, 3)])
print("I =", I)

# no faces at all, only the empty face, and an honest complex
for a in [(5, 5, 5), (-1, 0, -1), (1, 0, 0)]:
    D = degree_complex(I, a)
    kind = "void" if D.is_void() else "{empty face}" if D.is_empty() else D.facet_sets()
    print(f"degree complex at {a}: {kind}")

# the unit ideal over I gives the cyclic module S/I
S = MonomialIdeal.unit(R)
prof = depth_and_cm(I, S)
print(f"S/I: dim={prof.dim}  depth={prof.depth}  CM={prof.is_CM}")
for (i, a), h in prof.nonzero()[:8]:
    print(f"  H^{i} at {a}: {h}")
print("recomputed one piece directly:", lc_piece(I, S, *prof.nonzero()[0][0]))
