"""Exact classification of finite-index sublattices and co-torsion modules.

Sublattices of Z^2 are classified by Smith invariants d1 | d2 plus a
point of the projective line over Z/(d2/d1); co-torsion submodules of
O^2 for an imaginary quadratic maximal order O are classified by
invariant factor ideals L >= K = L*I plus a point of the projective
line over O/I.  Both classifications come with explicit inverses,
enumeration, and exact Dirichlet-coefficient zeta identities.
"""

__version__ = "0.1.0"
