"""Finite-index sublattices of Z^2 and their classifying invariants.

A sublattice is stored by its canonical row Hermite basis
((r11, r12), (0, r22)) with r11, r22 >= 1 and 0 <= r12 < r22, so two
lattices are equal as sets iff their matrices are equal.  The Smith
invariants d1 | d2 together with a projective-line point mod d2/d1
classify the lattice completely; reconstruct inverts the classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import intmat
from .arith import xgcd
from .errors import BadInvariants, NotFullRank
from .projline import ProjPoint, class_of

Rows = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, order=True)
class Lattice2:
    """A finite-index sublattice of Z^2 in canonical HNF basis form."""

    rows: Rows

    @property
    def index(self) -> int:
        """The index [Z^2 : M] = r11 * r22."""
        return self.rows[0][0] * self.rows[1][1]

    def to_json(self) -> dict:
        return {"rows": [list(self.rows[0]), list(self.rows[1])]}

    def __str__(self) -> str:
        (a, b), (_, c) = self.rows
        return f"rows ({a},{b}),(0,{c})"


@dataclass(frozen=True)
class SmithData:
    """Smith normal form data: left * basis * right = diag(d1, d2), d1 | d2."""

    d1: int
    d2: int
    left: Rows
    right: Rows


def _hnf2(v1, v2) -> Rows:
    a, b = v1
    c, d = v2
    det = a * d - b * c
    if det == 0:
        raise NotFullRank(f"rows {v1}, {v2} are linearly dependent")
    if a == 0 and c == 0:
        raise NotFullRank(f"rows {v1}, {v2} span a rank-1 lattice")
    g, s, t = xgcd(a, c)
    r22 = abs(det) // g
    r12 = (s * b + t * d) % r22
    return ((g, r12), (0, r22))


def from_rows(v1, v2) -> Lattice2:
    """Canonical HNF lattice spanned by the two rows; NotFullRank if dependent."""
    return Lattice2(_hnf2(tuple(v1), tuple(v2)))


def contains(lat: Lattice2, v) -> bool:
    """Membership of an integer vector, by back-substitution against the HNF."""
    (r11, r12), (_, r22) = lat.rows
    x, y = v
    if x % r11 != 0:
        return False
    return (y - (x // r11) * r12) % r22 == 0


def intersect(m1: Lattice2, m2: Lattice2) -> Lattice2:
    """The intersection lattice, again in canonical form."""
    rows = intmat.lattice_intersect([list(r) for r in m1.rows], [list(r) for r in m2.rows])
    return from_rows(rows[0], rows[1])


def smith(lat: Lattice2) -> SmithData:
    """Smith normal form of the canonical basis, with both transforms."""
    D, U, V = intmat.smith_normal_form([list(r) for r in lat.rows])
    return SmithData(
        d1=D[0][0],
        d2=D[1][1],
        left=tuple(tuple(r) for r in U),
        right=tuple(tuple(r) for r in V),
    )


def proj_invariant(lat: Lattice2) -> ProjPoint:
    """The classifying projective point of the lattice, mod d = d2/d1.

    With U * A * V = diag(d1, d2), the rows of U * A = diag(d1, d2) * V^-1
    form a basis {d1*(x, y), d2*(z, w)} with (x y; z w) unimodular; the
    class [x:y] mod d is independent of every choice made along the way.
    """
    sd = smith(lat)
    d = sd.d2 // sd.d1
    if d == 1:
        return ProjPoint(1, 0, 0)
    (v00, v01), (v10, v11) = sd.right
    detv = v00 * v11 - v01 * v10  # +1 or -1
    x, y = detv * v11, -detv * v01  # first row of right^-1
    return class_of(x, y, d)


def proj_invariant_bruteforce(lat: Lattice2, height: int = 40) -> ProjPoint:
    """Test oracle: scan lattice elements d1*(x, y) with gcd(x, y) = 1.

    Collects every witness inside the coefficient box and checks they all
    land in one class before returning it.
    """
    sd = smith(lat)
    d = sd.d2 // sd.d1
    if d == 1:
        return ProjPoint(1, 0, 0)
    r1, r2 = lat.rows
    seen = set()
    for i in range(-height, height + 1):
        for j in range(-height, height + 1):
            vx = i * r1[0] + j * r2[0]
            vy = i * r1[1] + j * r2[1]
            if vx == 0 and vy == 0:
                continue
            if vx % sd.d1 or vy % sd.d1:
                continue
            x, y = vx // sd.d1, vy // sd.d1
            if math.gcd(x, y) != 1:
                continue
            seen.add(class_of(x, y, d))
    if len(seen) != 1:
        raise AssertionError(f"witness classes not unique: {seen}")
    return seen.pop()


def reconstruct(d1: int, d2: int, p: ProjPoint) -> Lattice2:
    """The unique lattice with Smith invariants (d1, d2) and point p mod d2/d1.

    Completes the canonical coprime pair (a, b) of p to a determinant-one
    matrix via the canonical Bezout pair from xgcd and scales the rows by
    d1 and d2.
    """
    if d1 < 1 or d2 < 1 or d2 % d1 != 0:
        raise BadInvariants(f"need d1 | d2 with d1, d2 >= 1, got ({d1}, {d2})")
    d = d2 // d1
    if p.modulus != d:
        raise BadInvariants(f"point modulus {p.modulus} != d2/d1 = {d}")
    if d == 1:
        return Lattice2(((d1, 0), (0, d2)))
    pt = class_of(p.a, p.b, d)
    a, b = pt.a, pt.b
    _, x1, y1 = xgcd(a, b)  # a*x1 + b*y1 = 1, so (a b; -y1 x1) has det 1
    return Lattice2(_hnf2((d1 * a, d1 * b), (-d2 * y1, d2 * x1)))
