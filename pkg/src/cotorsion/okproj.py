"""The projective line over an ideal of an imaginary quadratic ring.

Points are classes of pairs (a, b) that are unimodular modulo the ideal
I (meaning <a> + <b> + I = O) under the relation a*d - b*c in I,
equivalently under scaling by units of O/I.  A point stores the canonical residues
of its representative: the pair whose reduced coordinates are
lexicographically least over the unit orbit.  Every residue-unimodular
pair also lifts to a globally coprime pair; coprime_lift computes such
a lift, bridging the two presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intmat
from .errors import BadProduct, NonComaximal, NotUnimodular, OutOfRange, SearchExhausted
from .quadring import (
    QuadIdeal,
    QuadInt,
    QuadRing,
    factor_ideal,
    ideal_crt,
    ideal_mul,
    ideal_sum,
    unit_ideal,
)
from .search import shells

#: ok_enumerate refuses to materialize more classes than this.
ENUMERATION_BOUND = 10**6


@dataclass(frozen=True, order=True)
class OkProjPoint:
    """A point of the projective line over O/modulus, in canonical form."""

    modulus: QuadIdeal
    a: tuple[int, int]
    b: tuple[int, int]

    @property
    def ring(self) -> QuadRing:
        return self.modulus.ring

    def rep(self) -> tuple[QuadInt, QuadInt]:
        K = self.ring
        return QuadInt(K, *self.a), QuadInt(K, *self.b)

    def to_json(self) -> dict:
        return {
            "D": self.ring.d,
            "I": [list(self.modulus.hnf[0]), list(self.modulus.hnf[1])],
            "a": list(self.a),
            "b": list(self.b),
        }

    def __str__(self) -> str:
        ax, ay = self.a
        bx, by = self.b
        return f"[{ax}{ay:+}*w:{bx}{by:+}*w] mod {self.modulus}"


def is_coprime_pair(a: QuadInt, b: QuadInt) -> bool:
    """Whether <a> + <b> = O globally."""
    w = a.ring.omega
    rows = []
    for g in (a, b):
        if not g.is_zero():
            rows.append(list(g.coords()))
            rows.append(list((g * w).coords()))
    return intmat.row_hnf(rows) == [[1, 0], [0, 1]] if rows else False


def is_unimodular_pair(a: QuadInt, b: QuadInt, I: QuadIdeal) -> bool:
    """Whether <a> + <b> + I = O."""
    w = I.ring.omega
    rows = [list(r) for r in I.hnf]
    for g in (a, b):
        if not g.is_zero():
            rows.append(list(g.coords()))
            rows.append(list((g * w).coords()))
    return intmat.row_hnf(rows) == [[1, 0], [0, 1]]


@lru_cache(maxsize=None)
def unit_residues(I: QuadIdeal) -> tuple[QuadInt, ...]:
    """All residues mod I that are units of O/I, in scan order."""
    K = I.ring
    (r11, _), (_, r22) = I.hnf
    out = []
    for x in range(r11):
        for y in range(r22):
            el = QuadInt(K, x, y)
            if is_unimodular_pair(el, K.element(0), I):
                out.append(el)
    return tuple(out)


def ok_class_of(a: QuadInt, b: QuadInt, I: QuadIdeal) -> OkProjPoint:
    """Canonical representative of [a:b] over O/I.

    The representative minimizes the reduced coordinate 4-tuple
    (a.x, a.y, b.x, b.y) over the orbit under units of O/I.
    """
    if not is_unimodular_pair(a, b, I):
        raise NotUnimodular(f"({a}, {b}) is not unimodular mod {I}")
    if I.is_unit_ideal():
        return OkProjPoint(I, (0, 0), (0, 0))
    best = None
    for lam in unit_residues(I):
        ra = I.reduce(lam * a)
        rb = I.reduce(lam * b)
        key = (ra.x, ra.y, rb.x, rb.y)
        if best is None or key < best:
            best = key
    return OkProjPoint(I, (best[0], best[1]), (best[2], best[3]))


def ok_equivalent(a: QuadInt, b: QuadInt, c: QuadInt, d: QuadInt, I: QuadIdeal) -> bool:
    """Whether [a:b] = [c:d] over O/I: the cross determinant lies in I."""
    if not is_unimodular_pair(a, b, I) or not is_unimodular_pair(c, d, I):
        raise NotUnimodular(f"pair not unimodular mod {I}")
    return I.contains(a * d - b * c)


def ok_cardinality(I: QuadIdeal) -> int:
    """|PF^1 over O/I| = product over P^k || I of N(P)^k + N(P)^(k-1)."""
    total = 1
    for P, k in factor_ideal(I):
        n = P.norm
        total *= n**k + n ** (k - 1)
    return total


def ok_enumerate(I: QuadIdeal, bound: int = ENUMERATION_BOUND) -> list[OkProjPoint]:
    """All points of the projective line over O/I, sorted by representative.

    Scans residue pairs, skipping pairs whose orbit was already marked,
    so the total work is (number of classes) * (number of units).
    """
    card = ok_cardinality(I)
    if card > bound:
        raise OutOfRange(f"{card} points exceeds the enumeration bound {bound}")
    K = I.ring
    if I.is_unit_ideal():
        return [OkProjPoint(I, (0, 0), (0, 0))]
    (r11, _), (_, r22) = I.hnf
    units = unit_residues(I)
    seen: set[tuple[int, int, int, int]] = set()
    points = []
    for ax in range(r11):
        for ay in range(r22):
            a = QuadInt(K, ax, ay)
            for bx in range(r11):
                for by in range(r22):
                    if (ax, ay, bx, by) in seen:
                        continue
                    b = QuadInt(K, bx, by)
                    if not is_unimodular_pair(a, b, I):
                        continue
                    best = None
                    for lam in units:
                        ra = I.reduce(lam * a)
                        rb = I.reduce(lam * b)
                        key = (ra.x, ra.y, rb.x, rb.y)
                        seen.add(key)
                        if best is None or key < best:
                            best = key
                    points.append(
                        OkProjPoint(I, (best[0], best[1]), (best[2], best[3]))
                    )
    points.sort()
    return points


def _check_factors(I: QuadIdeal, factors) -> None:
    if not factors:
        raise BadProduct("empty factor list")
    prod = unit_ideal(I.ring)
    for J in factors:
        prod = ideal_mul(prod, J)
    if prod != I:
        raise BadProduct(f"factors multiply to {prod}, expected {I}")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if not ideal_sum(factors[i], factors[j]).is_unit_ideal():
                raise NonComaximal(f"{factors[i]} and {factors[j]} are not comaximal")


def ok_crt_split(p: OkProjPoint, factors) -> list[OkProjPoint]:
    """Components of p under the CRT bijection for comaximal ideal factors."""
    factors = list(factors)
    _check_factors(p.modulus, factors)
    a, b = p.rep()
    return [ok_class_of(a, b, J) for J in factors]


def ok_crt_join(points) -> OkProjPoint:
    """The unique point splitting to the given components (comaximal moduli)."""
    points = list(points)
    if not points:
        raise BadProduct("empty point list")
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if not ideal_sum(points[i].modulus, points[j].modulus).is_unit_ideal():
                raise NonComaximal(
                    f"moduli {points[i].modulus} and {points[j].modulus} are not comaximal"
                )
    a = ideal_crt([(QuadInt(p.ring, *p.a), p.modulus) for p in points])
    b = ideal_crt([(QuadInt(p.ring, *p.b), p.modulus) for p in points])
    modulus = points[0].modulus
    for p in points[1:]:
        modulus = ideal_mul(modulus, p.modulus)
    return ok_class_of(a, b, modulus)


def coprime_lift(
    a: QuadInt, b: QuadInt, I: QuadIdeal, box: int = 20
) -> tuple[QuadInt, QuadInt]:
    """A globally coprime pair congruent to (a, b) mod I.

    Searches offsets from I by increasing coefficient box; existence is
    classical, the bound is pragmatic, and exhaustion raises
    SearchExhausted rather than claiming nonexistence.
    """
    if not is_unimodular_pair(a, b, I):
        raise NotUnimodular(f"({a}, {b}) is not unimodular mod {I}")
    b0, b1 = I.basis()
    for c in shells(4, box):
        la = a + b0 * c[0] + b1 * c[1]
        lb = b + b0 * c[2] + b1 * c[3]
        if is_coprime_pair(la, lb):
            return la, lb
    raise SearchExhausted(f"no coprime lift of ({a}, {b}) mod {I} within box {box}")
