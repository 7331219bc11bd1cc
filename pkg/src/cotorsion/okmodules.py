"""Co-torsion O-submodules of O^2 for imaginary quadratic O.

A module M with finite quotient O^2/M is stored as a rank-4 Z-lattice in
coordinates (e1, w*e1, e2, w*e2), canonicalized by its 4x4 row HNF and
closed under the action of w.  Its classifying data is a pair of
invariant factor ideals L >= K with O^2/M isomorphic to O/L + O/K,
together with a projective-line point mod I where K = L*I; reconstruct
inverts the classification and enumerate_cotorsion lists the |PF^1_I|
modules sharing (L, K).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import intmat
from .arith import divisors
from .errors import BadInvariants, NonComaximal, NotFullRank, OutOfRange, SearchExhausted
from .okproj import (
    OkProjPoint,
    coprime_lift,
    ok_cardinality,
    ok_class_of,
    ok_crt_join,
    ok_enumerate,
)
from .quadring import (
    QuadIdeal,
    QuadInt,
    QuadRing,
    express_one,
    element_avoiding,
    factor_ideal,
    ideal_from_generators,
    ideal_mul,
    ideal_quotient,
    ideal_sum,
    is_principal,
    unit_ideal,
    valuation,
)
from .search import shells

Hnf4 = tuple[tuple[int, int, int, int], ...]
Pair = tuple[QuadInt, QuadInt]

#: enumerate_cotorsion refuses to materialize more modules than this.
ENUMERATION_BOUND = 10**5

#: default coefficient box for the witness search in proj_invariant_element
WITNESS_BOX = 25


def coords4(pair: Pair) -> list[int]:
    a, b = pair
    return [a.x, a.y, b.x, b.y]


def pair_from_coords(K: QuadRing, row) -> Pair:
    return QuadInt(K, row[0], row[1]), QuadInt(K, row[2], row[3])


def scale_pair(s: QuadInt, pair: Pair) -> Pair:
    return s * pair[0], s * pair[1]


@dataclass(frozen=True, order=True)
class CotorsionModule:
    """A finite-quotient O-submodule of O^2 as a canonical omega-stable Z-lattice."""

    ring: QuadRing
    hnf4: Hnf4

    @property
    def quotient_size(self) -> int:
        """|O^2/M| = determinant of the HNF basis."""
        n = 1
        for i in range(4):
            n *= self.hnf4[i][i]
        return n

    def contains(self, pair: Pair) -> bool:
        return intmat.solve_in_lattice([list(r) for r in self.hnf4], coords4(pair)) is not None

    def basis_pairs(self) -> list[Pair]:
        return [pair_from_coords(self.ring, row) for row in self.hnf4]

    def to_json(self) -> dict:
        return {"D": self.ring.d, "hnf4": [list(r) for r in self.hnf4]}

    def __str__(self) -> str:
        return f"module{self.hnf4} of {self.ring}"


def _omega_rows(K: QuadRing, rows) -> list[list[int]]:
    out = []
    w = K.omega
    for row in rows:
        a, b = pair_from_coords(K, row)
        out.append(coords4((a * w, b * w)))
    return out


def is_omega_stable(K: QuadRing, hnf_rows) -> bool:
    rows = [list(r) for r in hnf_rows]
    return all(
        intmat.solve_in_lattice(rows, img) is not None
        for img in _omega_rows(K, rows)
    )


def module_from_hnf(K: QuadRing, rows) -> CotorsionModule:
    """Validated module from an explicit 4x4 basis (e.g. deserialization)."""
    hnf = intmat.row_hnf([list(r) for r in rows])
    if len(hnf) != 4:
        raise NotFullRank("basis does not span a finite-index sublattice of O^2")
    if not is_omega_stable(K, hnf):
        raise BadInvariants("lattice is not stable under multiplication by w")
    return CotorsionModule(K, tuple(tuple(r) for r in hnf))


def module_from_generators(K: QuadRing, gens) -> CotorsionModule:
    """The O-span of the given O^2 elements, as a canonical module.

    Each generator contributes itself and its w-multiple, so the Z-span
    is omega-stable by construction.
    """
    rows = []
    w = K.omega
    for g in gens:
        a, b = g
        rows.append(coords4((a, b)))
        rows.append(coords4((a * w, b * w)))
    hnf = intmat.row_hnf(rows)
    if len(hnf) != 4:
        raise NotFullRank("generators do not span a finite-index submodule of O^2")
    return CotorsionModule(K, tuple(tuple(r) for r in hnf))


def full_module(K: QuadRing) -> CotorsionModule:
    one = K.one
    zero = K.element(0)
    return module_from_generators(K, [(one, zero), (zero, one)])


def annihilator(M: CotorsionModule) -> QuadIdeal:
    """The ideal {x in O : x * O^2 within M} = second invariant factor ideal.

    For each basis vector e_i, {x : x*e_i in M} is the projection of an
    integer kernel; the annihilator is the intersection of the two.
    """
    K = M.ring
    rows = [list(r) for r in M.hnf4]
    parts = []
    for embed in (lambda c: [c[0], c[1], 0, 0], lambda c: [0, 0, c[0], c[1]]):
        # x*e_1 has coordinates (x1, x2, 0, 0), x*e_2 has (0, 0, x1, x2);
        # x*e_i in M for both i suffices since M is an O-module
        stacked = [
            embed([1, 0]),
            embed([0, 1]),
        ] + rows
        kernel = intmat.left_kernel(stacked)
        proj = intmat.row_hnf([k[:2] for k in kernel])
        parts.append(proj)
    meet = intmat.lattice_intersect(parts[0], parts[1])
    return _ideal_from_rows(K, meet)


def _ideal_from_rows(K: QuadRing, rows) -> QuadIdeal:
    gens = [QuadInt(K, r[0], r[1]) for r in rows]
    return ideal_from_generators(K, gens)


def invariant_ideals(M: CotorsionModule) -> tuple[QuadIdeal, QuadIdeal]:
    """(L, K) with L >= K and O^2/M isomorphic to O/L + O/K.

    K is the annihilator; the ideal of 2x2 determinants over the basis
    pairs equals L*K, and L is recovered as the colon ideal (L*K : K).
    """
    Kann = annihilator(M)
    pairs = M.basis_pairs()
    dets = []
    for i in range(4):
        for j in range(i + 1, 4):
            ai, bi = pairs[i]
            aj, bj = pairs[j]
            dets.append(ai * bj - aj * bi)
    LK = ideal_from_generators(M.ring, [d for d in dets if not d.is_zero()])
    L = ideal_quotient(LK, Kann)
    assert L.contains_ideal(Kann), "invariant ideals not nested"
    assert L.norm * Kann.norm == M.quotient_size
    return L, Kann


@dataclass(frozen=True)
class OkInvariantData:
    """Classifying data of a module: L >= K = L*I and a point mod I."""

    L: QuadIdeal
    K: QuadIdeal
    I: QuadIdeal
    point: OkProjPoint


def _prime_divisors(Kann: QuadIdeal) -> list[QuadIdeal]:
    return [P for P, _ in factor_ideal(Kann)]


def witnesses(M: CotorsionModule, box: int = WITNESS_BOX):
    """Yield witness data (t, a, b, I) with (t*a, t*b) in M.

    A witness is an element (u, v) of M whose content ideal <u> + <v> is
    principal with generator t lying in L but in no L*P for a prime P of
    K; then (a, b) = (u/t, v/t) is globally coprime and [a:b] is the
    classifying point mod I.  Scans M by increasing coefficient box
    against its HNF basis.
    """
    L, Kann = invariant_ideals(M)
    I = ideal_quotient(Kann, L)
    traps = [ideal_mul(L, P) for P in _prime_divisors(Kann)]
    rows = M.basis_pairs()
    for c in shells(4, box):
        u = rows[0][0] * c[0] + rows[1][0] * c[1] + rows[2][0] * c[2] + rows[3][0] * c[3]
        v = rows[0][1] * c[0] + rows[1][1] * c[1] + rows[2][1] * c[2] + rows[3][1] * c[3]
        if u.is_zero() and v.is_zero():
            continue
        content = ideal_from_generators(M.ring, [u, v])
        if not L.contains_ideal(content):
            continue
        if any(T.contains_ideal(content) for T in traps):
            continue
        t = is_principal(content)
        if t is None:
            continue
        a = _exact_divide(u, t)
        b = _exact_divide(v, t)
        yield t, a, b, I


def _exact_divide(u: QuadInt, t: QuadInt) -> QuadInt:
    """u / t in O; u must be a multiple of t."""
    n = t.norm()
    prod = u * t.conj()
    assert prod.x % n == 0 and prod.y % n == 0, f"{u} is not a multiple of {t}"
    return QuadInt(u.ring, prod.x // n, prod.y // n)


def proj_invariant_element(M: CotorsionModule, box: int = WITNESS_BOX) -> OkInvariantData:
    """The full classifying data (L, K, I, point) of a module.

    The point is read off the first witness found; all witnesses yield
    the same class.  SearchExhausted flags a bound failure only.
    """
    L, Kann = invariant_ideals(M)
    I = ideal_quotient(Kann, L)
    assert ideal_mul(L, I) == Kann
    if I.is_unit_ideal():
        return OkInvariantData(L, Kann, I, OkProjPoint(I, (0, 0), (0, 0)))
    for _, a, b, _ in witnesses(M, box):
        return OkInvariantData(L, Kann, I, ok_class_of(a, b, I))
    raise SearchExhausted(f"no witness for {M} within coefficient box {box}")


def reconstruct(L: QuadIdeal, Kid: QuadIdeal, p: OkProjPoint) -> CotorsionModule:
    """The unique module with invariant ideals (L, K) and point p mod I.

    Assembled from a globally coprime lift (a, b) of p, a Bezout pair
    a*x - b*y = 1, and one scalar q_P per prime P of K with exact
    valuation 1 there: the rows (a, b) and (y, x) scaled by the products
    of q_P to the L- resp. K-valuations, plus L*K times both basis
    vectors.
    """
    ring = L.ring
    I = p.modulus
    if ideal_mul(L, I) != Kid:
        raise BadInvariants(f"K != L*I for L={L}, K={Kid}, I={I}")
    if I.is_unit_ideal():
        a, b = ring.one, ring.element(0)
    else:
        a, b = coprime_lift(QuadInt(ring, *p.a), QuadInt(ring, *p.b), I)
    # a*x - b*y = 1: split 1 = s + r with s in <a>, r in <b>
    if b.is_zero():
        x, y = _exact_divide(ring.one, a), ring.element(0)
    elif a.is_zero():
        x, y = ring.element(0), -_exact_divide(ring.one, b)
    else:
        s, r = express_one(ideal_from_generators(ring, [a]), ideal_from_generators(ring, [b]))
        x = _exact_divide(s, a)
        y = -_exact_divide(r, b)
    primes = [P for P, _ in factor_ideal(Kid)]
    qs = [element_avoiding(P, [ideal_mul(P, Q) for Q in primes]) for P in primes]
    s1 = ring.one
    s2 = ring.one
    for P, q in zip(primes, qs):
        s1 = s1 * q ** valuation(L, P)
        s2 = s2 * q ** valuation(Kid, P)
    n1 = (a * s1, b * s1)
    n2 = (y * s2, x * s2)
    w = ring.omega
    rows = [
        coords4(n1),
        coords4(scale_pair(w, n1)),
        coords4(n2),
        coords4(scale_pair(w, n2)),
    ]
    LK = ideal_mul(L, Kid)
    zero = ring.element(0)
    for beta in LK.basis():
        rows.append(coords4((beta, zero)))
        rows.append(coords4((zero, beta)))
    hnf = intmat.row_hnf(rows)
    if len(hnf) != 4:
        raise NotFullRank("reconstruction produced a degenerate lattice")
    return CotorsionModule(ring, tuple(tuple(r) for r in hnf))


def enumerate_cotorsion(
    L: QuadIdeal, Kid: QuadIdeal, bound: int = ENUMERATION_BOUND
) -> list[CotorsionModule]:
    """All modules with invariant ideals (L, K): one per point of PF^1_I."""
    if not L.contains_ideal(Kid):
        raise BadInvariants(f"K = {Kid} is not contained in L = {L}")
    I = ideal_quotient(Kid, L)
    if ideal_mul(L, I) != Kid:
        raise BadInvariants(f"K != L*I for L={L}, K={Kid}")
    count = ok_cardinality(I)
    if count > bound:
        raise OutOfRange(f"|PF^1_I| = {count} exceeds the enumeration bound {bound}")
    modules = [reconstruct(L, Kid, p) for p in ok_enumerate(I)]
    modules.sort()
    return modules


def intersect(M1: CotorsionModule, M2: CotorsionModule) -> CotorsionModule:
    """The intersection module (omega-stable automatically)."""
    assert M1.ring == M2.ring
    rows = intmat.lattice_intersect(
        [list(r) for r in M1.hnf4], [list(r) for r in M2.hnf4]
    )
    if len(rows) != 4:
        raise NotFullRank("intersection lost rank")
    return CotorsionModule(M1.ring, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class IntersectionReport:
    """Outcome of the invariant checks on an intersection of modules."""

    intersection: CotorsionModule
    full_rank: bool
    ideals_multiply: bool
    point_joins: bool
    witnesses_found: bool

    @property
    def ok(self) -> bool:
        return (
            self.full_rank
            and self.ideals_multiply
            and self.point_joins
            and self.witnesses_found
        )


def verify_intersection_theorem(
    modules, t_samples: int = 3, box: int = WITNESS_BOX
) -> IntersectionReport:
    """Check the intersection of modules with pairwise comaximal annihilators.

    Asserts: invariant ideals of the intersection are the products of
    the component ideals; its point is the CRT join of the component
    points; and (t*a, t*b) lies in the intersection for several sampled
    t in L avoiding L*P for every prime P of the product K.
    """
    modules = list(modules)
    ring = modules[0].ring
    data = [proj_invariant_element(M, box) for M in modules]
    for i in range(len(data)):
        for j in range(i + 1, len(data)):
            if not ideal_sum(data[i].K, data[j].K).is_unit_ideal():
                raise NonComaximal(
                    f"annihilators {data[i].K} and {data[j].K} are not comaximal"
                )
    cap = modules[0]
    for M in modules[1:]:
        cap = intersect(cap, M)
    full_rank = cap.quotient_size >= 1 and is_omega_stable(ring, cap.hnf4)

    prod_L = unit_ideal(ring)
    prod_K = unit_ideal(ring)
    for d in data:
        prod_L = ideal_mul(prod_L, d.L)
        prod_K = ideal_mul(prod_K, d.K)
    cap_data = proj_invariant_element(cap, box)
    ideals_multiply = (cap_data.L, cap_data.K) == (prod_L, prod_K)

    joined = ok_crt_join([d.point for d in data])
    point_joins = cap_data.point == joined

    # witness check: any valid t must carry the joined class into the intersection
    if joined.modulus.is_unit_ideal():
        a, b = ring.one, ring.element(0)
    else:
        a, b = coprime_lift(QuadInt(ring, *joined.a), QuadInt(ring, *joined.b), joined.modulus)
    traps = [ideal_mul(prod_L, P) for P, _ in factor_ideal(prod_K)]
    found = 0
    witnesses_ok = True
    b0, b1 = prod_L.basis()
    for c0, c1 in shells(2, box):
        t = b0 * c0 + b1 * c1
        if t.is_zero() or any(T.contains(t) for T in traps):
            continue
        if not cap.contains((t * a, t * b)):
            witnesses_ok = False
            break
        found += 1
        if found >= t_samples:
            break
    witnesses_ok = witnesses_ok and found >= t_samples
    return IntersectionReport(cap, full_rank, ideals_multiply, point_joins, witnesses_ok)


def enumerate_cotorsion_bruteforce(K: QuadRing, n: int) -> list[CotorsionModule]:
    """Independent oracle: every omega-stable 4x4 HNF lattice of determinant n."""
    out = []
    for h1 in divisors(n):
        for h2 in divisors(n // h1):
            for h3 in divisors(n // (h1 * h2)):
                h4 = n // (h1 * h2 * h3)
                for a12, a13, a23, a14, a24, a34 in product(
                    range(h2), range(h3), range(h3), range(h4), range(h4), range(h4)
                ):
                    rows = (
                        (h1, a12, a13, a14),
                        (0, h2, a23, a24),
                        (0, 0, h3, a34),
                        (0, 0, 0, h4),
                    )
                    if is_omega_stable(K, rows):
                        out.append(CotorsionModule(K, rows))
    out.sort()
    return out
