"""Maximal orders of imaginary quadratic fields and their nonzero ideals.

The ring for a squarefree D < 0 is Z[w] with w = sqrt(D) when D = 2, 3
(mod 4) and w = (1 + sqrt(D))/2 when D = 1 (mod 4); in both cases
w^2 = t*w + u for integers (t, u), and the norm form is positive
definite, which keeps every principality / avoidance search finite.

Ideals are stored by their canonical Z-basis in coordinates (1, w): a
row-HNF matrix ((r11, r12), (0, r22)) whose span is closed under
multiplication by w.  Ideal equality is matrix equality and the norm is
the determinant r11 * r22 = |O/I|.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from . import intmat
from .arith import factorize
from .errors import DegenerateInput, NonComaximal, SearchExhausted, ZeroIdeal
from .search import shells

Hnf2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, order=True)
class QuadRing:
    """The ring of integers of Q(sqrt(D)) for squarefree D < 0."""

    d: int

    @property
    def t(self) -> int:
        """Linear coefficient in w^2 = t*w + u."""
        return 1 if self.d % 4 == 1 else 0

    @property
    def u(self) -> int:
        """Constant coefficient in w^2 = t*w + u."""
        return (self.d - 1) // 4 if self.d % 4 == 1 else self.d

    @property
    def disc(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    def element(self, x: int, y: int = 0) -> "QuadInt":
        return QuadInt(self, x, y)

    @property
    def omega(self) -> "QuadInt":
        return QuadInt(self, 0, 1)

    @property
    def one(self) -> "QuadInt":
        return QuadInt(self, 1, 0)

    def units(self) -> tuple["QuadInt", ...]:
        if self.d == -1:
            coords = ((1, 0), (-1, 0), (0, 1), (0, -1))
        elif self.d == -3:
            coords = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
        else:
            coords = ((1, 0), (-1, 0))
        return tuple(QuadInt(self, x, y) for x, y in coords)

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


@lru_cache(maxsize=None)
def ring(d: int) -> QuadRing:
    """Validated ring of integers for squarefree D < 0."""
    if d >= 0:
        raise DegenerateInput(f"D must be negative, got {d}")
    if any(e > 1 for _, e in factorize(-d)):
        raise DegenerateInput(f"D must be squarefree, got {d}")
    return QuadRing(d)


_INT_RE = re.compile(r"^[+-]?\d+$")
_WITH_W_RE = re.compile(r"^(?:(?P<x>[+-]?\d+)(?=[+-]))?(?P<y>[+-]?\d*)\*?w$")


@dataclass(frozen=True, order=True)
class QuadInt:
    """The element x + y*w of its ring."""

    ring: QuadRing
    x: int
    y: int

    def __add__(self, other: "QuadInt") -> "QuadInt":
        assert self.ring == other.ring
        return QuadInt(self.ring, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        assert self.ring == other.ring
        return QuadInt(self.ring, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.ring, -self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.ring, self.x * other, self.y * other)
        assert self.ring == other.ring
        t, u = self.ring.t, self.ring.u
        yy = self.y * other.y
        return QuadInt(
            self.ring,
            self.x * other.x + u * yy,
            self.x * other.y + self.y * other.x + t * yy,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadInt":
        if k < 0:
            raise DegenerateInput("negative powers are not ring elements")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "QuadInt":
        # the conjugate of w is t - w
        return QuadInt(self.ring, self.x + self.ring.t * self.y, -self.y)

    def norm(self) -> int:
        t, u = self.ring.t, self.ring.u
        return self.x * self.x + t * self.x * self.y - u * self.y * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def coords(self) -> tuple[int, int]:
        return (self.x, self.y)

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        return f"{self.x}{self.y:+}*w"


def parse_element(K: QuadRing, text: str) -> QuadInt:
    """Parse "x+y*w" style input; accepts "3", "w", "-w", "2*w", "1-2*w"."""
    s = text.replace(" ", "")
    if _INT_RE.match(s):
        return QuadInt(K, int(s), 0)
    m = _WITH_W_RE.match(s)
    if not m:
        raise DegenerateInput(f"cannot parse element {text!r}")
    x = int(m.group("x")) if m.group("x") is not None else 0
    ys = m.group("y")
    y = 1 if ys in ("", "+") else -1 if ys == "-" else int(ys)
    return QuadInt(K, x, y)


@dataclass(frozen=True, order=True)
class QuadIdeal:
    """A nonzero ideal in canonical Z-basis HNF form.

    Instances produced by the factories below are always canonical;
    compare with ==.
    """

    ring: QuadRing
    hnf: Hnf2

    @property
    def norm(self) -> int:
        return self.hnf[0][0] * self.hnf[1][1]

    def basis(self) -> tuple[QuadInt, QuadInt]:
        return (
            QuadInt(self.ring, *self.hnf[0]),
            QuadInt(self.ring, *self.hnf[1]),
        )

    def contains(self, el: QuadInt) -> bool:
        (r11, r12), (_, r22) = self.hnf
        if el.x % r11 != 0:
            return False
        return (el.y - (el.x // r11) * r12) % r22 == 0

    def contains_ideal(self, other: "QuadIdeal") -> bool:
        """Whether other is a subset of self."""
        return all(self.contains(b) for b in other.basis())

    def is_unit_ideal(self) -> bool:
        return self.norm == 1

    def reduce(self, el: QuadInt) -> QuadInt:
        """Canonical residue of el modulo this ideal (coordinates in the HNF box)."""
        (r11, r12), (_, r22) = self.hnf
        x, y = el.x, el.y
        q = x // r11
        x -= q * r11
        y -= q * r12
        y %= r22
        return QuadInt(self.ring, x, y)

    def to_json(self) -> dict:
        return {"D": self.ring.d, "hnf": [list(self.hnf[0]), list(self.hnf[1])]}

    def __str__(self) -> str:
        (a, b), (_, c) = self.hnf
        return f"ideal<({a},{b}),(0,{c})> of {self.ring}"


def _is_omega_closed(K: QuadRing, rows) -> bool:
    for row in rows:
        el = QuadInt(K, row[0], row[1]) * K.omega
        if intmat.solve_in_lattice(rows, el.coords()) is None:
            return False
    return True


def ideal_from_hnf(K: QuadRing, rows) -> QuadIdeal:
    """Validated ideal from an explicit basis matrix (e.g. deserialization)."""
    hnf = intmat.row_hnf([list(r) for r in rows])
    if len(hnf) != 2:
        raise ZeroIdeal(f"rows {rows} do not span a rank-2 lattice")
    if not _is_omega_closed(K, hnf):
        raise DegenerateInput(f"lattice {rows} is not an ideal of {K}")
    return QuadIdeal(K, (tuple(hnf[0]), tuple(hnf[1])))


def ideal_from_generators(K: QuadRing, gens) -> QuadIdeal:
    """The ideal generated by the given elements: HNF of the span of {g, w*g}."""
    rows = []
    w = K.omega
    for g in gens:
        if g.is_zero():
            continue
        rows.append(list(g.coords()))
        rows.append(list((g * w).coords()))
    if not rows:
        raise ZeroIdeal("all generators are zero")
    hnf = intmat.row_hnf(rows)
    return QuadIdeal(K, (tuple(hnf[0]), tuple(hnf[1])))


def unit_ideal(K: QuadRing) -> QuadIdeal:
    return QuadIdeal(K, ((1, 0), (0, 1)))


def ideal_mul(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    """Product ideal: span of the pairwise products of the Z-bases."""
    assert I.ring == J.ring
    rows = [(a * b).coords() for a in I.basis() for b in J.basis()]
    hnf = intmat.row_hnf([list(r) for r in rows])
    return QuadIdeal(I.ring, (tuple(hnf[0]), tuple(hnf[1])))


def ideal_pow(I: QuadIdeal, k: int) -> QuadIdeal:
    out = unit_ideal(I.ring)
    for _ in range(k):
        out = ideal_mul(out, I)
    return out


def ideal_sum(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    assert I.ring == J.ring
    rows = [list(b.coords()) for b in I.basis()] + [list(b.coords()) for b in J.basis()]
    hnf = intmat.row_hnf(rows)
    return QuadIdeal(I.ring, (tuple(hnf[0]), tuple(hnf[1])))


def ideal_intersect(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    assert I.ring == J.ring
    rows = intmat.lattice_intersect(
        [list(r) for r in I.hnf], [list(r) for r in J.hnf]
    )
    return QuadIdeal(I.ring, (tuple(rows[0]), tuple(rows[1])))


def ideal_conj(I: QuadIdeal) -> QuadIdeal:
    rows = [list(b.conj().coords()) for b in I.basis()]
    hnf = intmat.row_hnf(rows)
    return QuadIdeal(I.ring, (tuple(hnf[0]), tuple(hnf[1])))


def ideal_quotient(I: QuadIdeal, J: QuadIdeal) -> QuadIdeal:
    """The colon ideal (I : J) = {x in O : x*J within I}.

    Uses J * conj(J) = N(J) * O, valid in any maximal quadratic order:
    (I : J) = (I * conj(J) / N(J)) ∩ O = (I * conj(J) ∩ N(J)O) / N(J).
    """
    assert I.ring == J.ring
    n = J.norm
    prod = ideal_mul(I, ideal_conj(J))
    meet = intmat.lattice_intersect(
        [list(r) for r in prod.hnf], [[n, 0], [0, n]]
    )
    rows = [[v // n for v in row] for row in meet]
    assert all(v * n == w for row, mrow in zip(rows, meet) for v, w in zip(row, mrow))
    return QuadIdeal(I.ring, (tuple(rows[0]), tuple(rows[1])))


@dataclass(frozen=True)
class PrimeAbove:
    """A maximal ideal over a rational prime with its splitting data.

    e is the ramification index and f the residue degree, so the norm of
    the ideal is p^f and e*f*(number of primes) = 2.
    """

    ideal: QuadIdeal
    e: int
    f: int


@lru_cache(maxsize=None)
def primes_above(K: QuadRing, p: int) -> tuple[PrimeAbove, ...]:
    """The maximal ideals over the rational prime p: split, inert or ramified.

    Determined by the roots of x^2 - t*x - u (the minimal polynomial of
    w) modulo p: two roots give two split primes (p, w - r), one root a
    ramified prime, none the inert prime (p).
    """
    if factorize(p).pairs != ((p, 1),):
        raise DegenerateInput(f"{p} is not prime")
    t, u = K.t, K.u
    roots = [r for r in range(p) if (r * r - t * r - u) % p == 0]
    pe = K.element(p)
    if len(roots) == 2:
        ideals = sorted(
            ideal_from_generators(K, [pe, K.omega - K.element(r)]) for r in roots
        )
        return tuple(PrimeAbove(idl, 1, 1) for idl in ideals)
    if len(roots) == 1:
        idl = ideal_from_generators(K, [pe, K.omega - K.element(roots[0])])
        return (PrimeAbove(idl, 2, 1),)
    return (PrimeAbove(ideal_from_generators(K, [pe]), 1, 2),)


def valuation(I: QuadIdeal, P: QuadIdeal) -> int:
    """Largest k with I contained in P^k."""
    k = 0
    power = P
    while power.contains_ideal(I):
        k += 1
        power = ideal_mul(power, P)
    return k


def factor_ideal(I: QuadIdeal) -> list[tuple[QuadIdeal, int]]:
    """Factorization into maximal ideals, verified by reassembly."""
    K = I.ring
    out = []
    for p, _ in factorize(I.norm):
        for pa in primes_above(K, p):
            e = valuation(I, pa.ideal)
            if e:
                out.append((pa.ideal, e))
    out.sort(key=lambda pe: (pe[0].norm, pe[0].hnf))
    check = unit_ideal(K)
    for P, e in out:
        check = ideal_mul(check, ideal_pow(P, e))
    assert check == I, f"reassembly failed for {I}"
    return out


def enumerate_ideals(K: QuadRing, norm: int) -> list[QuadIdeal]:
    """All ideals of the given norm, assembled multiplicatively over primes."""
    if norm < 1:
        raise DegenerateInput(f"norm must be positive, got {norm}")
    choices = [[unit_ideal(K)]]
    for p, a in factorize(norm):
        above = primes_above(K, p)
        local: list[QuadIdeal] = []
        if len(above) == 2:
            P, Q = above[0].ideal, above[1].ideal
            for i in range(a + 1):
                local.append(ideal_mul(ideal_pow(P, i), ideal_pow(Q, a - i)))
        elif above[0].f == 2:
            if a % 2 == 0:
                local.append(ideal_pow(above[0].ideal, a // 2))
        else:
            local.append(ideal_pow(above[0].ideal, a))
        if not local:
            return []
        choices.append(local)
    ideals = [unit_ideal(K)]
    for local in choices:
        ideals = [ideal_mul(I, J) for I in ideals for J in local]
    return sorted(set(ideals))


def is_principal(I: QuadIdeal) -> QuadInt | None:
    """A generator of I when one exists, else None.

    Searches the finitely many elements of norm N(I) (the norm form is
    positive definite) and membership-tests them; g in I with
    N(g) = N(I) forces (g) = I.
    """
    K = I.ring
    n = I.norm
    t = K.t
    absd = -K.d
    candidates: list[QuadInt] = []
    if t == 0:
        ymax = math.isqrt(n // absd)
        for y in range(-ymax, ymax + 1):
            rem = n - absd * y * y
            x = math.isqrt(rem)
            if x * x == rem:
                candidates.append(K.element(x, y))
                if x:
                    candidates.append(K.element(-x, y))
    else:
        ymax = math.isqrt(4 * n // absd)
        for y in range(-ymax, ymax + 1):
            disc_x = 4 * n - absd * y * y
            s = math.isqrt(disc_x)
            if s * s != disc_x:
                continue
            for sign in (1, -1):
                num = -y + sign * s
                if num % 2 == 0:
                    candidates.append(K.element(num // 2, y))
    for g in candidates:
        if not g.is_zero() and g.norm() == n and I.contains(g):
            return g
    return None


def express_one(I: QuadIdeal, J: QuadIdeal) -> tuple[QuadInt, QuadInt]:
    """(a, b) with a in I, b in J and a + b = 1; NonComaximal if I + J != O."""
    assert I.ring == J.ring
    rows = [list(b.coords()) for b in I.basis()] + [list(b.coords()) for b in J.basis()]
    hnf, trans = intmat.row_hnf_with_transform(rows)
    coeffs = intmat.solve_in_lattice([r for r in hnf if any(r)], [1, 0])
    if coeffs is None:
        raise NonComaximal(f"{I} + {J} is not the unit ideal")
    coeffs = coeffs + [0] * (len(hnf) - len(coeffs))
    full = [
        sum(coeffs[i] * trans[i][j] for i in range(len(trans)))
        for j in range(len(rows))
    ]
    bi = I.basis()
    bj = J.basis()
    a = bi[0] * full[0] + bi[1] * full[1]
    b = bj[0] * full[2] + bj[1] * full[3]
    assert (a + b).coords() == (1, 0)
    return a, b


def ideal_crt(residues) -> QuadInt:
    """An element congruent to r_i mod I_i for pairwise comaximal ideals I_i."""
    residues = list(residues)
    if not residues:
        raise DegenerateInput("empty residue list")
    r, I = residues[0]
    r = I.reduce(r)
    for r2, J in residues[1:]:
        a, b = express_one(I, J)  # a in I, b in J, a + b = 1
        # b = 1 mod I and 0 mod J; a the other way around
        r = r * b + r2 * a
        I = ideal_mul(I, J)
        r = I.reduce(r)
    return r


def element_avoiding(L: QuadIdeal, avoid, box: int = 20) -> QuadInt:
    """A deterministic element of L outside every ideal in ``avoid``.

    Scans Z-combinations of the basis of L by increasing coefficient
    box; raises SearchExhausted at the configured bound (a bound
    failure, not a proof of nonexistence).
    """
    avoid = list(avoid)
    b0, b1 = L.basis()
    for c0, c1 in shells(2, box):
        el = b0 * c0 + b1 * c1
        if el.is_zero():
            continue
        if all(not A.contains(el) for A in avoid):
            return el
    raise SearchExhausted(
        f"no element of {L} avoiding {len(avoid)} ideals within box {box}"
    )
