"""Exact arithmetic in the framed braid group B_{*n}.

A framed braid is an underlying braid word plus one integer framing per
strand, indexed by the strand's starting position.  Although B_{*n} is
abstractly B_n x Z^n, composition in this presentation is semidirect: the
framings travel with the strands, so the first factor's framings are read
off at the end positions of the second.  This is the composition law that
reproduces the +3/-3 framing counts of the swap-map calculus.

Everything here is about the 4-strand shadows of swap words, but the
operations are written for any strand count (the two-cluster shadow of the
half-twist lift uses n = 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .braid import (BraidWord, StrandMismatch, compose, equal, full_twist,
                    inverse)


@dataclass(frozen=True)
class FramedBraid:
    underlying: BraidWord
    framings: Tuple[int, ...]

    def __post_init__(self):
        if len(self.framings) != self.underlying.strands:
            raise ValueError("framing vector length must equal strand count")

    @property
    def strands(self) -> int:
        return self.underlying.strands

    def total_framing(self) -> int:
        return sum(self.framings)

    def __mul__(self, other: "FramedBraid") -> "FramedBraid":
        return fcompose(self, other)

    def inverse(self) -> "FramedBraid":
        return finverse(self)


def framed_identity(n: int) -> FramedBraid:
    return FramedBraid(BraidWord(n), (0,) * n)


def pure_framing(framings: Sequence[int]) -> FramedBraid:
    return FramedBraid(BraidWord(len(framings)), tuple(framings))


def m_framed(i: int, n: int = 4) -> FramedBraid:
    """The boundary multitwist of the i-th inner boundary: framing +1 on
    strand i, trivial braiding."""
    if not 1 <= i <= n:
        raise ValueError(f"strand index {i} out of range")
    return FramedBraid(BraidWord(n), tuple(int(k == i - 1) for k in range(n)))


def fcompose(*factors: FramedBraid) -> FramedBraid:
    """Compose framed braids, rightmost first.

    The composite's framing at starting strand i is the rightmost factor's
    framing there plus the next factor's framing at the strand's landing
    position, and so on along the strand.
    """
    if not factors:
        raise ValueError("fcompose needs at least one factor")
    n = factors[0].strands
    for f in factors:
        if f.strands != n:
            raise StrandMismatch("framed braids on different strand counts")
    out = factors[-1]
    for g in factors[-2::-1]:
        perm = out.underlying.permutation()
        framings = tuple(out.framings[i] + g.framings[perm[i]]
                         for i in range(n))
        out = FramedBraid(compose(g.underlying, out.underlying), framings)
    return out


def finverse(x: FramedBraid) -> FramedBraid:
    inv = inverse(x.underlying)
    perm = inv.permutation()
    framings = tuple(-x.framings[perm[i]] for i in range(x.strands))
    return FramedBraid(inv, framings)


def fpower(x: FramedBraid, k: int) -> FramedBraid:
    out = framed_identity(x.strands)
    base = x if k >= 0 else finverse(x)
    for _ in range(abs(k)):
        out = fcompose(base, out)
    return out


def delta_framed(i: int, j: int, n: int = 4) -> FramedBraid:
    """The framed half-twist exchanging adjacent inner boundaries i < j:
    boundary i travels to slot j picking up framing +1, boundary j comes
    back with framing 0."""
    if j != i + 1 or not 1 <= i < n:
        raise ValueError("delta_framed is primitive only for adjacent pairs;"
                         " conjugate for the rest")
    underlying = BraidWord.from_ints(n, [i])
    framings = tuple(1 if k == i - 1 else 0 for k in range(n))
    return FramedBraid(underlying, framings)


def rho_framed(i: int, j: int, n: int = 4) -> FramedBraid:
    """The framed swap generator: the half-twist corrected by a negative
    twist about each of the two boundaries, so strand i ends with framing 0
    and strand j with -1.  Non-adjacent pairs are spelled with the
    conjugation identities rho_13 = rho_12^-1 rho_23 rho_12 and
    rho_24 = rho_23^-1 rho_34 rho_23 (and once more for rho_14)."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad swap pair ({i}, {j})")
    if j == i + 1:
        underlying = BraidWord.from_ints(n, [i])
        framings = tuple(-1 if k == j - 1 else 0 for k in range(n))
        return FramedBraid(underlying, framings)
    inner = rho_framed(i + 1, j, n)
    step = rho_framed(i, i + 1, n)
    return fcompose(finverse(step), inner, step)


def boundary_multitwist_framed(n: int) -> FramedBraid:
    """Positive twist about the outer boundary: full twist downstairs with
    framing +1 on every strand."""
    if n < 2:
        raise ValueError("need n >= 2")
    return FramedBraid(full_twist(n), (1,) * n)


def framed_equal(x: FramedBraid, y: FramedBraid) -> bool:
    """Exact equality in B_{*n}: equal underlying braids and identical
    framing vectors."""
    if x.strands != y.strands:
        raise StrandMismatch("framed braids on different strand counts")
    if x.framings != y.framings:
        return False
    return equal(x.underlying, y.underlying)


def strand_swap_counts(pairs: Sequence[Tuple[int, int]], n: int = 4
                       ) -> Tuple[int, ...]:
    """How many swap letters each strand participates in, tracking strand
    positions through the word (rightmost letter first)."""
    where = list(range(n))          # where[s] = current slot of strand s
    counts = [0] * n
    for (i, j) in reversed(list(pairs)):
        a, b = i - 1, j - 1
        sa = where.index(a)
        sb = where.index(b)
        counts[sa] += 1
        counts[sb] += 1
        where[sa], where[sb] = where[sb], where[sa]
    return tuple(counts)


@dataclass(frozen=True)
class RelationReport:
    name: str
    passed: bool


def verify_swap_braid_relations() -> List[RelationReport]:
    """Machine check of the swap-map calculus at the framed-braid tier:
    the braid and far-commutation relations, both conjugation spellings of
    the non-adjacent swaps, and the two full-twist identities."""
    r12, r23, r34 = rho_framed(1, 2), rho_framed(2, 3), rho_framed(3, 4)
    d12, d23, d34 = delta_framed(1, 2), delta_framed(2, 3), delta_framed(3, 4)
    md = boundary_multitwist_framed(4)

    checks: List[RelationReport] = []

    def add(name, lhs, rhs):
        checks.append(RelationReport(name, framed_equal(lhs, rhs)))

    add("rho12 rho23 rho12 = rho23 rho12 rho23",
        fcompose(r12, r23, r12), fcompose(r23, r12, r23))
    add("rho23 rho34 rho23 = rho34 rho23 rho34",
        fcompose(r23, r34, r23), fcompose(r34, r23, r34))
    add("rho13: rho12^-1 rho23 rho12 = rho23 rho12 rho23^-1",
        fcompose(finverse(r12), r23, r12),
        fcompose(r23, r12, finverse(r23)))
    add("rho24: rho23^-1 rho34 rho23 = rho34 rho23 rho34^-1",
        fcompose(finverse(r23), r34, r23),
        fcompose(r34, r23, finverse(r34)))
    add("rho12 rho34 = rho34 rho12",
        fcompose(r12, r34), fcompose(r34, r12))
    add("(delta34 delta23 delta12)^4 = Mb M4^2 M3^2 M2^2 M1^2",
        fpower(fcompose(d34, d23, d12), 4),
        fcompose(md, *[fpower(m_framed(i), 2) for i in (4, 3, 2, 1)]))
    add("(rho34 rho23 rho12)^4 = Mb M4^-4 M3^-4 M2^-4 M1^-4",
        fpower(fcompose(r34, r23, r12), 4),
        fcompose(md, *[fpower(m_framed(i), -4) for i in (4, 3, 2, 1)]))
    return checks
