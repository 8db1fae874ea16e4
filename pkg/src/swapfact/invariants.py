"""Numerical invariants of the Lefschetz fibrations cut out by a positive
factorization: Euler characteristics, first Betti number with torsion via
integer Smith normal form, and the signature obstruction to
hyperellipticity.

Everything is exact: Smith normal form over Python ints, the signature
formula over Fraction.  No floating point is permitted in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .surface import HomologyCalculator
from .constructions import PositiveFactorization


def euler_closed(g: int, n_cycles: int) -> int:
    """Euler characteristic 4 - 4g + n of the closed fibration over S^2
    with fiber genus g and n vanishing cycles (pencil value after one
    blowdown is one less)."""
    if g < 0 or n_cycles < 0:
        raise ValueError("need g >= 0 and n_cycles >= 0")
    return 4 - 4 * g + n_cycles


def euler_filling(g: int, s: int, n_cycles: int) -> int:
    """Euler characteristic (2 - 2g - s) + n of a fibration over the disk
    with fiber Sigma_g^s."""
    if s < 1:
        raise ValueError("fillings need a bounded fiber, s >= 1")
    return 2 - 2 * g - s + n_cycles


def smith_normal_form(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix, exactly.

    Classic pivoting reduction; trailing zero factors are kept so the
    length equals min(nrows, ncols).
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return ()
    nr, nc = len(m), len(m[0])
    if any(len(r) != nc for r in m):
        raise ValueError("ragged matrix")
    factors: List[int] = []
    top = 0
    while top < nr and top < nc:
        # find the nonzero entry of least magnitude in the working block
        piv = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] != 0 and (piv is None
                                     or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        m[top], m[i] = m[i], m[top]
        for r in m:
            r[top], r[j] = r[j], r[top]
        p = m[top][top]
        clean = True
        for i in range(top + 1, nr):
            q = m[i][top] // p
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[top])]
            if m[i][top]:
                clean = False
        for j in range(top + 1, nc):
            q = m[top][j] // p
            if q:
                for r in m:
                    r[j] -= q * r[top]
            if m[top][j]:
                clean = False
        if not clean:
            continue
        # pivot must divide the rest of the block
        p = abs(m[top][top])
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % p:
                    offender = i
                    break
            if offender:
                break
        if offender is not None:
            m[top] = [a + b for a, b in zip(m[top], m[offender])]
            continue
        factors.append(p)
        top += 1
    factors.extend([0] * (min(nr, nc) - len(factors)))
    return tuple(factors)


def smith_normal_form_oracle(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Independent check: invariant factors from gcds of k x k minors.

    Exponential in the matrix size; intended for small matrices only.
    """
    from itertools import combinations
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return ()
    nr, nc = len(m), len(m[0])

    def det(rs, cs):
        if len(rs) == 1:
            return m[rs[0]][cs[0]]
        out = 0
        sign = 1
        for k, r in enumerate(rs):
            out += sign * m[r][cs[0]] * det(rs[:k] + rs[k + 1:], cs[1:])
            sign = -sign
        return out

    d_prev = 1
    factors = []
    for k in range(1, min(nr, nc) + 1):
        dk = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                dk = gcd(dk, det(rs, cs))
        if dk == 0:
            factors.extend([0] * (min(nr, nc) - len(factors)))
            break
        factors.append(dk // d_prev)
        d_prev = dk
    return tuple(factors)


@dataclass(frozen=True)
class HomologySummary:
    b1: int
    torsion: Tuple[int, ...]


def b1_of_total_space(fact: PositiveFactorization,
                      calc: HomologyCalculator,
                      cap: bool = True) -> HomologySummary:
    """First homology of the fibration's total space: quotient of H_1 of
    the (capped) fiber by the vanishing-cycle classes.

    Capping kills the radical class e, realized by the change of basis
    sending e to the first basis vector and dropping that coordinate.
    Letters whose class projects to zero would be separating (or evidence
    of a bookkeeping defect) and are rejected rather than counted.
    """
    surface = fact.word.surface
    classes = [calc.curve_class(c) for c, _ in fact.word.letters]
    r = surface.rank
    if cap:
        if surface.boundary != 2:
            raise ValueError("capping expects a two-boundary fiber")
        e = surface.boundary_class()
        # basis matrix with first column e (unimodular since e_1 = 1);
        # express classes in it and drop the e-coordinate
        basis = [[e[i] if j == 0 else int(i == j)
                  for j in range(r)] for i in range(r)]
        from .surface import mat_inv_unimodular, mat_vec
        binv = mat_inv_unimodular(tuple(map(tuple, basis)))
        projected = []
        for v in classes:
            w = mat_vec(binv, v)
            projected.append(w[1:])
        classes = projected
        rank_ambient = r - 1
    else:
        rank_ambient = r
    for v, (c, _) in zip(classes, fact.word.letters):
        if not any(v):
            raise ValueError(f"letter {c!r} has null class: separating "
                             "vanishing cycle or class bookkeeping defect")
    factors = smith_normal_form(classes)
    rank = sum(1 for d in factors if d != 0)
    torsion = tuple(d for d in factors if d not in (0, 1))
    return HomologySummary(rank_ambient - rank, torsion)


def endo_signature(g: int, n_nonsep: int,
                   s: Sequence[int] = ()) -> Fraction:
    """The hyperelliptic signature formula, exactly:
    sigma = -(g+1)/(2g+1) N + sum_j (4j(g-j)/(2g+1) - 1) s_j."""
    if g < 1:
        raise ValueError("need g >= 1")
    if len(s) > g // 2:
        raise ValueError("separating counts are indexed by 1..floor(g/2)")
    total = Fraction(-(g + 1), 2 * g + 1) * n_nonsep
    for j, sj in enumerate(s, start=1):
        total += (Fraction(4 * j * (g - j), 2 * g + 1) - 1) * sj
    return total


def hyperelliptic_obstruction(g: int, n_nonsep: int,
                              s: Sequence[int] = ()) -> str:
    """'NotHyperelliptic' when the signature formula is non-integral (a
    genuine signature is an integer), else 'Inconclusive'."""
    sigma = endo_signature(g, n_nonsep, s)
    return "Inconclusive" if sigma.denominator == 1 else "NotHyperelliptic"


@dataclass(frozen=True)
class FibrationInvariants:
    genus: int
    n_cycles: int
    separating: Tuple[int, ...]
    euler_closed: int
    euler_filling: int
    b1: int
    torsion: Tuple[int, ...]
    endo_sigma: Fraction
    hyperelliptic_verdict: str


def fibration_invariants(fact: PositiveFactorization,
                         calc: HomologyCalculator) -> FibrationInvariants:
    """Full invariant report for a verified positive factorization of the
    boundary multitwist (fiber has two boundary components)."""
    surface = fact.word.surface
    g = surface.genus
    n = fact.length()
    summary = b1_of_total_space(fact, calc, cap=True)
    return FibrationInvariants(
        genus=g,
        n_cycles=n,
        separating=(),
        euler_closed=euler_closed(g, n),
        euler_filling=euler_filling(g, 2, n),
        b1=summary.b1,
        torsion=summary.torsion,
        endo_sigma=endo_signature(g, n),
        hyperelliptic_verdict=hyperelliptic_obstruction(g, n),
    )
