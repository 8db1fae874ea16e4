"""Swap-map calculus on the genus 11+4l surface.

The ambient surface Sigma_{11+4l}^2 is the double branched cover of a disk
with 4h marked points, h = 2l+6, grouped into four clusters; the subsurface
F_i is the part of the cover over the i-th cluster, a Sigma_{2+l}^2 whose
chain curves are the ambient chain curves over that cluster.  A swap word is
a word in the maps exchanging these subsurfaces, the boundary multitwists,
and embedded subsurface mapping classes.

Downstairs, the swap of adjacent subsurfaces is the braid

    rho_hat = W_i . (Delta_block . T_i^-1 . T_j^-1) . W_i^-1,

the block half-twist with the cluster twists cancelled, conjugated by the
half-twist W_i of the lower cluster; the conjugation is what makes the swap
carry the k-th chain curve of F_i to the k-th chain curve of F_j instead of
reversing the chain.  Its certified band factorization (see lift) therefore
transports to a positive twist expansion of every swap letter.

Two verification tiers are provided: expand() maps swap words to twist words
whose homology action is exact on H_1 of the ambient surface, and shadow()
maps them to framed 4-braids, which by the structure of the layout determine
compositions of plain swap maps completely.  Words mixing in subsurface
classes are only constrained homologically (the shadow of an embedded class
is trivial by construction).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, Iterable, List

from .framed import (FramedBraid, boundary_multitwist_framed, fcompose,
                     finverse, framed_identity, m_framed, rho_framed)
from .lift import block_half_twist, lift
from .surface import (DerivedCurve, HomologyCalculator, NamedCurve,
                      SurfaceModel, TwistWord, UnknownCurve, compose_twists,
                      twist)


@dataclass(frozen=True)
class SurfaceLayout:
    """The four-subsurface decomposition of Sigma_{11+4l}^2."""
    l: int = 0

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("layout parameter l must be >= 0")

    @property
    def subsurface_genus(self) -> int:
        return 2 + self.l

    @property
    def cluster_size(self) -> int:
        return 2 * self.subsurface_genus + 2

    @property
    def branch_points(self) -> int:
        return 4 * self.cluster_size

    @property
    def ambient_genus(self) -> int:
        return 11 + 4 * self.l

    def ambient_model(self) -> SurfaceModel:
        return SurfaceModel(self.ambient_genus, 2)

    def subsurface_model(self) -> SurfaceModel:
        return SurfaceModel(self.subsurface_genus, 2)

    def cluster_offset(self, i: int) -> int:
        if not 1 <= i <= 4:
            raise ValueError(f"subsurface index {i} out of range")
        return (i - 1) * self.cluster_size

    def curve_table(self) -> Dict[tuple, tuple]:
        """Ambient classes of the layout's named curves."""
        r = 2 * self.ambient_genus + 1
        h = self.cluster_size
        table: Dict[tuple, tuple] = {}

        def e(k):  # chain class c_k, 1-based
            return tuple(int(m == k - 1) for m in range(r))

        def add(v, w):
            return tuple(a + b for a, b in zip(v, w))

        for i in range(1, 5):
            off = self.cluster_offset(i)
            for k in range(1, h):
                table[("subchain", i, k)] = e(off + k)
            d1 = add(e(off + 1), e(off + 3))
            table[("subdcurve", i, 1)] = d1
            table[("subdcurve", i, 2)] = tuple(-x for x in d1)
            s = (0,) * r
            for k in range(1, h, 2):
                s = add(s, e(off + k))
            table[("subboundary", i, 1)] = s
            table[("subboundary", i, 2)] = tuple(-x for x in s)
        return table

    @functools.cached_property
    def calculator(self) -> HomologyCalculator:
        return HomologyCalculator(self.ambient_model(), self.curve_table())


_SUB_TAG = {"chain": "subchain", "dcurve": "subdcurve",
            "boundary": "subboundary"}


def embed(word: TwistWord, i: int, layout: SurfaceLayout) -> TwistWord:
    """The mapping class acting as the subsurface word on F_i and as the
    identity elsewhere: letterwise curve relabeling."""
    if word.surface != layout.subsurface_model():
        raise ValueError("embed expects a word on the subsurface model")

    def embed_curve(curve):
        if isinstance(curve, NamedCurve):
            kind = curve.tag[0]
            if kind not in _SUB_TAG:
                raise UnknownCurve(f"cannot embed curve {curve.tag}")
            return NamedCurve((_SUB_TAG[kind], i) + curve.tag[1:])
        return DerivedCurve(embed_curve(curve.base),
                            embed(curve.conjugator, i, layout))

    return TwistWord(layout.ambient_model(),
                     tuple((embed_curve(c), s) for c, s in word.letters))


# ---------------------------------------------------------------------------
# Swap words
# ---------------------------------------------------------------------------
#
# Letter kinds (each letter is (kind, sign)):
#   ('rho', i, j)            swap of F_i and F_j (adjacent pairs primitive,
#                            the rest spelled by conjugation)
#   ('delta', i, j)          the uncorrected half-twist swap
#   ('M', i)                 boundary multitwist of F_i
#   ('Mb',)                  boundary multitwist of the ambient surface
#   ('sub', i, A)            A in Gamma_{2+l}^2 embedded on F_i
#   ('conj', V, kind)        V . letter(kind) . V^-1 for a SwapWord V


class SwapWord:
    """A word in swap-map letters on a fixed layout; immutable, rightmost
    letter acts first."""

    __slots__ = ("layout", "letters")

    def __init__(self, layout: SurfaceLayout, letters: Iterable[tuple] = ()):
        object.__setattr__(self, "layout", layout)
        object.__setattr__(self, "letters", tuple(letters))
        for kind, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError("letter sign must be +1 or -1")

    def __setattr__(self, *a):
        raise AttributeError("SwapWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (isinstance(other, SwapWord) and self.layout == other.layout
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.layout, self.letters))

    def __mul__(self, other: "SwapWord") -> "SwapWord":
        if self.layout != other.layout:
            raise ValueError("swap words on different layouts")
        return SwapWord(self.layout, self.letters + other.letters)

    def inverse(self) -> "SwapWord":
        return SwapWord(self.layout,
                        tuple((k, -s) for k, s in reversed(self.letters)))

    def power(self, k: int) -> "SwapWord":
        base = self if k >= 0 else self.inverse()
        return SwapWord(self.layout, base.letters * abs(k))


def swap_letter(layout: SurfaceLayout, kind: tuple, sign: int = 1) -> SwapWord:
    return SwapWord(layout, ((kind, sign),))


def rho(layout: SurfaceLayout, i: int, j: int, sign: int = 1) -> SwapWord:
    if not 1 <= i < j <= 4:
        raise ValueError(f"bad swap pair ({i}, {j})")
    return swap_letter(layout, ("rho", i, j), sign)


def rho_conjugated(layout: SurfaceLayout, i: int, j: int,
                   a_word: TwistWord, sign: int = 1) -> SwapWord:
    """rho_ij^A = A_i rho_ij A_i^-1 for A on the subsurface model."""
    v = SwapWord(layout, ((("sub", i, a_word), 1),))
    return swap_letter(layout, ("conj", v, ("rho", i, j)), sign)


# --- expansion to twist words ----------------------------------------------

@functools.lru_cache(maxsize=None)
def _transport_conjugator(layout: SurfaceLayout, i: int) -> TwistWord:
    """Lift of the cluster-i half twist: the change of identification that
    chain-normalizes the block swap."""
    n = layout.branch_points
    off = layout.cluster_offset(i)
    w = block_half_twist(n, off + 1, off + layout.cluster_size)
    return lift(w, layout.ambient_model())


@functools.lru_cache(maxsize=None)
def _adjacent_rho_expansion(layout: SurfaceLayout, i: int) -> TwistWord:
    """Positive expansion of rho_{i,i+1}: the certified bands of the block
    swap braid, transported by the cluster half twist and lifted."""
    gp = layout.subsurface_genus
    n = layout.branch_points
    off = layout.cluster_offset(i)
    vi = _transport_conjugator(layout, i)
    surface = layout.ambient_model()
    letters = []
    from .lift import swap_bands
    for core, conj in swap_bands(gp, offset=off, strands=n):
        conjugator = compose_twists(vi, lift(conj, surface))
        letters.append((DerivedCurve(NamedCurve(("chain", core)), conjugator), 1))
    return TwistWord(surface, tuple(letters))


def _conjugate_twistword(v: TwistWord, w: TwistWord) -> TwistWord:
    """v w v^-1 letter by letter, keeping each letter a single twist."""
    out = []
    for curve, sign in w.letters:
        if isinstance(curve, DerivedCurve):
            curve = DerivedCurve(curve.base,
                                 compose_twists(v, curve.conjugator))
        else:
            curve = DerivedCurve(curve, v)
        out.append((curve, sign))
    return TwistWord(w.surface, tuple(out))


def _expand_positive_kind(layout: SurfaceLayout, kind: tuple) -> TwistWord:
    surface = layout.ambient_model()
    name = kind[0]
    if name == "rho":
        _, i, j = kind
        if j == i + 1:
            return _adjacent_rho_expansion(layout, i)
        step = rho(layout, i, i + 1)
        inner = expand(SwapWord(layout, ((("rho", i + 1, j), 1),)))
        return _conjugate_twistword(expand(step.inverse()), inner)
    if name == "delta":
        _, i, j = kind
        return compose_twists(
            _expand_positive_kind(layout, ("rho", i, j)),
            _expand_positive_kind(layout, ("M", j)),
            _expand_positive_kind(layout, ("M", i)))
    if name == "M":
        _, i = kind
        return compose_twists(
            twist(surface, NamedCurve(("subboundary", i, 1))),
            twist(surface, NamedCurve(("subboundary", i, 2))))
    if name == "Mb":
        return compose_twists(
            twist(surface, NamedCurve(("boundary", 1))),
            twist(surface, NamedCurve(("boundary", 2))))
    if name == "sub":
        _, i, a_word = kind
        return embed(a_word, i, layout)
    if name == "conj":
        _, v, inner = kind
        return _conjugate_twistword(expand(v), _expand_positive_kind(layout, inner))
    raise ValueError(f"unknown swap letter kind {kind!r}")


def expand(word: SwapWord) -> TwistWord:
    """Twist-word expansion; positive swap letters expand to all-positive
    twist letters and the letter counts are exact bookkeeping."""
    parts = []
    for kind, sign in word.letters:
        base = _expand_positive_kind(word.layout, kind)
        parts.append(base if sign > 0 else base.inverse())
    if not parts:
        return TwistWord(word.layout.ambient_model())
    return compose_twists(*parts)


# --- framed shadow ----------------------------------------------------------

def _shadow_positive_kind(layout: SurfaceLayout, kind: tuple) -> FramedBraid:
    name = kind[0]
    if name == "rho":
        return rho_framed(kind[1], kind[2])
    if name == "delta":
        _, i, j = kind
        return fcompose(rho_framed(i, j), m_framed(j), m_framed(i))
    if name == "M":
        return m_framed(kind[1])
    if name == "Mb":
        return boundary_multitwist_framed(4)
    if name == "sub":
        return framed_identity(4)
    if name == "conj":
        _, v, inner = kind
        sv = shadow(v)
        return fcompose(sv, _shadow_positive_kind(layout, inner), finverse(sv))
    raise ValueError(f"unknown swap letter kind {kind!r}")


def shadow(word: SwapWord) -> FramedBraid:
    """The induced framed 4-braid: faithful on words in the plain swap
    letters; embedded subsurface classes shadow to the identity."""
    out = framed_identity(4)
    for kind, sign in word.letters:
        s = _shadow_positive_kind(word.layout, kind)
        if sign < 0:
            s = finverse(s)
        out = fcompose(out, s)
    return out


# --- verification helpers ---------------------------------------------------

@dataclass(frozen=True)
class ConjugationReport:
    name: str
    passed: bool


def verify_conjugation_relations(a_word: TwistWord, i: int, j: int,
                                 layout: SurfaceLayout | None = None
                                 ) -> List[ConjugationReport]:
    """Homological-tier checks of the subsurface conjugation rules
    A_i rho_ij = rho_ij A_j, A_j rho_ij = rho_ij A_i, and the two spellings
    of rho_ij^A."""
    layout = layout or SurfaceLayout(0)
    calc = layout.calculator
    r = expand(rho(layout, i, j))
    ai = embed(a_word, i, layout)
    aj = embed(a_word, j, layout)
    ra = expand(rho_conjugated(layout, i, j, a_word))
    out = []

    def add(name, w1, w2):
        out.append(ConjugationReport(name, calc.verify_homologically(w1, w2)))

    add(f"A_{i} rho = rho A_{j}", compose_twists(ai, r), compose_twists(r, aj))
    add(f"A_{j} rho = rho A_{i}", compose_twists(aj, r), compose_twists(r, ai))
    add("rho^A = A_i rho A_i^-1",
        ra, compose_twists(ai, r, ai.inverse()))
    add("rho^A = A_j^-1 rho A_j",
        ra, compose_twists(aj.inverse(), r, aj))
    return out
