"""The arbitrarily long positive factorization families.

Built from three ingredients:

* the ten-twist word T on the genus-two subsurface and the commutator
  relation 1 = T^m C(m), which holds because a mapping class psi carries the
  pair (c_1, d_1) to (d_2, c_3); psi is found by a bounded bidirectional
  search over twist words and certified homologically;
* the swap word Phi = rho_24 rho_13 rho_34 rho_23 rho_12, whose conjugated
  rewriting absorbs the commutator and yields positive factorizations of
  length 10m + 5(2l+6);
* the insertion lemma (inserting positive letters into a positive word is
  the same as appending their prefix conjugates), which extends Phi's
  factorizations to the boundary multitwist and then to higher genus via
  the chain relations.

Letter counts are computed outputs, never inputs.  The literature this
follows states the assembled lengths inconsistently in one place (10m+60
against the count 10m+104 implied by the vanishing-cycle census); this
module's counts are the assembled ones, 10m + 24l + 104.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .framed import boundary_multitwist_framed, framed_equal
from .surface import (DerivedCurve, HomologyCalculator, NamedCurve,
                      SurfaceModel, TwistWord, compose_twists, mat_vec,
                      twist)
from .swaps import SurfaceLayout, SwapWord, embed, expand, rho, shadow


class SearchExhausted(RuntimeError):
    """The bounded psi search ended without a certified word."""


# ---------------------------------------------------------------------------
# The genus-two commutator relation
# ---------------------------------------------------------------------------

_T_SEQUENCE = ("c2", "c3", "c1", "c2", "c3", "c1", "c2", "c3", "c1", "c2")
_TAGS = {"c1": ("chain", 1), "c2": ("chain", 2), "c3": ("chain", 3)}


def word_T(surface: SurfaceModel | None = None) -> TwistWord:
    """T = t_c2 t_c3 (t_c1 t_c2 t_c3)^2 t_c1 t_c2: ten positive twists."""
    surface = surface or SurfaceModel(2, 2)
    return compose_twists(*[twist(surface, NamedCurve(_TAGS[x]))
                            for x in _T_SEQUENCE])


_PSI_GEN_TAGS = (("chain", 1), ("chain", 2), ("chain", 3), ("chain", 4),
                 ("chain", 5), ("dcurve", 1))

DEFAULT_SEED = 0


def make_psi(surface: SurfaceModel | None = None, max_depth: int = 6,
             seed: int | None = None) -> TwistWord:
    """A twist word certified to carry ([c1], [d1]) to (+-[d2], +-[c3]).

    Bidirectional breadth-first search over words in twists about
    c_1..c_5, d_1; deterministic for a fixed seed (the seed only rotates
    the generator order, the search itself is exhaustive per depth).
    Raises SearchExhausted if no certificate exists within 2*max_depth
    letters.
    """
    surface = surface or SurfaceModel(2, 2)
    if seed is None:
        seed = DEFAULT_SEED
    return _psi_search(surface, max_depth, seed)


@functools.lru_cache(maxsize=None)
def _psi_search(surface: SurfaceModel, max_depth: int, seed: int) -> TwistWord:
    calc = HomologyCalculator(surface)
    gens = [(tag, sign) for tag in _PSI_GEN_TAGS for sign in (1, -1)]
    k = seed % len(gens)
    gens = gens[k:] + gens[:k]
    mats = {(tag, sign): calc.twist_action(NamedCurve(tag), sign)
            for tag, sign in gens}

    c1 = calc.curve_class(NamedCurve(("chain", 1)))
    d1 = calc.curve_class(NamedCurve(("dcurve", 1)))
    d2 = calc.curve_class(NamedCurve(("dcurve", 2)))
    c3 = calc.curve_class(NamedCurve(("chain", 3)))
    neg = lambda v: tuple(-x for x in v)

    start = (c1, d1)
    targets = [(a, b) for a in (d2, neg(d2)) for b in (c3, neg(c3))]

    fwd: Dict[tuple, tuple | None] = {start: None}
    bwd: Dict[tuple, tuple | None] = {t: None for t in targets}
    ffr, bfr = [start], list(targets)

    def finish(meet_states):
        best = None
        for m in meet_states:
            fpath, st = [], m
            while fwd[st] is not None:
                st, g = fwd[st]
                fpath.append(g)
            fpath.reverse()
            bpath, st = [], m
            while bwd[st] is not None:
                st2, g = bwd[st]
                bpath.append(g)
                st = st2
            app = fpath + bpath          # application order, first first
            if best is None or len(app) < len(best):
                best = app
        return TwistWord(surface, tuple((NamedCurve(t), s)
                                        for t, s in reversed(best)))

    for _ in range(max_depth):
        new = []
        for st in ffr:
            for g in gens:
                m = mats[g]
                nx = (mat_vec(m, st[0]), mat_vec(m, st[1]))
                if nx not in fwd:
                    fwd[nx] = (st, g)
                    new.append(nx)
        ffr = new
        meet = set(fwd) & set(bwd)
        if meet:
            return finish(meet)
        new = []
        for st in bfr:
            for tag, sign in gens:
                m = mats[(tag, -sign)]
                nx = (mat_vec(m, st[0]), mat_vec(m, st[1]))
                if nx not in bwd:
                    bwd[nx] = (st, (tag, sign))
                    new.append(nx)
        bfr = new
        meet = set(fwd) & set(bwd)
        if meet:
            return finish(meet)
    raise SearchExhausted(
        f"no psi certificate within {2 * max_depth} letters")


def commutator_relation(m: int, surface: SurfaceModel | None = None
                        ) -> Tuple[TwistWord, TwistWord]:
    """(T^m, C(m)) with T^m C(m) acting trivially on homology.

    C(m) = psi X psi^-1 X^-1 for X = t_c1^-m t_d1^m; with psi's certificate
    this inverts T^m = X psi X^-1 psi^-1 exactly at the homology tier.
    Neither word touches the boundary curves.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    surface = surface or SurfaceModel(2, 2)
    psi = make_psi(surface)
    x = compose_twists(twist(surface, NamedCurve(("chain", 1)), -1).power(m),
                       twist(surface, NamedCurve(("dcurve", 1))).power(m))
    c = compose_twists(psi, x, psi.inverse(), x.inverse())
    return word_T(surface).power(m), c


# ---------------------------------------------------------------------------
# Positive factorizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositiveFactorization:
    """An all-positive twist word, its swap-letter skeleton, and the target
    it factorizes."""
    word: TwistWord
    skeleton: SwapWord | None
    description: str
    provenance: Tuple[str, ...]

    def __post_init__(self):
        if not self.word.is_positive():
            raise ValueError("factorization letters must all be positive")
        if len(self.provenance) != len(self.word):
            raise ValueError("one provenance note per letter")

    def length(self) -> int:
        return len(self.word)


def phi(layout: SurfaceLayout | int = 0) -> SwapWord:
    """Phi = rho_24 rho_13 rho_34 rho_23 rho_12."""
    if isinstance(layout, int):
        layout = SurfaceLayout(layout)
    return compose_swaps(rho(layout, 2, 4), rho(layout, 1, 3),
                         rho(layout, 3, 4), rho(layout, 2, 3),
                         rho(layout, 1, 2))


def compose_swaps(*words: SwapWord) -> SwapWord:
    out = words[0]
    for w in words[1:]:
        out = out * w
    return out


def phi_factorization(m: int, l: int = 0) -> PositiveFactorization:
    """Positive factorization of Phi of length 10m + 5(2l+6).

    The commutator gauge letters A = t_c1^m t_d1^-m and B = psi^-1 of the
    rewriting are pushed across the swaps until each swap letter carries an
    explicit conjugator; what remains in front is m embedded copies of T.
    The gauge residue cancels freely, so the output is freely equal to the
    conjugated word and its homology action equals that of Phi's plain
    expansion.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    layout = SurfaceLayout(l)
    sub = layout.subsurface_model()
    t_word = word_T(sub)
    psi = make_psi(sub)
    a_word = compose_twists(twist(sub, NamedCurve(("chain", 1))).power(m),
                            twist(sub, NamedCurve(("dcurve", 1)), -1).power(m))
    b_word = psi.inverse()

    def sub_letter(i, w):
        return (("sub", i, w), 1)

    gauge = [sub_letter(1, compose_twists(b_word.inverse(),
                                          a_word.inverse(), b_word)),
             sub_letter(2, compose_twists(b_word.inverse(), a_word.inverse())),
             sub_letter(3, b_word.inverse())]
    p_head = SwapWord(layout, tuple(gauge))
    conjugators = [
        p_head * SwapWord(layout, (sub_letter(2, b_word),)),
        p_head * SwapWord(layout, (sub_letter(1, a_word),)),
        p_head, p_head, p_head,
    ]
    swaps = [("rho", 2, 4), ("rho", 1, 3), ("rho", 3, 4),
             ("rho", 2, 3), ("rho", 1, 2)]

    skeleton = SwapWord(layout, tuple(
        [(("sub", 1, t_word), 1)] * m
        + [(("conj", v, kind), 1) for v, kind in zip(conjugators, swaps)]))

    word = expand(skeleton)
    prov = [f"T copy {k // 10 + 1}" for k in range(10 * m)]
    per = layout.cluster_size
    for (kind, v) in zip(swaps, conjugators):
        prov.extend([f"conjugated swap {kind[1]}{kind[2]}"] * per)
    return PositiveFactorization(word, skeleton, f"Phi (m={m}, l={l})",
                                 tuple(prov))


# ---------------------------------------------------------------------------
# Inserting equals appending
# ---------------------------------------------------------------------------

def insert_equals_append(word, insertions: Sequence[Tuple[int, tuple]]):
    """Rewrite insertions as an appended positive prefix.

    word is a SwapWord or TwistWord; insertions are (position, letter)
    pairs, position indexing the original letters (0..len), letters
    positive.  Inserting w between W_2 . W_1 equals appending W_2 w W_2^-1,
    where W_2 is the original prefix together with the already inserted
    letters of the same block; returns (tilde, full) with full the in-place
    result and tilde the appended word, so that tilde * word = full in the
    group.
    """
    is_swap = isinstance(word, SwapWord)
    letters = list(word.letters)
    blocks: Dict[int, list] = {}
    for pos, letter in insertions:
        if not 0 <= pos <= len(letters):
            raise ValueError(f"insertion position {pos} out of range")
        if letter[1] != 1:
            raise ValueError("only positive letters may be inserted")
        blocks.setdefault(pos, []).append(letter)

    def make_word(ls):
        return (SwapWord(word.layout, ls) if is_swap
                else TwistWord(word.surface, ls))

    def conjugate_letter(prefix, letter):
        if is_swap:
            kind, sign = letter
            return (("conj", prefix, kind), sign)
        curve, sign = letter
        if isinstance(curve, DerivedCurve):
            curve = DerivedCurve(curve.base,
                                 compose_twists(prefix, curve.conjugator))
        else:
            curve = DerivedCurve(curve, prefix)
        return (curve, sign)

    tilde: list = []
    full: list = []
    for pos in range(len(letters) + 1):
        if pos in blocks:
            prefix = make_word(tuple(letters[:pos]))
            for letter in blocks[pos]:
                # conjugation by the prefix distributes over the block
                tilde.append(conjugate_letter(prefix, letter)
                             if pos else letter)
                full.append(letter)
        if pos < len(letters):
            full.append(letters[pos])
    return make_word(tuple(tilde)), make_word(tuple(full))


# ---------------------------------------------------------------------------
# The boundary multitwist factorization and its extensions
# ---------------------------------------------------------------------------

def _free_reduce_letters(letters: tuple) -> tuple:
    out: list = []
    for kind, sign in letters:
        if out and out[-1][0] == kind and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((kind, sign))
    return tuple(out)


def _adjacent_spelling(layout: SurfaceLayout) -> SwapWord:
    """Phi respelled in adjacent swaps: rho_23^-1 rho_34 rho_23 rho_12^-1
    rho_23 rho_12 rho_34 rho_23 rho_12."""
    seq = [((2, 3), -1), ((3, 4), 1), ((2, 3), 1), ((1, 2), -1),
           ((2, 3), 1), ((1, 2), 1), ((3, 4), 1), ((2, 3), 1), ((1, 2), 1)]
    return SwapWord(layout, tuple((("rho", i, j), s) for (i, j), s in seq))


def _full_twist_insertions() -> List[Tuple[int, tuple]]:
    """The seven swap insertions turning the adjacent spelling of Phi into
    (rho_34 rho_23 rho_12)^4."""
    mk = lambda i, j: (("rho", i, j), 1)
    return ([(0, mk(3, 4)), (0, mk(2, 3)), (0, mk(1, 2)), (0, mk(2, 3))]
            + [(3, mk(1, 2)), (3, mk(1, 2))]
            + [(4, mk(3, 4))])


def boundary_multitwist_factorization(m: int, l: int = 0
                                      ) -> PositiveFactorization:
    """Positive factorization of the boundary multitwist of Sigma_{11+4l}^2,
    of length 10m + 24l + 104 (10m + 104 at l = 0).

    Assembled as M_bdry = W~ . Phi(m) . M_4^4 M_3^4 M_2^4 M_1^4 where W~
    comes from insert_equals_append on the adjacent spelling of Phi.
    """
    if m < 0:
        raise ValueError("need m >= 0")
    layout = SurfaceLayout(l)
    spelled = _adjacent_spelling(layout)
    tilde, full = insert_equals_append(spelled, _full_twist_insertions())
    base = compose_swaps(rho(layout, 3, 4), rho(layout, 2, 3),
                         rho(layout, 1, 2)).power(4)
    if _free_reduce_letters(full.letters) != base.letters:
        raise AssertionError("insertion table does not assemble the "
                             "full-twist word")

    phi_fact = phi_factorization(m, l)
    multitwists = SwapWord(layout, tuple(
        (("M", i), 1) for i in (4, 3, 2, 1) for _ in range(4)))
    skeleton = tilde * phi_fact.skeleton * multitwists

    h = layout.cluster_size
    word = compose_twists(expand(tilde), phi_fact.word, expand(multitwists))
    prov = ([f"appended swap insertion {k + 1}" for k in range(7)
             for _ in range(h)]
            + list(phi_fact.provenance)
            + [f"boundary multitwist of F_{i}" for i in (4, 3, 2, 1)
               for _ in range(8)])
    return PositiveFactorization(
        word, skeleton, f"boundary multitwist (m={m}, l={l})", tuple(prov))


def verify_boundary_factorization(fact: PositiveFactorization,
                                  layout: SurfaceLayout) -> Tuple[bool, bool]:
    """(shadow tier, homology tier) verdicts for a boundary factorization."""
    sh = framed_equal(shadow(fact.skeleton), boundary_multitwist_framed(4))
    hom = layout.calculator.is_identity_action(fact.word)
    return sh, hom


def _rebase_curve(curve, new_surface: SurfaceModel):
    if isinstance(curve, NamedCurve):
        if curve.tag[0] == "boundary":
            raise ValueError("ambient boundary twists cannot be rebased")
        return curve
    return DerivedCurve(_rebase_curve(curve.base, new_surface),
                        _rebase_word(curve.conjugator, new_surface))


def _rebase_word(word: TwistWord, new_surface: SurfaceModel) -> TwistWord:
    return TwistWord(new_surface, tuple(
        (_rebase_curve(c, new_surface), s) for c, s in word.letters))


def extended_calculator(gtarget: int, layout: SurfaceLayout
                        ) -> HomologyCalculator:
    """Calculator for Sigma_gtarget^2 knowing the genus-11 layout curves,
    zero-padded into the larger chain basis."""
    surface = SurfaceModel(gtarget, 2)
    r = surface.rank
    table = {tag: vec + (0,) * (r - len(vec))
             for tag, vec in layout.curve_table().items()}
    return HomologyCalculator(surface, table)


def extend_to_genus(gtarget: int, base: PositiveFactorization
                    ) -> PositiveFactorization:
    """Extend a genus-11 boundary factorization to Sigma_gtarget^2.

    The genus-11 chain word (t_1...t_23)^24 sits inside the genus-g chain
    word (t_1...t_{2g+1})^{2g+2} as a subsequence; inserting the missing
    letters and appending their conjugates gives M'_bdry = W~ . M_bdry, and
    the base factorization replaces M_bdry.  Adds
    (2g+1)(2g+2) - 552 letters.
    """
    if gtarget <= 11:
        raise ValueError("extension needs genus > 11")
    surface = SurfaceModel(gtarget, 2)
    small = compose_twists(*[twist(surface, NamedCurve(("chain", k)))
                             for k in range(1, 24)]).power(24)
    n_big = 2 * gtarget + 1
    insertions: List[Tuple[int, tuple]] = []
    for block in range(24):
        pos = 23 * (block + 1)
        for k in range(24, n_big + 1):
            insertions.append((pos, (NamedCurve(("chain", k)), 1)))
    for block in range(24, 2 * gtarget + 2):
        for k in range(1, n_big + 1):
            insertions.append((23 * 24, (NamedCurve(("chain", k)), 1)))
    tilde, full = insert_equals_append(small, insertions)
    big = compose_twists(*[twist(surface, NamedCurve(("chain", k)))
                           for k in range(1, n_big + 1)]).power(2 * gtarget + 2)
    if full.letters != big.letters:
        raise AssertionError("chain insertion table does not assemble the "
                             "genus-%d chain word" % gtarget)

    rebased = _rebase_word(base.word, surface)
    word = compose_twists(tilde, rebased)
    prov = (tuple(f"appended chain letter {k + 1}" for k in range(len(tilde)))
            + base.provenance)
    return PositiveFactorization(
        word, None, f"boundary multitwist of genus {gtarget} "
        f"(from: {base.description})", prov)
