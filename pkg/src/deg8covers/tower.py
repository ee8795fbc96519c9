"""Iterated double covers X = X_s -> ... -> X_1 -> Y factoring a Z_2^m cover.

A tower is fixed by an ordered list of characters chi_1, ..., chi_s spanning the
character group; X_t is the quotient of X by the common kernel K_t of
chi_1..chi_t. Everything is computed from classes on Y:

* the curve branch of step t is every D_i with chi_t(sigma_i) = -1 that was not
  already branched at an earlier step;
* a point of D_a and D_b (inertia <sigma_a, sigma_b>) is a node of X_{t-1} exactly
  when K_{t-1} meets the inertia in <sigma_a + sigma_b>, and step t branches on it
  when chi_t(sigma_a + sigma_b) = -1. It has 2**(t-1) / 2 preimages on X_{t-1};
* 2K_{X_t} pulls back from 2K_Y + (curve branch of steps 1..t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cover import CoverData
from .group import Character, GroupElement, branch_elements, element_index, span
from .picard import DivisorClass, ParityError, SurfaceModel


class TowerError(ValueError):
    pass


@dataclass(frozen=True)
class TowerStep:
    character: Character
    L_class: DivisorClass
    curve_indices: tuple[int, ...]
    curve_branch: tuple[DivisorClass, ...]
    node_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TrackedCurve:
    base_class: DivisorClass
    level: int
    multiplicity_factor: Fraction
    self_int: int
    genus: int


@dataclass(frozen=True)
class Tower:
    cover: CoverData
    steps: tuple[TowerStep, ...]

    @property
    def surface(self) -> SurfaceModel:
        return self.cover.surface

    def characters_up_to(self, level: int) -> list[Character]:
        return [st.character for st in self.steps[:level]]

    def doubled_canonical(self, level: int) -> DivisorClass:
        """Class on Y whose pullback is 2K_{X_level} (level 0 is Y itself)."""
        Y = self.surface
        out = 2 * Y.canonical_class()
        for st in self.steps[:level]:
            for c in st.curve_branch:
                out = out + c
        return out

    def canonical(self, level: int) -> DivisorClass:
        """K_{X_level} as an integral class on Y; fails when half the branch is not integral."""
        try:
            return self.doubled_canonical(level).halve()
        except ParityError as exc:
            raise TowerError(f"K of level {level} is not a pullback of an integral class") from exc


def build_tower(cover: CoverData, chars: Sequence[Character]) -> Tower:
    m = cover.branch.m
    chars = list(chars)
    if len(span(chars)) != 2**m:
        raise TowerError("tower characters do not span the character group")
    D = cover.branch.D
    live = [i for i in range(1, len(D) + 1) if not D[i - 1].is_zero()]
    masks = [element_index(chi.bits) for chi in chars]
    # branch index i is the bitmask of sigma_i, so chi(sigma) = (-1)^popcount(chi & sigma)
    odd = lambda mask, sigma: bin(mask & sigma).count("1") % 2 == 1
    done: set[int] = set()
    steps = []
    for t, chi in enumerate(chars, start=1):
        if chi.is_trivial():
            raise TowerError("trivial character in tower")
        mask, earlier = masks[t - 1], masks[: t - 1]
        curve = tuple(i for i in live if i not in done and odd(mask, i))
        done.update(curve)
        pairs = []
        for x, a in enumerate(live):
            for b in live[x + 1 :]:
                s = a ^ b
                if (
                    not any(odd(e, s) for e in earlier)
                    and any(odd(e, a) for e in earlier)
                    and odd(mask, s)
                ):
                    pairs.append((a, b))
        steps.append(
            TowerStep(
                character=chi,
                L_class=cover[chi],
                curve_indices=curve,
                curve_branch=tuple(D[i - 1] for i in curve),
                node_pairs=tuple(pairs),
            )
        )
    return Tower(cover, tuple(steps))


def step_canonical(level_K: DivisorClass, L: DivisorClass) -> DivisorClass:
    """K of a double cover branched on a curve in |2L|, as a class on the base: K + L."""
    return level_K + L


def nodes_per_point(step: int) -> int:
    """Preimages on X_{step-1} of a branch-intersection point giving a node there."""
    if step < 2:
        raise TowerError("the first step cannot branch on nodes")
    return 2 ** (step - 2)


def count_nodes(tower: Tower, step: int) -> int:
    st = tower.steps[step - 1]
    D = tower.cover.branch.D
    points = sum(D[a - 1].dot(D[b - 1]) for a, b in st.node_pairs)
    return nodes_per_point(step) * points if st.node_pairs else 0


def pullback_curve(
    tower: Tower, C: DivisorClass, level: int, ramified_steps: Optional[set] = None
) -> TrackedCurve:
    """Self-intersection and genus of the curve over ``C`` on X_level.

    At an unramified step the pullback of C' has square 2*C'^2. At a step branched
    along C the pullback is 2C', so C' keeps the factor 1/2 from then on.
    """
    if ramified_steps is None:
        ramified_steps = {
            t for t, st in enumerate(tower.steps, start=1) if any(c == C for c in st.curve_branch)
        }
    mu = Fraction(1)
    for t in range(1, level + 1):
        if t in ramified_steps:
            mu /= 2
    scale = 2**level
    self_int = mu * mu * scale * C.dot(C)
    K_dot = mu * scale * Fraction(tower.doubled_canonical(level).dot(C), 2)
    if self_int.denominator != 1 or K_dot.denominator != 1:
        raise TowerError(f"non-integral intersection numbers for {C} at level {level}")
    twice_g = 2 + self_int + K_dot
    if twice_g.numerator % 2:
        raise ParityError(f"C.(C+K) odd for the curve over {C} at level {level}")
    return TrackedCurve(C, level, mu, int(self_int), int(twice_g) // 2)


def genus_chain(tower: Tower, C: DivisorClass, ramified_steps=None) -> list[tuple[int, int]]:
    """(self-intersection, genus) at levels 0..s."""
    out = []
    for level in range(len(tower.steps) + 1):
        tc = pullback_curve(tower, C, level, ramified_steps)
        out.append((tc.self_int, tc.genus))
    return out


def h0_pullback(tower: Tower, M: DivisorClass, up_to_step: Optional[int] = None) -> int:
    """h0 of the pullback of M to X_{up_to_step}.

    The two-term projection formula applied step by step unwinds to a sum over
    the characters of the partial tower: h0(f*M) = sum_chi h0(M - L_chi), L_0 = 0.
    """
    if up_to_step is None:
        up_to_step = len(tower.steps)
    if up_to_step == 0:
        return tower.surface.h0(M)
    Y = tower.surface
    return sum(Y.h0(M - tower.cover[chi]) for chi in span(tower.characters_up_to(up_to_step)))


def canonical_image_degree(M: DivisorClass, map_degree: int = 8, cover_degree: int = 8) -> int:
    """Degree of the canonical image when the moving part of |K_X| is the pullback of M."""
    square = cover_degree * M.dot(M)
    if square % map_degree:
        raise TowerError(f"moving part square {square} not divisible by map degree {map_degree}")
    return square // map_degree


@dataclass(frozen=True)
class FixedPartReport:
    intermediate_canonical: DivisorClass
    moving_class: DivisorClass
    y_fixed_curves: tuple[DivisorClass, ...]
    ramified_class: DivisorClass
    fixed_curves: tuple[TrackedCurve, ...]
    h0_K: int
    h0_moving: int
    nontrivial: bool
    is_bpf_claimed: bool

    def describe(self) -> str:
        if self.ramified_class.is_zero():
            return "0"
        return f"1/2 f*({self.ramified_class})"


def fixed_part_report(tower: Tower, pg: int) -> FixedPartReport:
    """Split |K_X| into the pullback of |K_{X_{s-1}}| and the last step's ramification.

    ``pg`` is h0(K_X) from the cover invariants; the fixed part is nontrivial when
    the last step ramifies along curves and the moving pullback already carries
    all pg sections.
    """
    s = len(tower.steps)
    Y = tower.surface
    K_prev = tower.canonical(s - 1)
    moving, y_fixed = Y.moving_part(K_prev)
    last = tower.steps[-1]
    ramified = Y.zero()
    for c in last.curve_branch:
        ramified = ramified + c
    h0_moving = h0_pullback(tower, K_prev, s)
    fixed = tuple(pullback_curve(tower, c, s, {s}) for c in last.curve_branch)
    nontrivial = not ramified.is_zero() and h0_moving == pg
    return FixedPartReport(
        intermediate_canonical=K_prev,
        moving_class=moving,
        y_fixed_curves=tuple(y_fixed),
        ramified_class=ramified,
        fixed_curves=fixed,
        h0_K=pg,
        h0_moving=h0_moving,
        nontrivial=nontrivial,
        is_bpf_claimed=ramified.is_zero(),
    )


@dataclass(frozen=True)
class CurvePreimage:
    components: int
    self_int: int
    genus: int
    inertia_order: int


def curve_preimage(cover: CoverData, C: DivisorClass, containing: Optional[int] = None) -> CurvePreimage:
    """Components of f^{-1}(C) for a smooth rational curve C.

    ``containing`` is the branch index i when C is a component of D_i. The
    restricted cover of C has monodromy generated by the inertia of C and by
    sigma_j at each point where C meets another branch component; the preimage
    splits into |G| / |H| copies, each mapping with degree |H| / |I_C| onto C.
    """
    m = cover.branch.m
    sigmas = branch_elements(m)
    D = cover.branch.D
    gens = []
    if containing is not None:
        gens.append(sigmas[containing - 1])
    inertia = gens[0] if gens else None
    ramified_points = 0
    for j in range(1, len(D) + 1):
        rest = D[j - 1] - C if j == containing else D[j - 1]
        meet = rest.dot(C)
        if meet < 0:
            raise TowerError(f"D{j} has a further component along {C}")
        if meet > 0:
            gens.append(sigmas[j - 1])
            if sigmas[j - 1] != inertia:
                ramified_points += meet
    H = {GroupElement((0,) * m)}
    for g in gens:
        H |= {h ^ g for h in H}
    inertia_order = 1 if inertia is None else 2
    G = 2**m
    comps = G // len(H)
    total = G * C.dot(C)
    denom = inertia_order * inertia_order * comps
    if total % denom:
        raise TowerError(f"non-integral self-intersection for components over {C}")
    if C.surface.adjunction_genus(C) != 0:
        raise TowerError(f"{C} is not a rational curve")
    # Riemann-Hurwitz: each component is a degree d cover of P^1, simply
    # ramified over every point where C meets a branch curve of other inertia
    d = len(H) // inertia_order
    twice_g = 2 - 2 * d + (d // 2) * ramified_points
    return CurvePreimage(comps, total // denom, twice_g // 2, inertia_order)


def describe_tower(tower: Tower) -> list[str]:
    lines = []
    for t, st in enumerate(tower.steps, start=1):
        curves = " + ".join(f"D{i}" for i in st.curve_indices) or "none"
        pairs = ", ".join(f"D{a}.D{b}" for a, b in st.node_pairs) or "none"
        lines.append(
            f"step {t}: 2L_{st.character.label.replace(',', '')}  curves: {curves}  "
            f"node pairs: {pairs}  nodes: {count_nodes(tower, t) if t > 1 else 0}"
        )
    return lines


__all__ = [
    "Tower",
    "TowerStep",
    "TrackedCurve",
    "FixedPartReport",
    "CurvePreimage",
    "TowerError",
    "build_tower",
    "step_canonical",
    "count_nodes",
    "nodes_per_point",
    "pullback_curve",
    "genus_chain",
    "h0_pullback",
    "canonical_image_degree",
    "fixed_part_report",
    "curve_preimage",
    "describe_tower",
]
