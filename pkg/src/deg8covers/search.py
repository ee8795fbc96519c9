"""Enumerate admissible point types and run each through the cover pipeline."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .cover import (
    CoverError,
    impose_point,
    invariants,
    minimality_check,
    solve_building_data,
    validate_point_type,
)
from .families import BASES
from .picard import DivisorClass, PicardError, SurfaceModel

DEFAULT_MAX_ENTRY = 4


def enumerate_point_types(
    min_entry: int = 0, max_entry: int = 1, allow_exceptional: bool = False, length: int = 7
) -> list[tuple[int, ...]]:
    """Nonzero multiplicity vectors passing the parity test, in lexicographic order."""
    if min_entry > max_entry:
        raise ValueError(f"min_entry {min_entry} > max_entry {max_entry}")
    if min_entry < -1:
        raise ValueError("entries below -1 have no meaning")
    lo = min_entry if allow_exceptional else max(min_entry, 0)
    values = range(lo, max_entry + 1)
    return [
        k
        for k in itertools.product(values, repeat=length)
        if any(k) and validate_point_type(k)
    ]


@dataclass
class Candidate:
    base: str
    n: int
    point: Optional[tuple[int, ...]]
    status: str = "candidate"
    failure: Optional[str] = None
    K2: Optional[int] = None
    pg: Optional[int] = None
    chi: Optional[int] = None
    q: Optional[int] = None
    two_K_pullclass: Optional[str] = None
    nef_witness: Optional[str] = None
    assumptions: list = field(default_factory=lambda: ["general_position"])

    @property
    def ok(self) -> bool:
        return self.failure is None

    def sort_key(self):
        if self.K2 is None:
            return (1, 0, 0, 0, self.point or ())
        return (0, self.K2, self.pg, self.q, self.point or ())

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "n": self.n,
            "point": list(self.point) if self.point is not None else None,
            "status": self.status,
            "failure": self.failure,
            "K2": self.K2,
            "pg": self.pg,
            "chi": self.chi,
            "q": self.q,
            "two_K_pullclass": self.two_K_pullclass,
            "nef_witness": self.nef_witness,
            "assumptions": self.assumptions,
        }


def point_feasible(D: DivisorClass, k: int) -> Optional[str]:
    """Reason a member of |D| cannot have multiplicity ``k`` at a general point, or None."""
    if k <= 0:
        return None
    a, b = D.delta0, D.gamma
    if a == 0 and b == 0:
        return "zero divisor cannot pass through the point"
    # the fiber through P meets the curve in a points; past that the fiber
    # itself must be a component, at most once for a reduced branch locus
    if k > a + (1 if b > 0 else 0):
        return f"multiplicity {k} forces a non-reduced fiber"
    if D.surface.h0(D) - k * (k + 1) // 2 < 1:
        return f"no curve in |{D}| with a point of multiplicity {k}"
    return None


def evaluate_point(base: str, n: int, k: Optional[tuple[int, ...]]) -> Candidate:
    cand = Candidate(base, n, k)
    S = SurfaceModel(1)
    B = BASES[base](n, S)
    Y = S
    try:
        if k is not None:
            if sum(1 for x in k if x == -1) > 1:
                raise CoverError("exceptional curve added to two branch divisors (B not reduced)")
            for i, (d, ki) in enumerate(zip(B.D, k), start=1):
                reason = point_feasible(d, ki)
                if reason:
                    raise CoverError(f"D{i}: {reason}")
            Y, B = impose_point(S, B, k)
        cover = solve_building_data(B)
        inv = invariants(cover)
    except (CoverError, PicardError) as exc:
        cand.status = "rejected"
        cand.failure = str(exc)
        return cand
    cand.K2, cand.pg, cand.chi, cand.q = inv.K2, inv.pg, inv.chi, inv.q
    cand.two_K_pullclass = str(inv.two_K_pullclass)
    nef = minimality_check(cover)
    if not nef.ok:
        cand.nef_witness = nef.witness
        cand.failure = f"2K_X not nef: fails on {nef.witness}"
        cand.status = "not minimal"
    elif inv.q < 0 or inv.pg < 0:
        cand.failure = "negative invariant"
        cand.status = "rejected"
    return cand


def scan_configs(base: str, n: int, point_set: Iterable[tuple[int, ...]]) -> list[Candidate]:
    """The unmodified base plus one candidate per point, sorted by (K^2, p_g, q)."""
    if base not in BASES:
        raise ValueError(f"unknown base {base!r}; expected one of {sorted(BASES)}")
    out = [evaluate_point(base, n, None)]
    for k in point_set:
        if not validate_point_type(k):
            raise ValueError(f"point {k} violates the parity conditions")
        out.append(evaluate_point(base, n, tuple(k)))
    return sorted(out, key=Candidate.sort_key)


def scan_all(n: int, point_set: Iterable[tuple[int, ...]]) -> list[Candidate]:
    points = list(point_set)
    out = []
    for base in sorted(BASES):
        out.extend(scan_configs(base, n, points))
    return out
