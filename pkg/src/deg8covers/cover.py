"""Building data of Z_2^m covers, imposed singular points and cover invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .group import Character, characters, parity_matrix
from .picard import DivisorClass, NefResult, PicardError, SurfaceModel

DEFAULT_ASSUMPTIONS = frozenset({"components_smooth", "normal_crossings", "general_position"})


class CoverError(ValueError):
    pass


class NoCoverError(CoverError):
    """Some 2L_chi equation has an odd right-hand side."""

    def __init__(self, chi: Character, rhs: DivisorClass):
        super().__init__(f"no cover exists: sum of branch divisors for {chi} is {rhs}, not divisible by 2")
        self.character = chi
        self.rhs = rhs


class PointParityError(CoverError):
    pass


class NotEffectiveError(CoverError):
    pass


def _group_rank(num_divisors: int) -> int:
    m = (num_divisors + 1).bit_length() - 1
    if 2**m - 1 != num_divisors:
        raise CoverError(f"{num_divisors} branch divisors is not 2^m - 1")
    return m


@dataclass(frozen=True)
class BranchData:
    D: tuple[DivisorClass, ...]
    imposed_points: tuple[tuple[int, ...], ...] = ()
    assumptions: frozenset = DEFAULT_ASSUMPTIONS

    def __post_init__(self):
        m = _group_rank(len(self.D))
        S = self.D[0].surface
        if any(d.surface != S for d in self.D):
            raise CoverError("branch divisors live on different surfaces")
        for k in self.imposed_points:
            if len(k) != 2**m - 1:
                raise CoverError(f"point vector {k} has the wrong length")
        self._check_effective()

    @property
    def m(self) -> int:
        return _group_rank(len(self.D))

    @property
    def surface(self) -> SurfaceModel:
        return self.D[0].surface

    def __getitem__(self, i: int) -> DivisorClass:
        """1-based access, ``B[2]`` is D2."""
        if not 1 <= i <= len(self.D):
            raise IndexError(i)
        return self.D[i - 1]

    def total(self) -> DivisorClass:
        out = self.surface.zero()
        for d in self.D:
            out = out + d
        return out

    @classmethod
    def from_classes(cls, S: SurfaceModel, classes: Mapping[int, DivisorClass], m: int = 3, **kw):
        D = [classes.get(i, S.zero()) for i in range(1, 2**m)]
        return cls(tuple(D), **kw)

    def _check_effective(self):
        for i, d in enumerate(self.D, start=1):
            a, b, *c = d.coords
            if a < 0 or b < 0:
                raise NotEffectiveError(f"D{i} = {d} has a negative Delta0 or Gamma coefficient")
            for j, cj in enumerate(c):
                if cj < 0:
                    if a == 0 and b == 0:
                        raise NotEffectiveError(f"D{i} = {d} is a negative multiple of an exceptional curve")
                    k = self.imposed_points[j][i - 1] if j < len(self.imposed_points) else None
                    if k is not None and -cj > k:
                        raise NotEffectiveError(
                            f"D{i} = {d}: E{j + 1} coefficient exceeds multiplicity {k} at the point"
                        )


def validate_point_type(k: Sequence[int]) -> bool:
    """True iff every character sum of the multiplicity vector is even."""
    m = _group_rank(len(k))
    if any(x < -1 for x in k):
        return False
    return all(sum(ki for ki, p in zip(k, row) if p) % 2 == 0 for row in parity_matrix(m))


def impose_point(S: SurfaceModel, B: BranchData, k: Sequence[int], tag: Optional[str] = None):
    """Blow up a point where D_i has multiplicity k_i; k_i = -1 adds E to D_i."""
    k = tuple(int(x) for x in k)
    if len(k) != len(B.D):
        raise PointParityError(f"point vector {k} has length {len(k)}, expected {len(B.D)}")
    if not validate_point_type(k):
        raise PointParityError(f"point {k} violates the parity conditions")
    if B.surface != S:
        raise CoverError("branch data does not live on the given surface")
    Y = S.blow_up(tag, k)
    E = Y.exceptional(Y.num_blowups)
    D = tuple(Y.embed(d) - ki * E for d, ki in zip(B.D, k))
    return Y, BranchData(D, B.imposed_points + (k,), B.assumptions)


@dataclass(frozen=True)
class CoverData:
    L: dict  # Character -> DivisorClass, in characters(m) order
    branch: BranchData
    surface: SurfaceModel

    def __getitem__(self, chi) -> DivisorClass:
        if isinstance(chi, str):
            chi = Character(tuple(int(x) for x in chi.replace(",", "")))
        elif isinstance(chi, tuple):
            chi = Character(chi)
        if chi.is_trivial():
            return self.surface.zero()
        return self.L[chi]

    def residuals(self) -> dict:
        """2L_chi - sum_{chi(sigma_i)=-1} D_i for every character; all zero for valid data."""
        out = {}
        for chi, row in zip(characters(self.branch.m), parity_matrix(self.branch.m)):
            out[chi] = 2 * self.L[chi] - _row_sum(self.branch, row)
        return out

    @property
    def degree(self) -> int:
        return 2**self.branch.m


def _row_sum(B: BranchData, row) -> DivisorClass:
    out = B.surface.zero()
    for d, p in zip(B.D, row):
        if p:
            out = out + d
    return out


def solve_building_data(B: BranchData, require_nontrivial: bool = True) -> CoverData:
    L = {}
    for chi, row in zip(characters(B.m), parity_matrix(B.m)):
        rhs = _row_sum(B, row)
        if any(x % 2 for x in rhs.coords):
            raise NoCoverError(chi, rhs)
        L[chi] = rhs.halve()
        if require_nontrivial and L[chi].is_zero():
            # Pic is torsion free here, so a zero class is the trivial bundle
            raise CoverError(f"L for {chi} is trivial")
    return CoverData(L, B, B.surface)


@dataclass(frozen=True)
class Invariants:
    K2: int
    pg: int
    chi: int
    q: int
    two_K_pullclass: DivisorClass
    contributions: dict = field(default_factory=dict, compare=False)


def invariants(C: CoverData) -> Invariants:
    """K^2, p_g, chi(O), q of the smooth cover; the base is rational (p_g = 0, chi = 1)."""
    Y = C.surface
    K = Y.canonical_class()
    M = 2 * K + C.branch.total()
    pg = 0
    twice_chi_sum = 0
    contributions = {}
    for chi, L in C.L.items():
        try:
            h = Y.h0(L + K)
        except PicardError as exc:
            raise CoverError(f"h0(L + K) for {chi}: {exc}") from exc
        contributions[chi] = h
        pg += h
        t = Y.intersect(L, L + K)
        if t % 2:
            raise CoverError(f"L.(L+K) = {t} is odd for {chi}")
        twice_chi_sum += t
    chi_O = C.degree + twice_chi_sum // 2
    MM = C.degree * Y.intersect(M, M)
    if MM % 4:
        raise CoverError(f"(f*M)^2 = {MM} is not divisible by 4")
    K2 = MM // 4
    return Invariants(K2=K2, pg=pg, chi=chi_O, q=pg - chi_O + 1, two_K_pullclass=M, contributions=contributions)


def minimality_check(C: CoverData) -> NefResult:
    Y = C.surface
    return Y.is_nef_and_big(2 * Y.canonical_class() + C.branch.total())
