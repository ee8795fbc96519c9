"""Intersection theory on the Hirzebruch surface F_e and its iterated blow-ups.

A divisor class is stored as an integer vector over the basis
``[Delta0, Gamma, E1, ..., Er]`` where ``Delta0`` is the negative section,
``Gamma`` a fiber and ``Ei`` the exceptional curves. Pulled-back classes keep
their coordinates; a blow-up only appends a zero.

    >>> S = SurfaceModel()
    >>> K = S.canonical_class()
    >>> str(K), S.intersect(K, K)
    ('-2Delta0 - 3Gamma', 8)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional


class PicardError(ValueError):
    """Base class for errors raised by the class arithmetic."""


class SurfaceMismatchError(PicardError):
    pass


class EffectivePartAmbiguous(PicardError):
    pass


class ParityError(PicardError):
    pass


@dataclass(frozen=True)
class BlowupPoint:
    """A blown-up point. ``multiplicities`` is the branch vector that created it."""

    tag: Optional[str] = None
    multiplicities: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class SurfaceModel:
    e: int = 1
    blowups: tuple[BlowupPoint, ...] = ()

    def __post_init__(self):
        if self.e < 0:
            raise PicardError(f"Hirzebruch parameter must be nonnegative, got {self.e}")

    @property
    def basis_size(self) -> int:
        return 2 + len(self.blowups)

    @property
    def num_blowups(self) -> int:
        return len(self.blowups)

    # -- constructors for classes ------------------------------------------

    def divisor(self, delta0: int = 0, gamma: int = 0, *exc: int) -> DivisorClass:
        """``delta0*Delta0 + gamma*Gamma + sum(exc[i]*E_{i+1})``; missing E-coefficients are 0."""
        if len(exc) > self.num_blowups:
            raise PicardError(
                f"{len(exc)} exceptional coefficients given, surface has {self.num_blowups} blow-ups"
            )
        tail = tuple(exc) + (0,) * (self.num_blowups - len(exc))
        return DivisorClass((int(delta0), int(gamma)) + tuple(int(c) for c in tail), self)

    def zero(self) -> DivisorClass:
        return self.divisor()

    @property
    def delta0(self) -> DivisorClass:
        return self.divisor(1, 0)

    @property
    def fiber(self) -> DivisorClass:
        return self.divisor(0, 1)

    def exceptional(self, i: int) -> DivisorClass:
        """The exceptional curve E_i, 1-based."""
        if not 1 <= i <= self.num_blowups:
            raise PicardError(f"no exceptional curve E{i} on a surface with {self.num_blowups} blow-ups")
        coords = [0] * self.basis_size
        coords[1 + i] = 1
        return DivisorClass(tuple(coords), self)

    # -- the operations ----------------------------------------------------

    def intersect(self, A: DivisorClass, B: DivisorClass) -> int:
        self._check(A)
        self._check(B)
        a1, b1, *c1 = A.coords
        a2, b2, *c2 = B.coords
        return -self.e * a1 * a2 + a1 * b2 + a2 * b1 - sum(x * y for x, y in zip(c1, c2))

    def canonical_class(self) -> DivisorClass:
        return self.divisor(-2, -(self.e + 2), *([1] * self.num_blowups))

    def blow_up(self, tag: Optional[str] = None, multiplicities=None) -> SurfaceModel:
        point = BlowupPoint(tag, None if multiplicities is None else tuple(multiplicities))
        return SurfaceModel(self.e, self.blowups + (point,))

    def embed(self, D: DivisorClass) -> DivisorClass:
        """Pull a class back from a surface this one was obtained from by blowing up."""
        src = D.surface
        if src.e != self.e or self.blowups[: src.num_blowups] != src.blowups:
            raise SurfaceMismatchError("target surface is not a blow-up of the class's surface")
        return DivisorClass(D.coords + (0,) * (self.basis_size - src.basis_size), self)

    def h0(self, D: DivisorClass) -> int:
        """Number of sections of ``D``, imposed points taken as independent conditions.

        For ``a*Delta0 + b*Gamma - sum(m_i E_i)`` the unblown count is the number of
        monomials ``{(k, j): 0 <= k <= a, 0 <= j <= b - k*e}``; each point of
        multiplicity ``m`` then removes ``m(m+1)/2`` conditions.
        """
        self._check(D)
        a, b, *c = D.coords
        if a < 0:
            return 0
        base = _monomial_count(a, b, self.e)
        if base == 0:
            # h0 of the pushforward bounds h0 from above, whatever the E-part
            return 0
        mults = [-x for x in c]
        if any(m < 0 for m in mults):
            raise EffectivePartAmbiguous(
                f"{D} adds an exceptional divisor; split off the exceptional part first"
            )
        return max(0, base - sum(m * (m + 1) // 2 for m in mults))

    def test_curves(self) -> list[tuple[str, DivisorClass]]:
        """Curves used for nefness: Delta0, Gamma, each Ei and each Gamma - Ei.

        Blown-up points are taken on distinct fibers and off Delta0.
        """
        curves = [("Delta0", self.delta0), ("Gamma", self.fiber)]
        for i in range(1, self.num_blowups + 1):
            curves.append((f"E{i}", self.exceptional(i)))
        for i in range(1, self.num_blowups + 1):
            curves.append((f"Gamma-E{i}", self.fiber - self.exceptional(i)))
        return curves

    def negative_curves(self) -> list[tuple[str, DivisorClass]]:
        return [(name, C) for name, C in self.test_curves() if self.intersect(C, C) < 0]

    def is_nef_and_big(self, D: DivisorClass) -> NefResult:
        self._check(D)
        for name, C in self.test_curves():
            if self.intersect(D, C) < 0:
                return NefResult(False, name, C)
        if self.intersect(D, D) <= 0:
            return NefResult(False, "self-intersection", D)
        return NefResult(True, None, None)

    def adjunction_genus(self, C: DivisorClass) -> int:
        value = self.intersect(C, C + self.canonical_class())
        if value % 2:
            raise ParityError(f"C.(C+K) = {value} is odd for {C}")
        return 1 + value // 2

    def moving_part(self, D: DivisorClass) -> tuple[DivisorClass, list[DivisorClass]]:
        """Strip negative test curves meeting ``D`` negatively; they are fixed components.

        Returns the residual class and the stripped curves. The section count is
        checked to be unchanged after each removal.
        """
        fixed = []
        changed = True
        while changed:
            changed = False
            for _, C in self.negative_curves():
                if self.intersect(D, C) < 0:
                    before = self.h0(D)
                    D = D - C
                    if self.h0(D) != before:
                        raise PicardError(f"removing fixed curve {C} changed h0 ({before} -> {self.h0(D)})")
                    fixed.append(C)
                    changed = True
        return D, fixed

    def _check(self, D: DivisorClass):
        if D.surface is not self and D.surface != self:
            raise SurfaceMismatchError(f"class {D} does not live on this surface")


class NefResult(NamedTuple):
    ok: bool
    witness: Optional[str]
    curve: Optional[DivisorClass]

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[int, ...]
    surface: SurfaceModel

    def __post_init__(self):
        if len(self.coords) != self.surface.basis_size:
            raise PicardError(
                f"class has {len(self.coords)} coordinates, surface basis has {self.surface.basis_size}"
            )

    @property
    def delta0(self) -> int:
        return self.coords[0]

    @property
    def gamma(self) -> int:
        return self.coords[1]

    @property
    def exceptional(self) -> tuple[int, ...]:
        return self.coords[2:]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _same(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.surface is not self.surface and other.surface != self.surface:
            raise SurfaceMismatchError("classes live on different surfaces")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(tuple(x + y for x, y in zip(self.coords, other.coords)), self.surface)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(tuple(x - y for x, y in zip(self.coords, other.coords)), self.surface)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-x for x in self.coords), self.surface)

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return DivisorClass(tuple(k * x for x in self.coords), self.surface)

    __rmul__ = __mul__

    def halve(self) -> DivisorClass:
        if any(x % 2 for x in self.coords):
            raise ParityError(f"{self} is not divisible by 2")
        return DivisorClass(tuple(x // 2 for x in self.coords), self.surface)

    def dot(self, other: DivisorClass) -> int:
        return self.surface.intersect(self, other)

    def __str__(self):
        names = ["Delta0", "Gamma"] + [f"E{i}" for i in range(1, len(self.coords) - 1)]
        if self.surface.num_blowups == 1:
            names[2] = "E"
        return format_terms(zip(self.coords, names))


def format_terms(terms) -> str:
    parts = []
    for coef, name in terms:
        if coef == 0:
            continue
        mag = abs(coef)
        body = name if mag == 1 else f"{mag}{name}"
        if not parts:
            parts.append(body if coef > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coef > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def _monomial_count(a: int, b: int, e: int) -> int:
    if e == 0:
        return (a + 1) * max(0, b + 1)
    # terms b - k*e + 1 stay positive for k <= (b + 1 - 1) // e = b // e
    if b < 0:
        return 0
    top = min(a, b // e)
    return (top + 1) * (b + 1) - e * top * (top + 1) // 2


def intersect(S: SurfaceModel, A: DivisorClass, B: DivisorClass) -> int:
    return S.intersect(A, B)


def canonical_class(S: SurfaceModel) -> DivisorClass:
    return S.canonical_class()


def h0(S: SurfaceModel, D: DivisorClass) -> int:
    return S.h0(D)


def blow_up(S: SurfaceModel, tag=None, multiplicities=None) -> SurfaceModel:
    return S.blow_up(tag, multiplicities)


def is_nef_and_big(S: SurfaceModel, D: DivisorClass) -> NefResult:
    return S.is_nef_and_big(D)


def adjunction_genus(S: SurfaceModel, C: DivisorClass) -> int:
    return S.adjunction_genus(C)
