"""Elementary abelian 2-groups, their characters and the branch-index convention.

Branch index ``i`` (1 <= i < 2**m) corresponds to the group element whose bits
are the binary digits of ``i``, most significant first, so for m = 3 the
divisors D1..D7 sit over (0,0,1), (0,1,0), (0,1,1), (1,0,0), ..., (1,1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _check_bits(bits):
    if len(bits) < 1:
        raise ValueError("need at least one coordinate")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0/1, got {bits}")


@dataclass(frozen=True)
class GroupElement:
    bits: tuple[int, ...]

    def __post_init__(self):
        _check_bits(self.bits)

    @property
    def m(self) -> int:
        return len(self.bits)

    def __xor__(self, other: GroupElement) -> GroupElement:
        if other.m != self.m:
            raise ValueError("elements of different groups")
        return GroupElement(tuple(x ^ y for x, y in zip(self.bits, other.bits)))

    def is_identity(self) -> bool:
        return not any(self.bits)

    @property
    def index(self) -> int:
        """Branch index of this element (0 for the identity)."""
        return int("".join(map(str, self.bits)), 2)

    def __str__(self):
        return "(" + ",".join(map(str, self.bits)) + ")"


@dataclass(frozen=True)
class Character:
    bits: tuple[int, ...]

    def __post_init__(self):
        _check_bits(self.bits)

    @property
    def m(self) -> int:
        return len(self.bits)

    def __call__(self, sigma: GroupElement) -> int:
        return chi_value(self, sigma)

    def __mul__(self, other: Character) -> Character:
        return Character(tuple(x ^ y for x, y in zip(self.bits, other.bits)))

    def is_trivial(self) -> bool:
        return not any(self.bits)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.bits))

    def __str__(self):
        return f"chi_{''.join(map(str, self.bits))}"


def chi_value(chi: Character, sigma: GroupElement) -> int:
    if chi.m != sigma.m:
        raise ValueError("character and element of different groups")
    return -1 if sum(x & y for x, y in zip(chi.bits, sigma.bits)) % 2 else 1


def element(i: int, m: int = 3) -> GroupElement:
    """The element sigma_i paired with branch index ``i``."""
    if not 0 <= i < 2**m:
        raise ValueError(f"branch index {i} out of range for m={m}")
    return GroupElement(tuple((i >> (m - 1 - k)) & 1 for k in range(m)))


def character(*bits: int) -> Character:
    return Character(tuple(bits))


@lru_cache(maxsize=None)
def branch_elements(m: int = 3) -> tuple[GroupElement, ...]:
    """Nontrivial elements in branch-index order (position i-1 holds sigma_i)."""
    return tuple(element(i, m) for i in range(1, 2**m))


@lru_cache(maxsize=None)
def characters(m: int = 3) -> tuple[Character, ...]:
    """Nontrivial characters ordered by weight, then by descending binary value.

    For m = 3 this is chi_100, chi_010, chi_001, chi_110, chi_101, chi_011, chi_111.
    """
    chars = [Character(element(i, m).bits) for i in range(1, 2**m)]
    return tuple(sorted(chars, key=lambda c: (sum(c.bits), -element_index(c.bits))))


def element_index(bits) -> int:
    return int("".join(map(str, bits)), 2)


@lru_cache(maxsize=None)
def parity_matrix(m: int = 3) -> tuple[tuple[int, ...], ...]:
    """Row chi, column i: 1 iff chi(sigma_i) = -1, i.e. D_i enters the equation for 2L_chi."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return tuple(
        tuple(1 if chi_value(chi, sigma) == -1 else 0 for sigma in branch_elements(m))
        for chi in characters(m)
    )


def span(chars) -> list[Character]:
    """All characters in the subgroup generated by ``chars`` (trivial one first)."""
    chars = list(chars)
    if not chars:
        raise ValueError("need at least one character to fix the group")
    m = chars[0].m
    out = {Character((0,) * m)}
    for chi in chars:
        out |= {c * chi for c in out}
    return sorted(out, key=lambda c: (sum(c.bits), -element_index(c.bits)))


def in_kernel(sigma: GroupElement, chars) -> bool:
    return all(chi_value(chi, sigma) == 1 for chi in chars)


def gf2_rank(rows) -> int:
    """Rank over GF(2) of 0/1 row vectors."""
    work = [int("".join(map(str, r)), 2) for r in rows]
    rank = 0
    while work:
        pivot = max(work)
        work.remove(pivot)
        if pivot == 0:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        work = [w ^ pivot if (w >> top) & 1 else w for w in work]
    return rank
