"""The nine families of degree-8 canonical maps, built from two branch shapes on F_1."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .cover import (
    BranchData,
    CoverData,
    Invariants,
    impose_point,
    invariants,
    minimality_check,
    solve_building_data,
)
from .group import Character, character
from .picard import DivisorClass, NefResult, SurfaceModel
from .tower import (
    FixedPartReport,
    Tower,
    build_tower,
    canonical_image_degree,
    count_nodes,
    curve_preimage,
    fixed_part_report,
)

N_MAX = 10**6
MAP_DEGREE = 8

TOWER_C1 = (character(0, 1, 0), character(1, 0, 0), character(0, 0, 1))
TOWER_C1_E5 = (character(1, 1, 1), character(1, 0, 1), character(1, 0, 0))
TOWER_C2 = (character(1, 1, 1), character(0, 1, 1), character(0, 1, 0))


class FamilyError(ValueError):
    pass


def construction1(n: int, S: Optional[SurfaceModel] = None) -> BranchData:
    """D2 = 2n fibers, D3 = D6 = D7 in |2Delta0 + 2Gamma|."""
    S = S or SurfaceModel(1)
    conic = S.divisor(2, 2)
    return BranchData.from_classes(S, {2: S.divisor(0, 2 * n), 3: conic, 6: conic, 7: conic})


def construction2(n: int, S: Optional[SurfaceModel] = None) -> BranchData:
    """D3 = Gamma, D4 = 2Delta0 + Gamma, D5 = D6 in |2Delta0 + 2Gamma|, D7 = (2n+1) fibers."""
    S = S or SurfaceModel(1)
    conic = S.divisor(2, 2)
    return BranchData.from_classes(
        S,
        {3: S.fiber, 4: S.divisor(2, 1), 5: conic, 6: conic, 7: S.divisor(0, 2 * n + 1)},
    )


@dataclass(frozen=True)
class FamilySpec:
    family_id: int
    base: str  # "c1" or "c2"
    point: Optional[tuple[int, ...]]
    tower: tuple[Character, ...]
    contract: bool = False


FAMILY_SPECS = {
    1: FamilySpec(1, "c1", None, TOWER_C1),
    2: FamilySpec(2, "c1", (0, 1, 1, 0, 0, 1, 1), TOWER_C1),
    3: FamilySpec(3, "c1", (0, 0, 0, 0, 0, 2, 2), TOWER_C1),
    4: FamilySpec(4, "c1", (0, 0, 1, 0, -1, 1, 2), TOWER_C1_E5),
    5: FamilySpec(5, "c2", None, TOWER_C2),
    6: FamilySpec(6, "c2", (0, 0, 0, 1, 1, 1, 1), TOWER_C2),
    7: FamilySpec(7, "c2", (0, 0, 0, 0, 2, 2, 0), TOWER_C2),
    8: FamilySpec(8, "c2", (0, 0, -1, 1, 2, 0, 1), TOWER_C2),
    9: FamilySpec(9, "c2", (0, 0, -1, 1, 2, 2, 1), TOWER_C2, contract=True),
}

BASES = {"c1": construction1, "c2": construction2}

# (K2, pg, q, bpf) as closed forms in the public parameter n
THEOREM_ROWS = {
    1: (lambda n: 16 * n - 8, lambda n: 2 * n + 1, 0, True),
    2: (lambda n: 16 * n - 16, lambda n: 2 * n, 0, True),
    3: (lambda n: 16 * n - 16, lambda n: 2 * n, 1, True),
    4: (lambda n: 16 * n - 10, lambda n: 2 * n, 0, False),
    5: (lambda n: 16 * n, lambda n: 2 * n + 1, 0, False),
    6: (lambda n: 16 * n - 8, lambda n: 2 * n, 0, False),
    7: (lambda n: 16 * n - 8, lambda n: 2 * n, 1, False),
    8: (lambda n: 16 * n - 2, lambda n: 2 * n, 0, False),
    9: (lambda n: 16 * n, lambda n: 2 * n, 1, False),
}


def expected_row(family_id: int, n: int) -> tuple[int, int, int, bool]:
    K2, pg, q, bpf = THEOREM_ROWS[family_id]
    return K2(n), pg(n), q, bpf


@dataclass
class FamilyReport:
    family_id: int
    n: int
    internal_n: int
    surface: SurfaceModel
    branch: BranchData
    cover: CoverData
    tower: Tower
    invariants: Invariants
    minimality: NefResult
    fixed: FixedPartReport
    image_degree: int
    node_count: Optional[int]
    map_degree: int = MAP_DEGREE
    contractions: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    failed_checks: list = field(default_factory=list)

    @property
    def K2(self) -> int:
        return self.invariants.K2

    @property
    def pg(self) -> int:
        return self.invariants.pg

    @property
    def chi(self) -> int:
        return self.invariants.chi

    @property
    def q(self) -> int:
        return self.invariants.q

    @property
    def bpf(self) -> bool:
        return self.fixed.is_bpf_claimed

    @property
    def fixed_part(self) -> str:
        return self.fixed.describe()

    @property
    def consistent(self) -> bool:
        return not self.failed_checks

    def row(self) -> tuple[int, int, int, bool]:
        return self.K2, self.pg, self.q, self.bpf

    def to_dict(self) -> dict:
        return {
            "family": self.family_id,
            "n": self.n,
            "K2": self.K2,
            "pg": self.pg,
            "chi": self.chi,
            "q": self.q,
            "map_degree": self.map_degree,
            "image_degree": self.image_degree,
            "bpf": self.bpf,
            "fixed_part": self.fixed_part,
            "nodes": self.node_count,
            "assumptions": list(self.assumptions),
        }


def contract_step(report: FamilyReport, curve: DivisorClass, count: int) -> FamilyReport:
    """Contract ``count`` disjoint (-1)-curves lying over the (-1)-curve ``curve`` on Y.

    K^2 goes up by ``count``; p_g and q are birational invariants. The curves sum
    to half the pullback of ``curve``, so 2K of the contracted surface pulls back
    from M - curve.
    """
    if count == 0:
        return report
    Y = report.surface
    if Y.intersect(curve, curve) != -1:
        raise FamilyError(f"{curve} has self-intersection {Y.intersect(curve, curve)}, not -1")
    inv = report.invariants
    M_new = inv.two_K_pullclass - curve
    K2_new = inv.K2 + count
    if 2 * Y.intersect(M_new, M_new) != K2_new:
        raise FamilyError(
            f"contracting {count} curves over {curve} is inconsistent: "
            f"2(M - C)^2 = {2 * Y.intersect(M_new, M_new)}, expected K^2 = {K2_new}"
        )
    new_inv = replace(inv, K2=K2_new, two_K_pullclass=M_new)
    report = replace(
        report,
        invariants=new_inv,
        minimality=Y.is_nef_and_big(M_new),
        contractions=report.contractions + [(curve, count)],
        assumptions=report.assumptions + [f"contracted {count} (-1)-curves over {curve}"],
    )
    return report


def _cross_checks(report: FamilyReport) -> list[str]:
    failed = []
    if any(not r.is_zero() for r in report.cover.residuals().values()):
        failed.append("cover residual")
    inv = report.invariants
    if inv.chi != 1 - inv.q + inv.pg:
        failed.append("chi = 1 - q + pg")
    if inv.K2 % 2:
        failed.append("K2 even")
    Y = report.surface
    if 2 * Y.intersect(inv.two_K_pullclass, inv.two_K_pullclass) != inv.K2:
        failed.append("K2 = 2 M.M")
    if not report.minimality.ok:
        failed.append(f"minimality ({report.minimality.witness})")
    fx = report.fixed
    if fx.h0_moving != inv.pg:
        failed.append("h0 of moving pullback = pg")
    if report.map_degree * report.image_degree != MAP_DEGREE * fx.moving_class.dot(fx.moving_class):
        failed.append("degree * image degree = moving square")
    return failed


def build_family(family_id: int, n: int) -> FamilyReport:
    if family_id not in FAMILY_SPECS:
        raise FamilyError(f"family id must be in 1..9, got {family_id}")
    if not isinstance(n, int) or n < 2:
        raise FamilyError(f"n must be an integer >= 2, got {n}")
    if n > N_MAX:
        raise FamilyError(f"n is capped at {N_MAX}")
    spec = FAMILY_SPECS[family_id]
    # family 9 uses construction parameter n + 1
    internal_n = n + 1 if spec.contract else n
    S = SurfaceModel(1)
    B = BASES[spec.base](internal_n, S)
    Y = S
    if spec.point is not None:
        Y, B = impose_point(S, B, spec.point, tag="P")
    cover = solve_building_data(B)
    inv = invariants(cover)
    tower = build_tower(cover, spec.tower)
    fixed = fixed_part_report(tower, inv.pg)
    last = len(tower.steps)
    assumptions = sorted(B.assumptions) + ["canonical map not composed with a pencil (asserted)"]
    if fixed.is_bpf_claimed:
        assumptions.append("base point free (asserted; fixed part is zero)")
    report = FamilyReport(
        family_id=family_id,
        n=n,
        internal_n=internal_n,
        surface=Y,
        branch=B,
        cover=cover,
        tower=tower,
        invariants=inv,
        minimality=minimality_check(cover),
        fixed=fixed,
        image_degree=canonical_image_degree(fixed.moving_class, MAP_DEGREE, cover.degree),
        node_count=count_nodes(tower, last),
        assumptions=assumptions,
    )
    if spec.contract:
        report = _contract_minus_one_curves(report)
    report.failed_checks = _cross_checks(report)
    return report


def _contract_minus_one_curves(report: FamilyReport) -> FamilyReport:
    """Contract the preimages of (-1)-curves on Y that make 2K_X fail to be nef."""
    Y = report.surface
    B = report.branch
    while not report.minimality.ok:
        curve = report.minimality.curve
        if curve is None or Y.intersect(curve, curve) != -1:
            break
        containing = [
            i for i, d in enumerate(B.D, start=1) if not d.is_zero() and Y.intersect(d, curve) < 0
        ]
        if len(containing) != 1:
            break
        pre = curve_preimage(report.cover, curve, containing[0])
        if pre.self_int != -1 or pre.genus != 0:
            break
        report = contract_step(report, curve, pre.components)
    return report


def theorem_table(n: int) -> list[FamilyReport]:
    return [build_family(i, n) for i in range(1, 10)]
