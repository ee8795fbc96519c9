"""Self-checks run by ``deg8covers verify`` and by the acceptance tests.

Each check returns a :class:`CheckResult`; the oracles here are deliberately
independent of the code paths they check (explicit tables, brute-force loops,
complex characters).
"""

from __future__ import annotations

import cmath
import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import cover as cover_mod
from .cover import BranchData, NoCoverError, impose_point, solve_building_data, validate_point_type
from .families import (
    FamilyError,
    build_family,
    construction1,
    construction2,
    contract_step,
    expected_row,
    theorem_table,
)
from .group import branch_elements, character, characters, parity_matrix
from .picard import SurfaceModel
from .tower import count_nodes, genus_chain, h0_pullback, pullback_curve

# Rows of the 2L_chi table, listed as the D-indices on the right-hand side, in
# the order chi_100, chi_010, chi_001, chi_110, chi_101, chi_011, chi_111.
COVER_TABLE = (
    (4, 5, 6, 7),
    (2, 3, 6, 7),
    (1, 3, 5, 7),
    (2, 3, 4, 5),
    (1, 3, 4, 6),
    (1, 2, 5, 6),
    (1, 2, 4, 7),
)

# Building-data tables after imposing the point, same character order.
# Entry (a, u, v, c) stands for a*Delta0 + (u*n + v)*Gamma + c*E.
L_TABLES = {
    2: ((2, 0, 2, -1), (3, 1, 3, -2), (2, 0, 2, -1), (1, 1, 1, -1), (2, 0, 2, -1), (1, 1, 1, -1), (1, 1, 1, -1)),
    3: ((2, 0, 2, -2), (3, 1, 3, -2), (2, 0, 2, -1), (1, 1, 1, 0), (2, 0, 2, -1), (1, 1, 1, -1), (1, 1, 1, -1)),
    4: ((2, 0, 2, -1), (3, 1, 3, -2), (2, 0, 2, -1), (1, 1, 1, 0), (2, 0, 2, -1), (1, 1, 1, 0), (1, 1, 1, -1)),
    6: ((3, 1, 3, -2), (1, 1, 2, -1), (1, 1, 2, -1), (2, 0, 2, -1), (2, 0, 2, -1), (2, 0, 2, -1), (1, 1, 1, -1)),
    7: ((3, 1, 3, -2), (1, 1, 2, -1), (1, 1, 2, -1), (2, 0, 2, -1), (2, 0, 2, -1), (2, 0, 2, -2), (1, 1, 1, 0)),
    8: ((3, 1, 3, -2), (1, 1, 2, 0), (1, 1, 2, -1), (2, 0, 2, -1), (2, 0, 2, 0), (2, 0, 2, -1), (1, 1, 1, -1)),
    # in the construction parameter, which is the public n plus one
    9: ((3, 1, 3, -3), (1, 1, 2, -1), (1, 1, 2, -1), (2, 0, 2, -1), (2, 0, 2, -1), (2, 0, 2, -2), (1, 1, 1, -1)),
}

# (family, public n) -> image degree, the moving part on Y squared
IMAGE_DEGREE = {
    1: lambda n: 2 * n - 1,
    2: lambda n: 2 * n - 2,
    3: lambda n: 2 * n - 2,
    4: lambda n: 2 * n - 2,
    6: lambda n: 2 * n - 2,
    7: lambda n: 2 * n - 2,
    8: lambda n: 2 * n - 2,
    # 2N - 4 in the construction parameter N = n + 1
    9: lambda n: 2 * (n + 1) - 4,
}


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def expect(self, condition: bool, what: str) -> None:
        if condition:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)


def brute_force_h0(a: int, b: int, e: int = 1) -> int:
    """Monomials x^k y^j with 0 <= k <= a, 0 <= j <= b - k*e."""
    return sum(1 for k in range(a + 1) for j in range(b + 1) if j <= b - k * e) if a >= 0 else 0


def character_sign(chi_bits, sigma_bits) -> int:
    value = 1
    for a, j in zip(sigma_bits, chi_bits):
        value *= cmath.exp(1j * cmath.pi * a * j)
    return round(value.real)


def parity_oracle(k) -> bool:
    return all(sum(k[i - 1] for i in row) % 2 == 0 for row in COVER_TABLE)


# -- the criteria ----------------------------------------------------------


def check_theorem_table(ns) -> CheckResult:
    res = CheckResult("theorem table")
    for n in ns:
        for rep in theorem_table(n):
            want = expected_row(rep.family_id, n)
            res.expect(rep.row() == want, f"n={n} family {rep.family_id}: {rep.row()} != {want}")
            res.expect(rep.consistent, f"n={n} family {rep.family_id}: failed {rep.failed_checks}")
    return res


def check_construction1(ns) -> CheckResult:
    res = CheckResult("construction 1 internals")
    for n in ns:
        S = SurfaceModel(1)
        cov = solve_building_data(construction1(n, S))
        inv = cover_mod.invariants(cov)
        res.expect(inv.two_K_pullclass == S.divisor(2, 2 * n), f"n={n}: M = {inv.two_K_pullclass}")
        res.expect(inv.K2 == 8 * (2 * n - 1), f"n={n}: K2 = {inv.K2}")
        res.expect(inv.pg == 2 * n + 1, f"n={n}: pg = {inv.pg}")
        nonzero = [str(chi) for chi, h in inv.contributions.items() if h]
        res.expect(nonzero == ["chi_010"], f"n={n}: contributing characters {nonzero}")
        res.expect(S.h0(S.divisor(1, n)) == 2 * n + 1, f"n={n}: h0(Delta0 + n Gamma)")
        res.expect(inv.chi == 2 * n + 2, f"n={n}: chi = {inv.chi}")
        res.expect(inv.q == 0, f"n={n}: q = {inv.q}")
        res.expect(cov["0,1,0"] == S.divisor(3, n + 3), f"n={n}: L_010 = {cov['0,1,0']}")
    return res


def check_fixtures(ns) -> CheckResult:
    res = CheckResult("building-data fixtures")
    for n in ns:
        for fam, table in L_TABLES.items():
            rep = build_family(fam, n)
            N = rep.internal_n
            Y = rep.surface
            for chi, (a, u, v, c) in zip(characters(3), table):
                want = Y.divisor(a, u * N + v, c)
                got = rep.cover[chi]
                res.expect(got == want, f"n={n} family {fam} {chi}: {got} != {want}")
    return res


def check_tower(ns) -> CheckResult:
    res = CheckResult("tower numerics")
    for n in ns:
        r4 = build_family(4, n)
        E = r4.surface.exceptional(1)
        chain = genus_chain(r4.tower, E)
        res.expect(chain == [(-1, 0), (-2, 0), (-4, 1), (-2, 1)], f"n={n}: E chain {chain}")
        res.expect(count_nodes(r4.tower, 3) == 8 * n + 6, f"n={n}: family 4 nodes")
        K2cls = r4.tower.canonical(2)
        res.expect(K2cls == r4.surface.divisor(1, n, -1), f"n={n}: K_X2 class {K2cls}")
        res.expect(h0_pullback(r4.tower, K2cls, 3) == 2 * n, f"n={n}: h0 of f3*K_X2 (family 4)")
        M = r4.invariants.two_K_pullclass
        res.expect(M == 2 * K2cls + E, f"n={n}: 2K_X != f*(2K_X2) + 2E3")
        fixed = r4.fixed.fixed_curves
        res.expect(
            len(fixed) == 1 and (fixed[0].self_int, fixed[0].genus) == (-2, 1),
            f"n={n}: family 4 fixed curve {fixed}",
        )

        r5 = build_family(5, n)
        G = r5.surface.fiber
        genera = [pullback_curve(r5.tower, G, lvl).genus for lvl in (1, 2, 3)]
        res.expect(genera == [0, 3, 3], f"n={n}: Gamma genera {genera}")
        res.expect(count_nodes(r5.tower, 3) == 8 * n + 12, f"n={n}: construction 2 nodes")
        K2cls = r5.tower.canonical(2)
        res.expect(K2cls == r5.surface.divisor(1, n), f"n={n}: K_X2 class {K2cls}")
        res.expect(h0_pullback(r5.tower, K2cls, 3) == 2 * n + 1, f"n={n}: h0 of f3*K_X2 (construction 2)")
        res.expect(r5.invariants.two_K_pullclass == 2 * K2cls + G, f"n={n}: 2K_X != f*(2K_X2) + 2Gamma3")
        res.expect(r5.fixed.nontrivial, f"n={n}: Gamma3 not detected as fixed part")
    return res


def check_image_degrees(ns) -> CheckResult:
    res = CheckResult("image degrees")
    for n in ns:
        for rep in theorem_table(n):
            mov = rep.fixed.moving_class
            res.expect(
                rep.map_degree * rep.image_degree == 8 * mov.dot(mov),
                f"n={n} family {rep.family_id}: 8 * deg != (f*moving)^2",
            )
            want = IMAGE_DEGREE.get(rep.family_id)
            if want is not None:
                res.expect(rep.image_degree == want(n), f"n={n} family {rep.family_id}: {rep.image_degree}")
    return res


def check_oracles(ns=None) -> CheckResult:
    res = CheckResult("oracle suites")
    S = SurfaceModel(1)
    for a in range(11):
        for b in range(11):
            res.expect(S.h0(S.divisor(a, b)) == brute_force_h0(a, b), f"h0({a}, {b})")
    pm = parity_matrix(3)
    for r, chi in enumerate(characters(3)):
        for c, sigma in enumerate(branch_elements(3)):
            want = 1 if character_sign(chi.bits, sigma.bits) == -1 else 0
            res.expect(pm[r][c] == want, f"parity_matrix[{chi}][D{c + 1}]")
    for r, row in enumerate(COVER_TABLE):
        res.expect(tuple(i + 1 for i, x in enumerate(pm[r]) if x) == row, f"row {r} vs cover table")
    for values in (range(0, 3), range(-1, 3)):
        for k in itertools.product(values, repeat=7):
            res.expect(validate_point_type(k) == parity_oracle(k), f"validate {k}")
    valid01 = [k for k in itertools.product((0, 1), repeat=7) if validate_point_type(k)]
    for x, y in itertools.product(valid01, repeat=2):
        res.expect(validate_point_type(tuple(p ^ q for p, q in zip(x, y))), f"xor {x} {y}")
    return res


def check_residuals(ns) -> CheckResult:
    res = CheckResult("cover-law residuals")
    for n in ns:
        for rep in theorem_table(n):
            inv = rep.invariants
            tag = f"n={n} family {rep.family_id}"
            res.expect(all(r.is_zero() for r in rep.cover.residuals().values()), f"{tag}: residual")
            res.expect(inv.chi == 1 - inv.q + inv.pg, f"{tag}: chi")
            res.expect(inv.K2 % 2 == 0, f"{tag}: K2 odd")
            res.expect(rep.minimality.ok, f"{tag}: not minimal ({rep.minimality.witness})")
    return res


def check_negative_controls(ns=None) -> CheckResult:
    res = CheckResult("negative controls")
    S = SurfaceModel(1)
    n = 3
    B = construction1(n, S)
    odd = BranchData(B.D[:1] + (S.divisor(0, 2 * n + 1),) + B.D[2:])
    try:
        solve_building_data(odd)
        res.expect(False, "odd branch accepted")
    except NoCoverError as exc:
        res.expect(exc.character == character(0, 1, 0), f"failing character {exc.character}")
    res.expect(not validate_point_type((1, 0, 0, 0, 0, 0, 0)), "(1,0,0,0,0,0,0) accepted")
    rep = build_family(1, n)
    try:
        contract_step(rep, rep.surface.fiber, 2)
        res.expect(False, "contraction of Gamma accepted")
    except FamilyError:
        res.expect(True, "")
    Y, B9 = impose_point(S, construction2(n + 1, S), (0, 0, -1, 1, 2, 2, 1))
    nef = cover_mod.minimality_check(solve_building_data(B9))
    res.expect(not nef.ok and nef.witness == "Gamma-E1", f"uncontracted family 9 witness {nef.witness}")
    return res


CHECKS: list[tuple[str, Callable]] = [
    ("theorem table", check_theorem_table),
    ("construction 1 internals", check_construction1),
    ("building-data fixtures", check_fixtures),
    ("tower numerics", check_tower),
    ("image degrees", check_image_degrees),
    ("oracle suites", check_oracles),
    ("cover-law residuals", check_residuals),
    ("negative controls", check_negative_controls),
]


def run_all(n_lo: int, n_hi: int) -> list[CheckResult]:
    ns = range(n_lo, n_hi + 1)
    out = []
    for _, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            res = fn(ns)
        except Exception as exc:  # a crash counts as a failed check, not a traceback
            res = CheckResult(fn.__name__)
            res.expect(False, f"raised {type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
