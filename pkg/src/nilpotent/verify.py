"""Identity suite over the group algebra and the nilpotent state machinery.

Each check is a named boolean; the CLI's verify subcommand runs the whole
list and fails (exit code 2) if any identity breaks.  The random sweeps are
seeded and exact, so the suite is deterministic for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import states
from .algebra import (
    MV,
    BasisBlade,
    GroupElement,
    Multivector,
    dual_element_image,
    dual_generate,
    element_order_census,
    gamma_pentad,
    generate_group,
    group_center,
    matrices_equal,
    matrix_rep,
)
from .states import (
    BARYON_PHASES,
    baryon_product,
    chain_product,
    conjugate,
    conjugate_realized,
    make_nilpotent,
    make_spinor,
    scale_complex,
    spinor_pair_sum,
    vacuum_chain,
    vertex_sum,
)

__all__ = ["Check", "run_identity_suite", "ON_SHELL_QUADRUPLES", "random_on_shell"]

# (px, py, pz, E) integer quadruples with E^2 = p^2 (mass adds via scaling pairs)
ON_SHELL_QUADRUPLES = (
    (0, 0, 4, 3, 5),
    (3, 4, 12, 0, 13),
    (1, 2, 2, 0, 3),
    (2, 3, 6, 0, 7),
    (1, 4, 8, 0, 9),
    (2, 6, 9, 0, 11),
    (6, 6, 7, 0, 11),
    (0, 0, 0, 5, 5),
)


def random_on_shell(rng: random.Random) -> states.NilpotentVector:
    """Random exact on-shell state: scaled, axis-permuted, sign-flipped quadruple."""
    px, py, pz, m, e = rng.choice(ON_SHELL_QUADRUPLES)
    scale = Fraction(rng.randint(1, 12), rng.randint(1, 12))
    comps = [px * scale, py * scale, pz * scale]
    rng.shuffle(comps)
    comps = [c if rng.random() < 0.5 else -c for c in comps]
    return make_nilpotent(e * scale, tuple(comps), m * scale,
                          rng.choice((1, -1)), rng.choice((1, -1)))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def run_identity_suite(oracle_pairs: int = 1000, state_samples: int = 1000,
                       seed: int = 0) -> list[Check]:
    """All algebra and state identities as a flat list of named checks."""
    rng = random.Random(seed)
    checks: list[Check] = []

    def check(name: str, passed: bool, detail: str = ""):
        checks.append(Check(name, bool(passed), detail))

    group = generate_group()
    check("group order 64", len(group) == 64, f"got {len(group)}")
    quat = generate_group({
        GroupElement(-1, BasisBlade(0, 0, 0)),
        GroupElement(1, BasisBlade(0, 1, 0)),
        GroupElement(1, BasisBlade(0, 2, 0)),
        GroupElement(1, BasisBlade(0, 3, 0)),
    })
    check("quaternion subgroup order 8", len(quat) == 8)
    center = group_center(group)
    expected_center = {
        GroupElement(s, BasisBlade(e, 0, 0)) for s in (1, -1) for e in (0, 1)
    }
    check("center is {+-1, +-i}", center == expected_center)

    one, i = MV("1"), MV("i")
    qi, qj, qk = MV("qi"), MV("qj"), MV("qk")
    vi, vj, vk = MV("vi"), MV("vj"), MV("vk")
    check("i^2 = -1 (central)", i * i == -one)
    for name, unit in (("qi", qi), ("qj", qj), ("qk", qk)):
        check(f"{name}^2 = -1", unit * unit == -one)
    check("qi qj qk = -1", qi * qj * qk == -one)
    check("qi qj = qk", qi * qj == qk)
    check("qj qk = qi", qj * qk == qi)
    check("qk qi = qj", qk * qi == qj)
    for name, unit in (("vi", vi), ("vj", vj), ("vk", vk)):
        check(f"{name}^2 = +1", unit * unit == one)
    check("vi vj = i vk", vi * vj == i * vk)
    check("vj vk = i vi", vj * vk == i * vi)
    check("vk vi = i vj", vk * vi == i * vj)
    check("vi vj = -vj vi", vi * vj == -(vj * vi))
    for qn, qu in (("qi", qi), ("qj", qj), ("qk", qk)):
        for vn, vu in (("vi", vi), ("vj", vj), ("vk", vk)):
            check(f"{qn} {vn} commute", qu * vu == vu * qu)

    for tag in ("mapping-1", "mapping-2"):
        pen = gamma_pentad(tag)
        gammas = list(pen)
        squares = (one, -one, -one, -one, one)
        for k, (g, sq) in enumerate(zip(gammas, squares)):
            check(f"{tag} gamma{'5' if k == 4 else k} square", g * g == sq)
        for ai in range(5):
            for bi in range(ai + 1, 5):
                check(
                    f"{tag} gamma{ai}|{bi} anticommute",
                    (gammas[ai] * gammas[bi] + gammas[bi] * gammas[ai]).is_zero,
                )
        lhs = matrix_rep(pen.gamma0 * pen.gamma1)
        rhs = matrix_rep(pen.gamma0) @ matrix_rep(pen.gamma1)
        check(f"{tag} oracle spot product", matrices_equal(lhs, rhs))

    ok = True
    for _ in range(oracle_pairs):
        a = _random_multivector(rng)
        b = _random_multivector(rng)
        if not matrices_equal(matrix_rep(a * b), matrix_rep(a) @ matrix_rep(b)):
            ok = False
            break
    check(f"matrix oracle on {oracle_pairs} random pairs", ok)

    for order in (2, 4, 8, 16, 32, 64):
        check(f"dual order {order} count", len(dual_generate(order).elements) == order)
    d8 = dual_generate(8)
    check("dual order 8 is the quaternion group",
          element_order_census(d8.elements) == {1: 1, 2: 1, 4: 6})
    d64 = dual_generate(64)
    image = {dual_element_image(e) for e in d64.elements}
    check("dual order 64 image bijective", len(image) == 64 and image == group)
    check("dual order 64 census matches",
          element_order_census(d64.elements) == element_order_census(group))
    els = sorted(d64.elements, key=repr)
    hom = all(
        dual_element_image(x * y) == dual_element_image(x) * dual_element_image(y)
        for x in els
        for y in els
    )
    check("dual order 64 generator map is a homomorphism", hom)

    # nilpotent machinery -------------------------------------------------
    sample_ok = {"square": True, "pauli": True, "vacuum": True}
    for _ in range(state_samples):
        x = random_on_shell(rng)
        defect = (x.realized * x.realized).scalar_part
        if defect != x.mass_shell_defect or defect != 0:
            sample_ok["square"] = False
        if not (x.realized * x.realized).is_zero:
            sample_ok["pauli"] = False
        mv, lam = vacuum_chain(x, 1)
        if mv != scale_complex(x.realized, lam) or abs(lam.im) != 2 * abs(x.E) or lam.re != 0:
            sample_ok["vacuum"] = False
    check(f"on-shell square zero ({state_samples} samples)", sample_ok["square"])
    check("Pauli exclusion on samples", sample_ok["pauli"])
    check("vacuum factor |lam| = 2E on samples", sample_ok["vacuum"])

    x = make_nilpotent(5, (0, 0, 4), 3)
    for op in ("P", "T", "C"):
        check(f"{op} sandwich matches sign flip",
              conjugate_realized(x, op) == conjugate(x, op).realized)
    check("CP = T", conjugate(x, "CP") == conjugate(x, "T"))
    check("PT = C", conjugate(x, "PT") == conjugate(x, "C"))
    check("TC = P", conjugate(x, "TC") == conjugate(x, "P"))
    check("TCP = identity", conjugate_realized(x, "TCP") == x.realized)

    fm = make_spinor(5, (3, 0, 4), 0)
    am = make_spinor(5, (3, 0, 4), 0, "antifermion")
    goldstone = all(
        (r.realized * c.flip_p().realized).is_zero
        for r, c in zip(fm.components, am.components)
    )
    check("massless spin-0 products vanish", goldstone)
    check("massless spin-1 sum nonzero", not spinor_pair_sum(fm, am, "spin1").is_zero)

    baryon_ok = True
    for phase in BARYON_PHASES:
        factor, _ = baryon_product(phase, 5, (0, 0, 4), 3)
        if abs(factor) != 16:
            baryon_ok = False
    check("six baryon phases collapse with |factor| = p^2", baryon_ok)

    vertex_ok = all(not vertex_sum(v, 5, (0, 0, 4), 3).is_zero for v in "abc")
    vertex_zero = all(vertex_sum(v, 5, (3, 0, 4), 0).is_zero for v in "abcd")
    check("massive vertex sums nonzero", vertex_ok)
    check("massless vertex sums vanish", vertex_zero)
    spin0_glueball = chain_product([
        make_nilpotent(5, (3, 0, 4), 0, 1, 1),
        make_nilpotent(5, (3, 0, 4), 0, -1, -1),
        make_nilpotent(5, (3, 0, 4), 0, 1, 1),
        make_nilpotent(5, (3, 0, 4), 0, -1, -1),
    ])
    spin2_glueball = chain_product([
        make_nilpotent(5, (3, 0, 4), 0, 1, 1),
        make_nilpotent(5, (3, 0, 4), 0, -1, 1),
        make_nilpotent(5, (3, 0, 4), 0, 1, 1),
        make_nilpotent(5, (3, 0, 4), 0, -1, 1),
    ])
    check("massless spin-0 four-chain vanishes", spin0_glueball.is_zero)
    check("massless spin-2 four-chain survives", not spin2_glueball.is_zero)

    return checks


def _random_multivector(rng: random.Random, max_blades: int = 6) -> Multivector:
    coeffs = {}
    for _ in range(rng.randint(1, max_blades)):
        coeffs[rng.randrange(32)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return Multivector(coeffs)
