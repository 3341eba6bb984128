"""Command-line interface: every subsystem behind one verb-style binary.

    nilpotent algebra verify            identity suite (exit 2 on failure)
    nilpotent algebra multiply ...      blade / multivector products
    nilpotent algebra cpt|spinor|baryon|vacuum|vertex|dual ...
    nilpotent solve --family ...        bound-state coefficient matching
    nilpotent gut ...                   running couplings and the M_X solve
    nilpotent mass ...                  multiplet tables and boson block

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 missing data.
Output formats: text (default), json, csv; JSON and CSV are deterministic
for fixed flags, dataset and seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from . import algebra, charges, masses, spectra, states, unification, verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_DATA = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    output_format: str = "text"
    data_dir: "str | None" = None
    seed: int = 0


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k, v in sorted(value.items(), key=lambda kv: str(kv[0])):
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, (list, tuple)):
        for idx, v in enumerate(value):
            _flatten(f"{prefix}[{idx}]", v, rows)
    else:
        rows.append((prefix, value))


def _render_text(report: dict, out) -> None:
    rows: list = []
    _flatten("", report, rows)
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        out.write(f"{key:<{width}}  {value}\n")


def _render_csv(report: dict, out) -> None:
    rows: list = []
    _flatten("", report, rows)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in rows:
        writer.writerow([key, value])


def emit(report: dict, config: RunConfig, out=None) -> None:
    out = out or sys.stdout
    if config.output_format == "json":
        json.dump(report, out, indent=2, sort_keys=True)
        out.write("\n")
    elif config.output_format == "csv":
        _render_csv(report, out)
    else:
        _render_text(report, out)


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise UsageError(f"expected a rational number, got {text!r}") from exc


def _parse_triple(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected px,py,pz, got {text!r}")
    return tuple(_parse_fraction(p) for p in parts)


def _parse_phase(text: str):
    """Rational or imaginary-rational coefficient; '1/2i' or '0.5i' is i/2."""
    text = text.strip()
    if text.endswith(("i", "I", "j")):
        return sp.I * sp.nsimplify(text[:-1] or "1", rational=True)
    return sp.nsimplify(text, rational=True)


def _state_args(parser: _Parser):
    parser.add_argument("--E", required=True, help="energy eigenvalue (rational)")
    parser.add_argument("--p", required=True, help="momentum px,py,pz (rationals)")
    parser.add_argument("--m", required=True, help="rest mass (rational)")


def _make_state(args) -> states.NilpotentVector:
    return states.make_nilpotent(
        _parse_fraction(args.E), _parse_triple(args.p), _parse_fraction(args.m),
        getattr(args, "sign_e", 1), getattr(args, "sign_p", 1),
    )


# ---------------------------------------------------------------------------
# algebra subcommands
# ---------------------------------------------------------------------------


def _cmd_algebra(args, config: RunConfig) -> int:
    action = args.subaction
    if action == "verify":
        checks = verify.run_identity_suite(
            oracle_pairs=args.pairs, state_samples=args.samples, seed=config.seed
        )
        failures = [c for c in checks if not c.passed]
        report = {
            "group_elements": 64,
            "identities": len(checks),
            "failures": [{"name": c.name, "detail": c.detail} for c in failures],
            "status": "OK" if not failures else "FAIL",
        }
        if config.output_format == "text":
            status = "OK" if not failures else f"{len(failures)} FAILED"
            sys.stdout.write(f"64 group elements, {len(checks)} identities {status}\n")
            for c in failures:
                sys.stdout.write(f"FAIL {c.name} {c.detail}\n")
        else:
            emit(report, config)
        return EXIT_OK if not failures else EXIT_VERIFY

    if action == "multiply":
        def parse_operand(text):
            sign, name = (-1, text[1:]) if text.startswith("-") else (1, text)
            return algebra.Multivector.from_name(name.strip(), sign)

        product = parse_operand(args.a) * parse_operand(args.b)
        emit({"a": args.a, "b": args.b, "product": str(product),
              "blades": product.to_dict()}, config)
        return EXIT_OK

    if action == "cpt":
        x = _make_state(args)
        image = states.conjugate(x, args.op)
        sandwich = states.conjugate_realized(x, args.op)
        emit({
            "op": args.op,
            "input": x.to_dict(),
            "output": image.to_dict(),
            "sandwich_matches": sandwich == image.realized,
            "multivector": image.realized.to_dict(),
        }, config)
        return EXIT_OK

    if action == "spinor":
        spinor = states.make_spinor(
            _parse_fraction(args.E), _parse_triple(args.p), _parse_fraction(args.m), args.kind
        )
        partner = states.make_spinor(spinor.E, spinor.p, spinor.m, "antifermion")
        report = {
            "kind": spinor.kind,
            "components": [c.to_dict() for c in spinor.components],
        }
        if args.pairing:
            total = states.spinor_pair_sum(spinor, partner, args.pairing)
            report["pairing"] = args.pairing
            report["pair_sum"] = states.product_report(total)
        emit(report, config)
        return EXIT_OK

    if action == "baryon":
        factor, survivor = states.baryon_product(
            args.phase, _parse_fraction(args.E), _parse_triple(args.p), _parse_fraction(args.m)
        )
        emit({
            "phase": args.phase,
            "scalar_factor": str(factor),
            "survivor": survivor.to_dict(),
        }, config)
        return EXIT_OK

    if action == "vacuum":
        x = _make_state(args)
        image = states.vacuum_reflect(x, args.charge)
        report = {"charge": args.charge, "input": x.to_dict(), "image": image.to_dict()}
        if args.charge == "k":
            mv, lam = states.vacuum_chain(x, args.n)
            report["chain_reflections"] = args.n
            report["per_step_factor"] = {"re": str(lam.re), "im": str(lam.im)}
            report["chain"] = states.product_report(mv)
        emit(report, config)
        return EXIT_OK

    if action == "vertex":
        emit(states.vertex_report(
            args.vertex, _parse_fraction(args.E), _parse_triple(args.p), _parse_fraction(args.m)
        ), config)
        return EXIT_OK

    if action == "dual":
        dual = algebra.dual_generate(args.order)
        report = {
            "order": dual.order,
            "element_count": len(dual.elements),
            "history": [{"order": o, "step": s} for o, s in dual.history],
            "order_census": {
                str(k): v for k, v in sorted(algebra.element_order_census(dual.elements).items())
            },
        }
        if args.order == 64:
            group = algebra.generate_group()
            image = {algebra.dual_element_image(e) for e in dual.elements}
            report["isomorphic_to_dirac_group"] = (
                image == group
                and algebra.element_order_census(dual.elements)
                == algebra.element_order_census(group)
            )
        emit(report, config)
        return EXIT_OK

    raise UsageError(f"unknown algebra action {action!r}")


# ---------------------------------------------------------------------------
# solve subcommand
# ---------------------------------------------------------------------------


def _build_potential(args) -> spectra.PotentialSpec:
    if args.potential:
        return spectra.PotentialSpec.from_dict(json.loads(args.potential))
    family = args.family
    if family == "strong":
        return spectra.PotentialSpec(
            {1: sp.nsimplify(args.sigma, rational=True)},
            coulomb_phase=_parse_phase(args.A) if args.A else Fraction(args.qA or "0"),
            coupling=sp.nsimplify(args.q, rational=True),
        )
    if family == "coulomb":
        if args.qA is None:
            raise UsageError("coulomb family needs --qA")
        return spectra.PotentialSpec({}, coulomb_phase=Fraction(args.qA), coupling=1)
    if family == "oscillator":
        half_c = sp.nsimplify(args.c, rational=True) / 2
        return spectra.PotentialSpec(
            {2: half_c}, coulomb_phase=_parse_phase(args.A or "1/2i")
        )
    if family == "lennard-jones":
        return spectra.PotentialSpec(
            {-6: sp.nsimplify(args.B, rational=True), -12: -sp.nsimplify(args.C, rational=True)},
            coulomb_phase=_parse_phase(args.A or "1/2i"),
        )
    raise UsageError(f"unknown family {family!r}")


def _cmd_solve(args, config: RunConfig) -> int:
    qn = spectra.QuantumNumbers(Fraction(args.j), args.nprime)

    if args.family == "strong" and args.radius:
        if args.E is None:
            raise UsageError("--radius needs --E (the constituent or reduced energy)")
        r = spectra.infrared_radius(float(Fraction(args.E)), float(args.q), float(args.sigma))
        emit({"family": "strong", "E": args.E, "q": args.q, "sigma": args.sigma,
              "infrared_radius_fm": r}, config)
        return EXIT_OK

    if args.lmin:
        a, b, c = (float(Fraction(x)) for x in args.lmin.split(","))
        emit({"sides": [a, b, c], "L_min": spectra.lmin(a, b, c)}, config)
        return EXIT_OK

    V = _build_potential(args)
    sol = spectra.match_coefficients(V, qn)
    report = sol.to_dict()
    report["residual"] = spectra.residual_verify(V, sol, qn)
    if sol.level_series is not None:
        report["level_family"] = sol.level_series.family
        report["levels"] = sol.level_series.table(
            [Fraction(args.j)], list(range(args.nprime, args.nprime + 3))
        )
        if sol.level_series.family == "coulomb":
            report["E_over_m"] = spectra.coulomb_levels(
                float(V.coupling * V.coulomb_phase), Fraction(args.j), args.nprime
            )
        else:
            m_val = Fraction(args.m) if args.m else 1
            report["E"] = float(spectra.oscillator_levels(m_val, Fraction(args.j), args.nprime))
    emit(report, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# gut subcommand
# ---------------------------------------------------------------------------


def _cmd_gut(args, config: RunConfig) -> int:
    constants = masses.load_constants(config.data_dir)
    mu = args.mu if args.mu is not None else constants["m_z_gev"]
    inv_alpha = args.inv_alpha if args.inv_alpha is not None else constants["inv_alpha_mz"]
    alpha3 = args.alpha3 if args.alpha3 is not None else constants["alpha3_mz"]
    sin2 = args.sin2 if args.sin2 is not None else constants["sin2_theta_w_ideal"]
    planck = args.planck if args.planck is not None else constants["planck_mass_gev"]

    if args.legacy_su5:
        rep = unification.solve_legacy_su5(inv_alpha, 1.0 / alpha3, mu)
        emit({"legacy_su5": rep.to_dict()}, config)
        return EXIT_OK

    m_z = constants["m_z_gev"]
    alpha_g = unification.alphaG_at(alpha3, planck, m_z)
    report = {
        "inputs": {
            "mu": mu,
            "inv_alpha": inv_alpha,
            "alpha3": alpha3,
            "sin2_theta_w": sin2,
            "M_X_assumed": planck,
        },
        "solved_M_X": unification.solve_MX(1.0 / inv_alpha, alpha3, sin2, mu),
        "inv_alpha_G": 1.0 / alpha_g,
        "couplings_at_mu": {
            "inv_alpha2": unification.run_alpha2(alpha_g, planck, mu),
            "inv_alpha3": unification.run_alpha3(alpha_g, planck, mu),
            "inv_alpha_em": unification.run_alpha_em(alpha_g, planck, mu),
        },
        "inv_alpha_at_14TeV": unification.run_alpha_em(alpha_g, planck, 14000.0),
        "mu_where_alpha3_is_1": unification.mu_for_alpha3(1.0, alpha_g, planck),
        "sin2_exact": {
            "phenomenological": str(unification.sin2_from_content(unification.phenomenological_content())),
            "lepton_like": str(unification.sin2_from_content(unification.lepton_like_content())),
        },
        "vacuum_polarization_over_pi": {
            "conventional": str(unification.b1_coefficient(unification.B1_CONVENTIONAL)),
            "lepton_like": str(unification.b1_coefficient(unification.B1_LEPTON_LIKE)),
        },
    }
    if args.grid:
        mus = [float(x) for x in args.grid.split(",")]
        report["coupling_table"] = unification.coupling_table(alpha_g, planck, mus)
    emit(report, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# mass subcommand
# ---------------------------------------------------------------------------


def _cmd_mass(args, config: RunConfig) -> int:
    constants = masses.load_constants(config.data_dir)
    unit = masses.MassUnit.from_constants(constants)
    report: dict = {"unit_gev": unit.unit_gev}
    want_all = args.all or not any(
        (args.decuplet, args.octet, args.mesons, args.bosons, args.generations,
         args.ckm, args.ratios, args.regge, args.zeros)
    )

    if args.decuplet or want_all:
        report["decuplet"] = masses.decuplet_table(unit, config.data_dir)
    if args.octet or want_all:
        rows = masses.octet_table(unit, config.data_dir)
        report["octet"] = rows
        vals = {r["name"]: r["measured_units"] for r in rows}
        report["gmo_octet_residual_units"] = masses.gmo_octet_residual(
            13.5, vals["Lambda"], vals["Sigma"], vals["Xi"]
        )
    if args.mesons or want_all:
        rows = masses.meson_table(unit, config.data_dir)
        report["mesons"] = rows
        vals = {r["name"]: r["measured_units"] for r in rows}
        report["gmo_meson_K_units"] = masses.gmo_meson_k(2.0, vals["eta"])
    if args.bosons or want_all:
        block = masses.electroweak_bosons(
            constants["m_z_gev"],
            constants["sin2_theta_w_ideal"],
            constants["m_w_measured_gev"],
            constants["higgs_vev_empirical_gev"],
            unit,
        )
        report["bosons"] = block.to_dict()
        report["bosons"]["higgs_zero_count"] = masses.higgs_zero_count()
        report["bosons"]["z_zero_count"] = masses.z_zero_count()
        report["bosons"]["coupling_sum_over_g"] = masses.fermion_coupling_sum(1.0)
    if args.generations or want_all:
        g1, g2, g3 = masses.generation_partition(
            constants["fermion_mass_total_gev"], 1.0 / constants["inv_alpha_low_energy"]
        )
        report["generations_gev"] = [g1, g2, g3]
    if args.ckm or want_all:
        rotated = masses.ckm_apply(
            (constants["m_e_lepton_gev"], constants["m_mu_gev"], constants["m_tau_gev"]),
            constants["cabibbo_lambda"],
        )
        report["ckm"] = {
            "lambda": constants["cabibbo_lambda"],
            "rotated_gev": list(rotated["rotated"]),
            "mu_over_e": rotated["mu_over_e"],
            "tau_over_mu": rotated["tau_over_mu"],
        }
    if args.ratios or want_all:
        rfi = constants["ratio_formula_inputs"]
        rb = masses.mb_over_mtau(
            rfi["alpha3_mu"], rfi["alpha3_mt"], rfi["alpha3_mx"], rfi["alpha_ratio_term"]
        )
        rs = masses.ms_over_mmu(
            rfi["alpha3_mu"], 1.0 / rfi["inv_alpha3_mc"], rfi["alpha3_mx"], rfi["alpha_ratio_term"]
        )
        report["ratios"] = {
            "mb_over_mtau": rb,
            "m_b_gev": rb * constants["m_tau_gev"],
            "ms_over_mmu": rs,
            "m_s_gev": rs * constants["m_mu_gev"],
        }
    if args.regge or want_all:
        slope = constants["regge_two_pi_kappa_gev2"]
        report["regge"] = {
            "two_pi_kappa_gev2": slope,
            "mass_at_J1_gev": masses.regge_mass_squared(1.0, slope) ** 0.5,
        }
    if args.zeros or want_all:
        tables = charges.build_tables()
        report["zero_counts"] = {
            name: list(charges.multiplet_zero_candidates(combos, "A", tables))
            for name, combos in (
                ("Delta", ["ddd", "udd", "uud", "uuu"]),
                ("Sigma*", ["dds", "uds", "uus"]),
                ("Xi*", ["dss", "uss"]),
                ("Omega", ["sss"]),
                ("N", ["udd", "uud"]),
                ("Lambda", ["uds"]),
            )
        }
    emit(report, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="nilpotent", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--data-dir", default=None,
                        help="override the dataset directory (or set NILPOTENT_DATA_DIR)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    alg = sub.add_parser("algebra", help="group algebra and state-vector checks")
    alg_sub = alg.add_subparsers(dest="subaction", required=True)

    p = alg_sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("--pairs", type=int, default=1000, help="oracle pairs")
    p.add_argument("--samples", type=int, default=1000, help="on-shell state samples")

    p = alg_sub.add_parser("multiply", help="multiply two signed blades")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = alg_sub.add_parser("cpt", help="apply a conjugation string such as TCP")
    p.add_argument("--op", required=True)
    _state_args(p)

    p = alg_sub.add_parser("spinor", help="4-component spinor and pair sums")
    p.add_argument("--kind", choices=("fermion", "antifermion"), default="fermion")
    p.add_argument("--pairing", choices=states.PAIRING_KINDS, default=None)
    _state_args(p)

    p = alg_sub.add_parser("baryon", help="three-bracket phase product")
    p.add_argument("--phase", required=True, choices=sorted(states.BARYON_PHASES))
    _state_args(p)

    p = alg_sub.add_parser("vacuum", help="vacuum reflections and chains")
    p.add_argument("--charge", choices=("k", "j", "i"), default="k")
    p.add_argument("--n", type=int, default=1)
    _state_args(p)

    p = alg_sub.add_parser("vertex", help="electroweak vertex sums")
    p.add_argument("--vertex", required=True, choices=("a", "b", "c", "d"))
    _state_args(p)

    p = alg_sub.add_parser("dual", help="iterative dualling generation")
    p.add_argument("--order", type=int, default=64)

    p = sub.add_parser("solve", help="bound-state coefficient matching")
    p.add_argument("--family", choices=("strong", "coulomb", "oscillator", "lennard-jones"))
    p.add_argument("--potential", help="potential as JSON {terms:{}, coulombPhase, q}")
    p.add_argument("--q", default="1", help="coupling strength")
    p.add_argument("--sigma", default="1", help="linear coefficient (strong family)")
    p.add_argument("--qA", default=None, help="Coulomb product qA")
    p.add_argument("--A", default=None, help="Coulomb phase (append i for imaginary)")
    p.add_argument("--c", default="1", help="oscillator constant (V = c r^2 / 2)")
    p.add_argument("--B", default="1", help="inverse sixth-power coefficient")
    p.add_argument("--C", default="1", help="inverse twelfth-power coefficient")
    p.add_argument("--j", default="1/2", help="total angular momentum")
    p.add_argument("--nprime", type=int, default=0, help="series termination")
    p.add_argument("--E", default=None, help="energy for the infrared radius")
    p.add_argument("--m", default=None, help="mass scale for oscillator levels")
    p.add_argument("--radius", action="store_true", help="infrared radius 2E/(q sigma)")
    p.add_argument("--lmin", default=None, help="flux-tube length for sides a,b,c")

    p = sub.add_parser("gut", help="running couplings and unification")
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--inv-alpha", type=float, default=None, dest="inv_alpha")
    p.add_argument("--alpha3", type=float, default=None)
    p.add_argument("--sin2", type=float, default=None)
    p.add_argument("--planck", type=float, default=None, help="assumed M_X")
    p.add_argument("--legacy-su5", action="store_true", dest="legacy_su5")
    p.add_argument("--grid", default=None, help="comma-separated mu grid")

    p = sub.add_parser("mass", help="multiplet, boson and fermion mass reports")
    for flag in ("decuplet", "octet", "mesons", "bosons", "generations",
                 "ckm", "ratios", "regge", "zeros", "all"):
        p.add_argument(f"--{flag}", action="store_true")

    return parser


_COMMANDS = {
    "algebra": _cmd_algebra,
    "solve": _cmd_solve,
    "gut": _cmd_gut,
    "mass": _cmd_mass,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig(args.format, args.data_dir, args.seed)
        return _COMMANDS[args.command](args, config)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"missing data: {exc}\n")
        return EXIT_DATA
    except (ValueError, spectra.UnsupportedPotentialError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
