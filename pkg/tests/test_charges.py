"""Charge structures: generator, tables, zero counts, weak classes, SU(5)."""

import itertools
from fractions import Fraction

import pytest

from nilpotent.charges import (
    CHARGE_TYPES,
    COLOURS,
    LEPTONS,
    QUARKS,
    build_tables,
    charge_dirac,
    composite_weak_charge,
    count_zeros,
    fermion_spec,
    multiplet_zero_candidates,
    state_zero_candidates,
    su5_grid,
    tables_to_csv,
)
from nilpotent.charges import load_shipped_tables_csv

TABLES = build_tables()


def test_electron_expression():
    spec, expr = fermion_spec("e")
    assert expr == "-sigma.(-j p_a + k p_a)"
    assert spec.is_lepton and spec.generation == 1 and spec.isospin_m == 0


def test_up_expression():
    spec, expr = fermion_spec("u")
    assert expr == "-sigma.(-j(p_a - 1) + i p_b + k p_c)"
    assert not spec.is_lepton and spec.isospin_m == 1


def test_positron_flips_sigma():
    spec, expr = fermion_spec("ebar")
    assert expr == "sigma.(-j p_a + k p_a)"
    assert spec.sigma_z == 1


def test_generation_markers():
    assert fermion_spec("s")[1] == "-sigma.(-j p_a + i p_b - z_P k p_c)"
    assert fermion_spec("b")[1] == "-sigma.(-j p_a + i p_b - z_T k p_c)"
    assert fermion_spec("mu")[1] == "-sigma.(-j p_a - z_P k p_a)"


def test_generation_determined_by_g_and_tag():
    for flavour, gen in (("u", 1), ("c", 2), ("t", 3), ("nu_mu", 2), ("tau", 3)):
        spec, _ = fermion_spec(flavour)
        assert spec.generation == gen


def test_lepton_requires_equal_axes():
    with pytest.raises(ValueError):
        fermion_spec("e", ("x", "y", "y"))
    with pytest.raises(ValueError):
        fermion_spec("u", ("x", "y", "y"))


def test_unknown_flavour():
    with pytest.raises(ValueError):
        fermion_spec("w")


# --- tables -------------------------------------------------------------------


def test_table_a_u_electric_row():
    row = TABLES["A"].rows[("u", "e")]
    assert row.sign == "+"
    assert [str(e) for e in row.entries] == ["1j", "1j", "0i"]


def test_table_l_electron_row():
    row = TABLES["L"].rows[("e", "e")]
    assert row.sign == "-"
    assert [str(e) for e in row.entries] == ["0i", "0k", "1j"]
    # all of the electron's structure sits on its own column
    for t in CHARGE_TYPES:
        entries = TABLES["L"].rows[("e", t)].entries
        assert all(e.is_zero for e in entries[:2])


def test_higher_generations_carry_z_markers():
    assert str(TABLES["A"].entry("c", "w", "B")) == "z_Pk"
    assert str(TABLES["B"].entry("t", "w", "B")) == "z_Tk"
    assert TABLES["A"].rows[("c", "w")].sign == "-"


def test_one_distinguished_entry_per_row():
    """Quark rows hold one nonzero (empty background) or one zero (filled)."""
    for rep in ("A", "B", "C"):
        for flavour in QUARKS:
            for t in CHARGE_TYPES:
                values = [e.is_zero for e in TABLES[rep].rows[(flavour, t)].entries]
                n_zero = sum(values)
                if t == "e" and flavour in ("u", "c", "t"):
                    assert n_zero == 1  # filled background, one hole
                else:
                    assert n_zero == 2  # one unit against empty background


def test_regeneration_idempotent():
    again = build_tables()
    for rep, table in TABLES.items():
        assert table == again[rep]


def test_generated_tables_match_shipped_csv():
    shipped = load_shipped_tables_csv()
    assert tables_to_csv(TABLES) == shipped


def test_generation_rows_depend_only_on_base_and_marker():
    """Second/third generation rows equal the first-generation base with the
    weak unit replaced by its violation marker."""
    for rep in ("A", "B", "C"):
        for heavy, base in (("c", "u"), ("s", "d"), ("t", "u"), ("b", "d")):
            for t in ("e", "s"):
                assert TABLES[rep].rows[(heavy, t)].entries == TABLES[rep].rows[(base, t)].entries
            heavy_w = TABLES[rep].rows[(heavy, "w")].entries
            base_w = TABLES[rep].rows[(base, "w")].entries
            assert [e.label for e in heavy_w] == [e.label for e in base_w]
            assert [e.is_zero for e in heavy_w] == [e.is_zero for e in base_w]


# --- zero counting -------------------------------------------------------------


@pytest.mark.parametrize("rep", ["A", "B", "C"])
@pytest.mark.parametrize("combos,expected", [
    (("ddd", "udd", "uud", "uuu"), (20, 22, 24)),
    (("dds", "uds", "uus"), (15, 17, 19)),
    (("dss", "uss"), (11, 13)),
    (("sss",), (6,)),
    (("udd", "uud"), (9, 11, 13)),
    (("uds",), (5, 7)),
])
def test_baryon_multiplet_zero_candidates(rep, combos, expected):
    assert multiplet_zero_candidates(list(combos), rep, TABLES) == expected


def test_omega_ground_value():
    assert state_zero_candidates("sss", "A", TABLES) == (6,)


def test_z_entries_count_as_nonzero():
    # s-quark counts equal d-quark counts: z_P sits where d has its unit
    for rep in ("A", "B", "C"):
        assert (TABLES[rep].zeros_per_colour("s") == TABLES[rep].zeros_per_colour("d"))


def test_pi_candidates_include_ground_two():
    cands = multiplet_zero_candidates(["u,dbar", "d,ubar"], "A", TABLES)
    assert 2 in cands and min(cands) == 2


def test_empty_state_set():
    assert multiplet_zero_candidates([], "A", TABLES) == (0,)


def test_count_zeros_shape():
    out = count_zeros(["uud", "u,dbar"], ("A", "B"), TABLES)
    assert set(out) == {"A", "B"}
    assert set(out["A"]) == {"uud", "u,dbar"}


def test_count_zeros_rejects_lepton_table():
    with pytest.raises(ValueError):
        count_zeros(["uud"], ("L",), TABLES)


def test_invalid_combo():
    with pytest.raises(ValueError):
        state_zero_candidates("ud", "A", TABLES)
    with pytest.raises(ValueError):
        state_zero_candidates("u,d", "A", TABLES)


# --- weak charge classes --------------------------------------------------------


def test_baryon_weak_charge():
    assert composite_weak_charge("uud").kind == "w"


def test_same_generation_meson():
    assert composite_weak_charge("u,ubar").kind == "0"
    assert composite_weak_charge("u,dbar").kind == "0"


def test_cross_generation_meson():
    res = composite_weak_charge("u,sbar")
    assert res.kind == "alternatives"
    assert res.alternatives == ("0", "+(1 + z_P)w", "-(1 + z_P)w")
    res13 = composite_weak_charge("u,bbar")
    assert "z_T" in res13.alternatives[1]
    res23 = composite_weak_charge("s,bbar")
    assert "z_P" in res23.alternatives[1] and "z_T" in res23.alternatives[1]


def test_weak_classification_total():
    for combo in itertools.combinations_with_replacement(QUARKS, 3):
        assert composite_weak_charge(combo).kind == "w"
    for q, qb in itertools.product(QUARKS, QUARKS):
        res = composite_weak_charge((q, qb + "bar"))
        assert res.kind in ("0", "alternatives")


# --- SU(5) grid ------------------------------------------------------------------


def test_su5_grid_counts():
    assert su5_grid().generator_count == 24
    assert su5_grid(extended=True).generator_count == 25


def test_su5_grid_cells():
    g = su5_grid()
    assert g.cell("s_B", "wbar") == "Y"
    assert g.cell("w", "ebar") == "W-"
    assert g.cell("e", "wbar") == "W+"
    assert g.cell("s_G", "s_Rbar") == "Gluons"
    assert g.cell("w", "wbar") == "Z0/gamma"
    assert g.cell("e", "s_Gbar") == "X"


# --- charge Dirac equation --------------------------------------------------------


@pytest.mark.parametrize("w", [-1, 0, 1])
@pytest.mark.parametrize("s", [-1, 0, 1])
def test_charge_dirac_rows(w, s):
    for e in (0, 1):
        rows = charge_dirac(w, s, e)
        assert rows == [Fraction(-w * w + s * s)] * 4


def test_charge_dirac_e_independence():
    for e in (0, 1, 2, Fraction(1, 3)):
        assert charge_dirac(1, 0, e) == charge_dirac(1, 0, 0)


def test_charge_dirac_null_when_unit():
    assert charge_dirac(1, 1, 1) == [0, 0, 0, 0]
    assert charge_dirac(-1, -1, 1) == [0, 0, 0, 0]
