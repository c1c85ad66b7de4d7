import pytest

from gravstark.masses import CompositeMasses
from gravstark.parabolic import (
    ParabolicLevel,
    enumerate_levels,
    evaluate_levels,
    first_order_shift,
    splitting_table,
    unperturbed_energy,
)
from gravstark.separation import FieldSpec


def test_n1_single_state():
    levels = enumerate_levels(1)
    assert len(levels) == 1
    only = levels[0]
    assert (only.n1, only.n2, only.m, only.k) == (0, 0, 0, 0)


def test_n2_states():
    levels = enumerate_levels(2)
    quadruples = {(lv.n1, lv.n2, lv.m) for lv in levels}
    assert quadruples == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1)}
    assert sorted(lv.k for lv in levels) == [-1, 0, 0, 1]


def test_n3_states():
    levels = enumerate_levels(3)
    assert len(levels) == 9
    assert sorted(set(lv.k for lv in levels)) == [-2, -1, 0, 1, 2]
    # exhaustive: every (n1, n2, |m|) composition of n - 1 = 2
    assert all(lv.n1 + lv.n2 + abs(lv.m) == 2 for lv in levels)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13])
def test_degeneracy_count(n):
    levels = enumerate_levels(n)
    assert len(levels) == n * n
    assert len({(lv.n1, lv.n2, lv.m) for lv in levels}) == n * n


def test_descending_k_order():
    ks = [lv.k for lv in enumerate_levels(4)]
    assert ks == sorted(ks, reverse=True)


def test_out_of_range_rejected():
    for bad in (0, -1, 51):
        with pytest.raises(ValueError):
            enumerate_levels(bad)


def test_quantum_number_constraint_enforced():
    with pytest.raises(ValueError):
        ParabolicLevel(n=2, n1=1, n2=1, m=0, k=0)
    with pytest.raises(ValueError):
        ParabolicLevel(n=2, n1=1, n2=0, m=0, k=-1)


def _synthetic_composites(asymmetry=1.0e-30):
    # directly constructed composites give exact linearity checks
    return CompositeMasses(
        total_mass=1.674e-27,
        reduced_mass=9.1e-31,
        grav_total_mass=1.674e-27,
        mass_asymmetry=asymmetry,
    )


def test_shift_zero_cases(consts, terrestrial_field):
    comp = _synthetic_composites(asymmetry=0.0)
    level = enumerate_levels(2)[0]
    assert first_order_shift(level, comp, terrestrial_field, consts) == 0.0
    comp2 = _synthetic_composites()
    center = [lv for lv in enumerate_levels(2) if lv.k == 0][0]
    assert first_order_shift(center, comp2, terrestrial_field, consts) == 0.0
    assert first_order_shift(level, comp2, FieldSpec(magnitude=0.0), consts) == 0.0


def test_shift_ratio_linear_in_nk(consts, terrestrial_field):
    comp = _synthetic_composites()
    lv22 = [lv for lv in enumerate_levels(2) if lv.k == 1][0]
    lv32 = [lv for lv in enumerate_levels(3) if lv.k == 2][0]
    a = first_order_shift(lv22, comp, terrestrial_field, consts)
    b = first_order_shift(lv32, comp, terrestrial_field, consts)
    assert a / b == pytest.approx((2.0 * 1.0) / (3.0 * 2.0), rel=1e-14)


def test_shift_reduces_to_force_times_bohr(consts):
    # n = 2, k = 1 with asymmetry equal to the reduced mass: the shift is
    # -3 F a with F the internal force and a the reduced-mass Bohr radius;
    # cross-checked against dense diagonalization in the oracle tests.
    comp = CompositeMasses(
        total_mass=1.674e-27,
        reduced_mass=9.1e-31,
        grav_total_mass=1.674e-27,
        mass_asymmetry=9.1e-31,
    )
    field = FieldSpec(magnitude=9.8)
    level = [lv for lv in enumerate_levels(2) if lv.k == 1][0]
    shift = first_order_shift(level, comp, field, consts)
    force = comp.mass_asymmetry * field.magnitude
    bohr = consts.hbar / (comp.reduced_mass * consts.c * consts.alpha)
    assert shift == pytest.approx(-3.0 * force * bohr, rel=1e-14)


def test_shift_antisymmetry(consts, terrestrial_field):
    comp = _synthetic_composites()
    for n in (2, 3, 4):
        levels = enumerate_levels(n)
        by_k = {lv.k: first_order_shift(lv, comp, terrestrial_field, consts) for lv in levels}
        for k in range(1, n):
            assert by_k[k] == pytest.approx(-by_k[-k], rel=1e-14)


def test_unperturbed_energy_bohr_formula(consts):
    comp = _synthetic_composites()
    e1 = unperturbed_energy(1, comp, consts)
    assert e1 == pytest.approx(
        -comp.reduced_mass * consts.c**2 * consts.alpha**2 / 2.0, rel=1e-14
    )
    assert unperturbed_energy(2, comp, consts) == pytest.approx(e1 / 4.0, rel=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_table_structure(n, consts, terrestrial_field):
    comp = _synthetic_composites()
    table = splitting_table(n, comp, terrestrial_field, consts)
    assert len(table.sublevels) == 2 * n - 1
    assert sum(sub.multiplicity for sub in table.sublevels) == n * n
    # multiplicities agree with exhaustive enumeration
    levels = enumerate_levels(n)
    for sub in table.sublevels:
        assert sub.multiplicity == sum(1 for lv in levels if lv.k == sub.k)
    # uniform spacing in the shifts
    if n > 1:
        gaps = [
            table.sublevels[i].shift - table.sublevels[i + 1].shift
            for i in range(len(table.sublevels) - 1)
        ]
        for gap in gaps:
            assert abs(abs(gap) - table.spacing) <= 1e-12 * table.spacing


def test_n2_multiplicities(consts, terrestrial_field):
    table = splitting_table(2, _synthetic_composites(), terrestrial_field, consts)
    assert [sub.multiplicity for sub in table.sublevels] == [1, 2, 1]


def test_n1_spacing_reported_zero(consts, terrestrial_field):
    table = splitting_table(1, _synthetic_composites(), terrestrial_field, consts)
    assert len(table.sublevels) == 1
    assert table.spacing == 0.0


def test_doubling_field_doubles_spacing(consts):
    comp = _synthetic_composites()
    one = splitting_table(3, comp, FieldSpec(magnitude=9.8), consts)
    two = splitting_table(3, comp, FieldSpec(magnitude=19.6), consts)
    assert two.spacing == pytest.approx(2.0 * one.spacing, rel=1e-14)


def test_sign_coherence(consts, terrestrial_field):
    # positive asymmetry times field: energy strictly decreasing in k
    comp = _synthetic_composites(asymmetry=2.0e-30)
    table = splitting_table(3, comp, terrestrial_field, consts)
    shifts_by_k = {sub.k: sub.shift for sub in table.sublevels}
    ordered = [shifts_by_k[k] for k in sorted(shifts_by_k)]
    assert all(a > b for a, b in zip(ordered, ordered[1:]))


def test_evaluated_levels_fill_energies(consts, terrestrial_field):
    comp = _synthetic_composites()
    levels = evaluate_levels(2, comp, terrestrial_field, consts)
    assert all(lv.energy_unperturbed is not None and lv.shift is not None for lv in levels)
    e0 = unperturbed_energy(2, comp, consts)
    assert all(lv.energy_unperturbed == e0 for lv in levels)


def test_table_shifts_match_per_state_shifts(consts, terrestrial_field):
    comp = _synthetic_composites()
    for n in (2, 4):
        table = splitting_table(n, comp, terrestrial_field, consts)
        by_k = {sub.k: sub.shift for sub in table.sublevels}
        for level in enumerate_levels(n):
            assert first_order_shift(level, comp, terrestrial_field, consts) == by_k[level.k]
