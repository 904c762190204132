"""Factorization battery tests."""

import pytest

from trigpoly.combinatorics import divisors, totient
from trigpoly.factor import (
    ConjectureViolation,
    build_factor_table,
    extract_psi,
    format_table,
    golden_fixed_points,
    pyramidal_column_report,
    run_conjecture_battery,
)
from trigpoly.poly import Poly
from trigpoly.rings import GoldenInt


def P(*coeffs):
    return Poly(coeffs)


# printed factor table, with the two exponent misprints corrected
# (Phi_16: 20x^2 term, psi_17: 119x^6 term); the reconstruction oracle
# below confirms the corrected readings
PSI_TABLE = {
    3: P(3, -1),
    4: P(2, -1),
    5: P(5, -5, 1),
    6: P(1, -1),
    7: P(7, -14, 7, -1),
    8: P(2, -4, 1),
    9: P(3, -9, 6, -1),
    10: P(1, -3, 1),
    11: P(11, -55, 77, -44, 11, -1),
    12: P(1, -4, 1),
    13: P(13, -91, 182, -156, 65, -13, 1),
    14: P(1, -6, 5, -1),
    15: P(1, -8, 14, -7, 1),
    16: P(2, -16, 20, -8, 1),
    17: P(17, -204, 714, -1122, 935, -442, 119, -17, 1),
}


@pytest.fixture(scope="module")
def table():
    return extract_psi(build_factor_table(60))


def test_first_factors(table):
    assert table.phi[1] == P(0, 1)
    assert table.phi[2] == P(4, -1)
    assert table.phi[6] == P(1, -1) * P(1, -1)
    assert table.phi[12] == P(1, -4, 1) * P(1, -4, 1)


def test_psi_examples(table):
    assert table.psi[5] == P(5, -5, 1)
    assert table.psi[9] == P(3, -9, 6, -1)
    assert table.psi[14] == P(1, -6, 5, -1)


def test_printed_table_with_corrections(table):
    for d, psi in PSI_TABLE.items():
        assert table.psi[d] == psi, f"psi_{d}"
        assert table.phi[d] == psi * psi, f"phi_{d}"


def test_reconstruction(table):
    for n in range(1, table.max_n + 1):
        product = P(1)
        for d in divisors(n):
            product = product * table.phi[d]
        assert product == table.zpread[n]


def test_degree_law(table):
    for d in range(1, table.max_n + 1):
        assert table.phi[d].degree() == totient(d)


def test_battery(table):
    battery = run_conjecture_battery(table)
    assert battery.ok, battery.report.failures[:5]
    assert any("not tested" in note for note in battery.notes)
    assert any("2-x" in note for note in battery.notes)


def test_reflection_examples(table):
    reflect = P(4, -1)
    assert table.phi[3].compose(reflect) == table.phi[6]
    assert table.phi[5].compose(reflect) == table.phi[10]
    assert table.phi[7].compose(reflect) == table.phi[14]
    # the printed 2 - x variant fails on its own table at p = 3
    assert table.phi[6].compose(P(2, -1)) != table.phi[3]


def test_psi_prime_sign(table):
    assert table.psi[11](1) == -1
    assert table.psi[5](1) == 1
    assert table.psi[13](1) == 1


def test_golden_fixed_points_small():
    report = golden_fixed_points(50)
    assert report.ok, report.failures[:5]


def test_golden_fixed_point_examples():
    # polynomial evaluation agrees with the recursion evaluation
    from trigpoly.spread import zpread_family

    fam = zpread_family(20)
    v = GoldenInt(2, 1)
    assert fam[2](v) == GoldenInt(3, -1)
    assert fam[5](v) == GoldenInt(0, 0)
    assert fam[3](2) == 2
    for n in range(21):
        want = fam[n](v)
        got = _recursion_value(n, v)
        assert got == want


def _recursion_value(n, v):
    a, b = GoldenInt(0), v
    if n == 0:
        return GoldenInt(0)
    for _ in range(n - 1):
        a, b = b, (2 - v) * b - a + 2 * v
    return b


def test_violation_on_corrupted_input(monkeypatch):
    import trigpoly.factor as fa

    original = fa.zpread_family

    def corrupted(n_max):
        fam = list(original(n_max))
        bad = list(fam[2].coeffs)
        bad[0] += 1  # Z_2 no longer divisible by Phi_1 = x
        fam[2] = Poly(bad)
        return fam

    monkeypatch.setattr(fa, "zpread_family", corrupted)
    with pytest.raises(ConjectureViolation) as info:
        fa.build_factor_table(3)
    assert info.value.n == 2


def test_sqrt_violation_on_corrupted_table(table):
    import trigpoly.factor as fa

    broken = fa.FactorTable(3, {1: table.phi[1], 2: table.phi[2],
                                3: P(1, 1, 1)}, zpread=table.zpread[:4])
    with pytest.raises(ConjectureViolation):
        fa.extract_psi(broken)


def test_reports_render(table):
    text = format_table(table)
    assert "Phi_1 = x" in text
    assert "Phi_5 = 25 - 50x + 35x^2 - 10x^3 + x^4  (= (5 - 5x + x^2)^2)" in text
    report = pyramidal_column_report(table)
    assert "d=17" in report
    assert "no assertions" in report
