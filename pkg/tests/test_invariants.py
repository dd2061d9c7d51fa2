from fractions import Fraction

import pytest

from codelattice.codes import extended_hamming_code, parity_check_code, reed_muller_code
from codelattice.exact import Radical
from codelattice.invariants import (
    BERGE_MARTINET,
    RANKIN,
    BoundInterval,
    InconsistentBounds,
    asymptotic_bounds,
    berge_martinet_invariant,
    known_fact,
    known_fact_seeds,
    known_facts,
    propagate_bounds,
    rankin_invariant,
    standard_seeds,
)
from codelattice.lattices import construction_a
from codelattice.sublattice_search import minimal_sublattice


def _gamma_of(code, l):
    lat = construction_a(code)
    cert = minimal_sublattice(lat, l, upper_hint=code.q ** (2 * l))
    return rankin_invariant(lat, cert)


def test_known_facts_table():
    assert known_fact(RANKIN, 6, 2).value == Radical(9, 3)
    assert known_fact(RANKIN, 2, 1).value == Radical(Fraction(4, 3), 2)
    assert known_fact(RANKIN, 5, 2) is None
    assert len(known_facts()) == 24


def test_rankin_examples():
    assert _gamma_of(parity_check_code(3, 2), 1) == Radical(2, 3)
    assert _gamma_of(parity_check_code(4, 2), 2) == Radical(Fraction(3, 2))
    assert _gamma_of(reed_muller_code(1, 3), 2) == Radical(3)


def test_construction_reproduces_marked_facts():
    # every exactly known cell that has a code construction is hit exactly
    marked = [
        (RANKIN, 3, 1, parity_check_code(3, 2), 1),
        (RANKIN, 4, 1, parity_check_code(4, 2), 1),
        (RANKIN, 4, 2, parity_check_code(4, 2), 2),
        (RANKIN, 5, 1, parity_check_code(5, 2), 1),
        (RANKIN, 8, 1, reed_muller_code(1, 3), 1),
        (RANKIN, 8, 2, reed_muller_code(1, 3), 2),
    ]
    for kind, n, l, code, rank in marked:
        assert _gamma_of(code, rank) == known_fact(kind, n, l).value
    marked_prime = [
        (BERGE_MARTINET, 3, 1, parity_check_code(3, 2), 1),
        (BERGE_MARTINET, 4, 1, parity_check_code(4, 2), 1),
        (BERGE_MARTINET, 4, 2, parity_check_code(4, 2), 2),
        (BERGE_MARTINET, 5, 1, parity_check_code(5, 2), 1),
        (BERGE_MARTINET, 8, 1, reed_muller_code(1, 3), 1),
        (BERGE_MARTINET, 8, 2, reed_muller_code(1, 3), 2),
    ]
    for kind, n, l, code, rank in marked_prime:
        assert berge_martinet_invariant(code, rank) == known_fact(kind, n, l).value


def test_berge_martinet_examples():
    assert berge_martinet_invariant(parity_check_code(3, 2), 1) == Radical(Fraction(3, 2), 2)
    assert berge_martinet_invariant(extended_hamming_code(), 2) == Radical(3)
    assert berge_martinet_invariant(parity_check_code(4, 2), 2) == Radical(Fraction(3, 2))


def test_self_dual_paths_agree():
    for code in (extended_hamming_code(), reed_muller_code(1, 3)):
        for l in (1, 2):
            short = berge_martinet_invariant(code, l, shortcut=True)
            generic = berge_martinet_invariant(code, l, shortcut=False)
            assert short == generic
            assert short.is_rational()
    with pytest.raises(ValueError):
        berge_martinet_invariant(parity_check_code(3, 2), 1, shortcut=True)


def test_rankin_certificate_validation():
    lat = construction_a(parity_check_code(4, 2))
    other = construction_a(parity_check_code(5, 2))
    cert = minimal_sublattice(other, 1)
    with pytest.raises(ValueError):
        rankin_invariant(lat, cert)


def test_propagation_published_targets():
    res = propagate_bounds(7, standard_seeds(7))
    assert not res.cap_hit

    c = res.cell(RANKIN, 5, 2)
    assert c.lower == Radical(Fraction(243, 16), 5)
    assert c.upper == Radical(2)
    assert any("rule (7)" in p for p in c.provenance)
    assert c.lower.to_decimal(4) == "1.723"

    c = res.cell(RANKIN, 7, 2)
    assert c.lower == Radical(Fraction(2187, 16), 7)
    assert c.upper == Radical(32, 3)
    assert any("rule (7)" in p for p in c.provenance)
    assert c.lower.to_decimal(5) == "2.0189"
    assert c.upper.to_decimal(5) == "3.1748"

    c = res.cell(BERGE_MARTINET, 5, 2)
    assert c.lower == Radical(3, 2)
    assert c.upper == Radical(2)
    assert any("rule (5)" in p for p in c.provenance)
    assert c.lower.to_decimal(5) == "1.7321"

    c = res.cell(BERGE_MARTINET, 7, 2)
    assert c.lower == Radical(3, 2)
    assert c.upper == Radical(Fraction(8, 3))
    assert any("rule (5)" in p for p in c.provenance)
    assert c.upper.to_decimal(5) == "2.6667"


def test_propagation_monotone_and_consistent():
    res = propagate_bounds(8, standard_seeds(8))
    for (kind, n, l), cell in res.cells.items():
        if cell.upper is not None:
            assert cell.lower <= cell.upper
        # duality symmetry holds at the fixed point
        mirror = res.cell(kind, n, n - l)
        assert mirror.lower == cell.lower
        assert mirror.upper == cell.upper
    # rule (2): the prime upper never exceeds the plain upper
    for (kind, n, l), cell in res.cells.items():
        if kind == BERGE_MARTINET and cell.upper is not None:
            plain = res.cell(RANKIN, n, l)
            if plain.upper is not None:
                assert cell.upper <= plain.upper


def test_exact_cells_stay_exact():
    res = propagate_bounds(8, standard_seeds(8))
    for fact in known_facts():
        if fact.n <= 8:
            cell = res.cell(fact.kind, fact.n, fact.l)
            assert cell.lower == fact.value
            assert cell.upper == fact.value


def test_full_profile_tightens():
    res = propagate_bounds(7, standard_seeds(7), rules="full")
    c52 = res.cell(RANKIN, 5, 2)
    # rule (2) lower raises to sqrt(3); rule (4) with h=4 drops the upper
    assert c52.lower == Radical(3, 2)
    assert c52.upper < Radical(2)
    assert c52.lower <= c52.upper
    c72 = res.cell(RANKIN, 7, 2)
    assert c72.upper < Radical(32, 3)


def test_inconsistent_seeds_raise():
    bad = known_fact_seeds(5) + [
        BoundInterval(RANKIN, 4, 2, lower=Radical(7), provenance=["bogus seed"])
    ]
    with pytest.raises(InconsistentBounds) as err:
        propagate_bounds(5, bad)
    assert "bogus seed" in str(err.value) or "known value" in str(err.value)


def test_unknown_rule_profile():
    with pytest.raises(ValueError):
        propagate_bounds(5, [], rules="nonsense")


def test_sweep_cap_reported():
    res = propagate_bounds(7, standard_seeds(7), max_sweeps=1)
    assert res.sweeps == 1
    assert res.cap_hit
    full = propagate_bounds(7, standard_seeds(7))
    assert not full.cap_hit
    assert full.sweeps > 1


def test_asymptotic_bounds():
    b2 = asymptotic_bounds(2)
    assert b2.lower.startswith("0.16666")
    assert b2.lower_rule == "(k/12)^(k/2)"
    b4 = asymptotic_bounds(4)
    assert float(b4.lower) <= 4 <= float(b4.upper)
    b5 = asymptotic_bounds(5, digits=8)
    assert float(b5.lower) <= float(b5.upper)
    with pytest.raises(ValueError):
        asymptotic_bounds(1)


def test_asymptotic_outward_rounding():
    # 1/6 rounded down at 6 digits must end in ...66, never ...67
    assert asymptotic_bounds(2, digits=6).lower == "0.166666"
