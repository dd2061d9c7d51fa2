import random
from fractions import Fraction

import pytest

from codelattice.codes import LinearCode, full_code, parity_check_code, reed_muller_code
from codelattice.exact import Radical
from codelattice.lattices import (
    IntegralLattice,
    NotInLattice,
    RankDeficient,
    construction_a,
    det_int,
    gamma_ratio,
    hnf,
    is_even,
    lattice_document,
    dump_lattice,
    sublattice_from_rows,
)


def _random_code(rng, n_max=6, q_max=5):
    n = rng.randint(2, n_max)
    q = rng.randint(2, q_max)
    k = rng.randint(1, n)
    return LinearCode(q, n, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])


def test_hnf_examples():
    ident = [[1, 0], [0, 1]]
    assert hnf(ident) == ([[1, 0], [0, 1]], 2)
    stack = [[1, 0, 1], [0, 1, 1], [2, 0, 0], [0, 2, 0], [0, 0, 2]]
    assert hnf(stack) == ([[1, 0, 1], [0, 1, 1], [0, 0, 2]], 3)
    assert hnf([[2, 0], [0, 2], [1, 1]]) == ([[1, 1], [0, 2]], 2)


def test_hnf_canonical_reduction():
    rows, rank = hnf([[4, 7], [0, 5]])
    assert rank == 2
    # entries above each pivot lie in [0, pivot)
    for j in range(2):
        for i in range(j):
            assert 0 <= rows[i][j] < rows[j][j]


def test_rank_deficient():
    with pytest.raises(RankDeficient):
        IntegralLattice.from_rows([[1, 2], [2, 4]])


def test_construction_a_dets():
    assert construction_a(full_code(4, 3)).det_gram == 1
    for q in (2, 3, 5):
        assert construction_a(parity_check_code(4, q)).det_gram == q * q
    assert construction_a(reed_muller_code(1, 3)).det_gram == 256


def test_det_formula_random():
    rng = random.Random(5)
    for _ in range(200):
        code = _random_code(rng)
        count = len(code.codewords())
        lat = construction_a(code)
        assert lat.det_gram == Fraction(code.q ** code.n, count) ** 2


def test_q_zn_contained():
    rng = random.Random(6)
    for _ in range(50):
        code = _random_code(rng, n_max=5, q_max=4)
        lat = construction_a(code)
        for i in range(code.n):
            e = [code.q if j == i else 0 for j in range(code.n)]
            assert e in lat


def test_parity_check_is_dn():
    for n in range(3, 7):
        lat = construction_a(parity_check_code(n, 2))
        stack = [
            [1 if j == i else (1 if j == n - 1 else 0) for j in range(n)]
            for i in range(n - 1)
        ]
        stack.append([0] * (n - 1) + [2])
        assert lat == IntegralLattice.from_rows(stack)


def test_is_even():
    assert is_even(construction_a(parity_check_code(4, 2)))
    assert not is_even(IntegralLattice.from_rows([[1, 0], [0, 1]]))
    assert is_even(construction_a(reed_muller_code(1, 3)))


def test_sublattice_examples():
    for n in (4, 5, 6):
        lat = construction_a(parity_check_code(n, 2))
        rows = [
            [1, 1] + [0] * (n - 2),
            [1] + [0] * (n - 2) + [1],
        ]
        sub = sublattice_from_rows(lat, rows)
        assert sub.det_l == 3
        one = sublattice_from_rows(lat, [rows[0]])
        assert one.det_l == 2
    lat8 = construction_a(reed_muller_code(1, 3))
    rows = [[0, 1, 0, 1, 0, 1, 0, 1], [0, 0, 1, 1, 0, 0, 1, 1]]
    sub = sublattice_from_rows(lat8, rows)
    assert sub.gram_l == ((4, 2), (2, 4))
    assert sub.det_l == 12


def test_sublattice_errors():
    lat = construction_a(parity_check_code(3, 2))
    with pytest.raises(NotInLattice):
        sublattice_from_rows(lat, [[1, 0, 0]])
    with pytest.raises(RankDeficient):
        sublattice_from_rows(lat, [[1, 1, 0], [2, 2, 0]])


def test_gamma_ratio_examples():
    from codelattice.codes import reed_muller_generators

    lat8 = construction_a(reed_muller_code(1, 3))
    rows = reed_muller_generators(1, 3)
    sub4 = sublattice_from_rows(lat8, rows)
    assert gamma_ratio(lat8, sub4) == Radical(4)

    lat16 = construction_a(reed_muller_code(1, 4))
    rows2z = [[2] + [0] * 15, [0, 2] + [0] * 14]
    sub = sublattice_from_rows(lat16, rows2z)
    # 16 / (2^22)^(1/8) = 2^(5/4) by the defining determinant quotient
    assert gamma_ratio(lat16, sub) == Radical(2) ** Fraction(5, 4)

    whole = sublattice_from_rows(lat8, lat8.basis)
    assert gamma_ratio(lat8, whole) == Radical(1)


def test_scaling_covariance():
    rng = random.Random(9)
    for s in (2, 3):
        code = parity_check_code(4, 2)
        lat = construction_a(code)
        scaled = lat.scaled(s)
        assert scaled.det_gram == lat.det_gram * s ** (2 * lat.n)
        rows = [[1, 1, 0, 0], [1, 0, 0, 1]]
        sub = sublattice_from_rows(lat, rows)
        ssub = sublattice_from_rows(scaled, [[s * e for e in r] for r in rows])
        assert ssub.det_l == sub.det_l * s ** (2 * sub.l)
        assert gamma_ratio(lat, sub) == gamma_ratio(scaled, ssub)


def test_duality_round_trip():
    from codelattice.codes import dual_code
    from codelattice.lattices import inverse_times

    rng = random.Random(10)
    for _ in range(40):
        code = _random_code(rng, n_max=5, q_max=4)
        lat = construction_a(code)
        q, n = code.q, code.n
        scaled_inv = inverse_times([list(r) for r in lat.basis], q)
        dual_rows = [[scaled_inv[i][j] for i in range(n)] for j in range(n)]
        h, rank = hnf(dual_rows)
        assert rank == n
        assert tuple(tuple(r) for r in h) == construction_a(dual_code(code)).basis


def test_membership_solver():
    lat = construction_a(parity_check_code(4, 3))
    v = [1, 0, 0, 0]
    assert lat.coefficients_of(v) is None
    w = [1, 1, 0, 2]
    coeffs = lat.coefficients_of(w)
    assert coeffs is not None
    rebuilt = [0, 0, 0, 0]
    for c, row in zip(coeffs, lat.basis):
        rebuilt = [a + c * b for a, b in zip(rebuilt, row)]
    assert rebuilt == w


def test_document_canonical():
    lat = construction_a(parity_check_code(3, 2))
    doc = lattice_document(lat)
    assert doc["det_gram"] == 4
    assert dump_lattice(lat) == dump_lattice(IntegralLattice(lat.basis))


def test_det_int_matches_diagonal_square():
    rng = random.Random(12)
    for _ in range(50):
        code = _random_code(rng, n_max=5, q_max=4)
        lat = construction_a(code)
        assert det_int([list(r) for r in lat.gram]) == lat.det_gram
