import random
from math import isqrt

import pytest

from codelattice.codes import LinearCode, parity_check_code, reed_muller_code
from codelattice.enumeration import (
    EnumerationCap,
    NotPositiveDefinite,
    lattice_minimum,
    short_vectors,
)
from codelattice.lattices import IntegralLattice, construction_a


def _zn(n):
    return IntegralLattice.from_rows([[1 if j == i else 0 for j in range(n)] for i in range(n)])


def _random_code(rng, n_max=6, q_choices=(2, 3, 4)):
    n = rng.randint(2, n_max)
    q = rng.choice(q_choices)
    k = rng.randint(1, n)
    return LinearCode(q, n, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])


def test_unit_vectors():
    sv = short_vectors(_zn(2), 1)
    assert [(v.coords, v.norm) for v in sv.vectors] == [((0, 1), 1), ((1, 0), 1)]


def test_z2_bound_4():
    sv = short_vectors(_zn(2), 4)
    assert [v.coords for v in sv.vectors] == [
        (0, 1),
        (1, 0),
        (1, -1),
        (1, 1),
        (0, 2),
        (2, 0),
    ]


def test_d4_kissing():
    lat = construction_a(parity_check_code(4, 2))
    sv = short_vectors(lat, 2)
    assert len(sv.vectors) == 12
    assert all(v.norm == 2 for v in sv.vectors)


def test_e8_kissing():
    lat = construction_a(reed_muller_code(1, 3))
    sv = short_vectors(lat, 4)
    assert len(sv.vectors) == 120
    assert all(v.norm == 4 for v in sv.vectors)


def test_minimum_examples():
    for n in (2, 3, 5):
        assert lattice_minimum(_zn(n))[0] == 1
    for q in (2, 3, 4):
        for n in (3, 4, 5):
            assert lattice_minimum(construction_a(parity_check_code(n, q)))[0] == 2
    norm, witness = lattice_minimum(construction_a(reed_muller_code(1, 3)))
    assert norm == 4
    assert sum(e * e for e in witness) == 4


def test_minimum_oracle_random_codes():
    from codelattice.codes import weight_report

    rng = random.Random(31)
    for _ in range(80):
        code = _random_code(rng)
        try:
            de = weight_report(code).d_euclidean
        except ValueError:
            de = None
        expect = code.q ** 2 if de is None else min(code.q ** 2, de)
        assert lattice_minimum(construction_a(code))[0] == expect


def test_box_completeness_oracle():
    # Independent oracle: scan the integer box |v_i| <= isqrt(B) and keep
    # lattice members (membership solved against the HNF basis, not the
    # enumeration machinery); the enumeration must produce exactly the
    # sign-canonical members.
    rng = random.Random(32)
    for _ in range(25):
        code = _random_code(rng, n_max=4, q_choices=(2, 3))
        lat = construction_a(code)
        bound = rng.choice((3, 4, 6))
        got = {v.coords for v in short_vectors(lat, bound).vectors}
        expect = set()
        r = isqrt(bound)
        span = range(-r, r + 1)
        n = lat.n

        def scan(prefix):
            if len(prefix) == n:
                norm = sum(e * e for e in prefix)
                if 0 < norm <= bound and lat.coefficients_of(list(prefix)) is not None:
                    v = list(prefix)
                    for e in v:
                        if e:
                            if e < 0:
                                v = [-c for c in v]
                            break
                    expect.add(tuple(v))
                return
            for x in span:
                scan(prefix + (x,))

        scan(())
        assert got == expect


def test_sorted_and_verified():
    lat = construction_a(parity_check_code(5, 3))
    sv = short_vectors(lat, 9)
    norms = [v.norm for v in sv.vectors]
    assert norms == sorted(norms)
    for v in sv.vectors:
        assert sum(e * e for e in v.coords) == v.norm
        first = next(e for e in v.coords if e)
        assert first > 0


def test_doubling_stability():
    rng = random.Random(33)
    for _ in range(20):
        code = _random_code(rng, n_max=5)
        lat = construction_a(code)
        b = rng.choice((2, 3, 5))
        small = short_vectors(lat, b).vectors
        large = short_vectors(lat, 2 * b).vectors
        assert large[: len(small)] == small
        assert {v for v in small} <= set(large)


def test_cap_exceeded():
    lat = _zn(6)
    with pytest.raises(EnumerationCap) as err:
        short_vectors(lat, 16, cap=10)
    assert err.value.count > 10


def test_bad_bound():
    with pytest.raises(ValueError):
        short_vectors(_zn(2), 0)


def test_cholesky_rejects_indefinite():
    from codelattice.enumeration import _cholesky

    with pytest.raises(NotPositiveDefinite):
        _cholesky([[1, 2], [2, 1]])
