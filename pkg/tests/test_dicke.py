import math

import numpy as np
import pytest

from conftest import naive_coherent_dicke

from spincat import (
    DickeState,
    binomials,
    check_atom_count,
    coherent_overlap,
    coherent_state,
    norm,
    overlap,
)

PI = math.pi


def test_atom_count_validation():
    assert check_atom_count(1) == 1
    with pytest.raises(ValueError):
        check_atom_count(0)
    with pytest.raises(ValueError):
        check_atom_count(-3)
    with pytest.raises(TypeError):
        check_atom_count(2.5)


def test_dicke_state_shape_checked():
    with pytest.raises(ValueError):
        DickeState(2, [1.0, 0.0])  # needs 3 amplitudes


def test_dicke_state_rejects_non_finite_amps():
    with pytest.raises(ValueError, match="finite"):
        DickeState(1, [math.nan, 0.0])
    with pytest.raises(ValueError, match="finite"):
        DickeState(1, [1.0, complex(0.0, math.inf)])


def test_dicke_state_amps_immutable():
    state = coherent_state(3, 1.0, 0.5)
    with pytest.raises(ValueError):
        state.amps[0] = 0.0


def test_binomials_exact_row():
    assert list(binomials(5)) == [1, 5, 10, 10, 5, 1]


def test_coherent_all_ground():
    state = coherent_state(1, 0.0, 0.0)
    np.testing.assert_allclose(state.amps, [1.0, 0.0], atol=1e-12)


def test_coherent_all_excited():
    state = coherent_state(2, PI, 0.0)
    np.testing.assert_allclose(state.amps, [0.0, 0.0, 1.0], atol=1e-12)


def test_coherent_equatorial_n4():
    # oracle-derived: [1/4, i/2, -sqrt(6)/4, -i/2, 1/4]
    state = coherent_state(4, PI / 2, -PI / 2)
    expected = [0.25, 0.5j, -math.sqrt(6) / 4, -0.5j, 0.25]
    np.testing.assert_allclose(state.amps, expected, atol=1e-12)


def test_coherent_matches_product_projection():
    rng = np.random.default_rng(11)
    for n in list(range(1, 13)) + [20]:
        for _ in range(3):
            theta = rng.uniform(0.0, PI)
            phi = rng.uniform(-PI, PI)
            direct = coherent_state(n, theta, phi).amps
            via_oracle = naive_coherent_dicke(n, theta, phi)
            assert np.max(np.abs(direct - via_oracle)) < 1e-12


def test_coherent_outside_canonical_range():
    # theta beyond [0, pi] makes cos(theta/2) negative; evaluated as-is
    for n, theta, phi in [(3, 4.5, 0.7), (5, -1.3, -2.0), (4, 7.0, 1.1)]:
        direct = coherent_state(n, theta, phi).amps
        via_oracle = naive_coherent_dicke(n, theta, phi)
        assert np.max(np.abs(direct - via_oracle)) < 1e-12
        assert abs(np.linalg.norm(direct) - 1.0) < 1e-12


def test_coherent_norm_one():
    rng = np.random.default_rng(12)
    for n in (1, 2, 5, 9, 20):
        for _ in range(10):
            state = coherent_state(n, rng.uniform(-2 * PI, 2 * PI), rng.uniform(-8, 8))
            assert abs(norm(state) - 1.0) < 1e-12


def test_coherent_rejects_non_finite():
    with pytest.raises(ValueError):
        coherent_state(2, math.nan, 0.0)
    with pytest.raises(ValueError):
        coherent_state(2, 0.0, math.inf)


def test_overlap_self_is_one():
    state = coherent_state(5, 1.3, -0.4)
    assert abs(overlap(state, state) - 1.0) < 1e-12


def test_overlap_antipodal_equatorial_is_zero():
    for n in (1, 3, 6):
        a = coherent_state(n, PI / 2, 0.0)
        b = coherent_state(n, PI / 2, PI)
        assert abs(overlap(a, b)) < 1e-12


def test_overlap_derived_value():
    # cross-checked against the product-space oracle: -1/4 + i/4
    value = overlap(
        coherent_state(3, PI / 2, -PI / 2), coherent_state(3, PI / 2, 0.0)
    )
    assert abs(value - (-0.25 + 0.25j)) < 1e-12


def test_overlap_dimension_mismatch():
    with pytest.raises(ValueError, match="size mismatch"):
        overlap(coherent_state(2, 1.0, 0.0), coherent_state(3, 1.0, 0.0))


def test_overlap_conjugate_symmetry():
    rng = np.random.default_rng(13)
    for n in (1, 4, 8):
        a = coherent_state(n, rng.uniform(0, PI), rng.uniform(-PI, PI))
        b = coherent_state(n, rng.uniform(0, PI), rng.uniform(-PI, PI))
        assert abs(overlap(a, b) - overlap(b, a).conjugate()) < 1e-15


def test_overlap_cauchy_schwarz():
    rng = np.random.default_rng(14)
    for n in (2, 6, 11):
        for _ in range(20):
            a = coherent_state(n, rng.uniform(0, PI), rng.uniform(-PI, PI))
            b = coherent_state(n, rng.uniform(0, PI), rng.uniform(-PI, PI))
            assert abs(overlap(a, b)) <= 1.0 + 1e-12


def test_closed_form_same_params_is_one():
    for n in (1, 5, 12):
        assert abs(coherent_overlap(n, 1.1, 0.3, 1.1, 0.3) - 1.0) < 1e-12


def test_closed_form_antipodal_is_zero():
    for n in (1, 4, 9):
        beta = 0.7
        assert abs(coherent_overlap(n, PI / 2, beta, PI / 2, beta + PI)) < 1e-12


def test_closed_form_matches_direct_summation():
    rng = np.random.default_rng(15)
    for n in range(1, 13):
        for _ in range(100):
            ta, pa = rng.uniform(0, PI), rng.uniform(-PI, PI)
            tb, pb = rng.uniform(0, PI), rng.uniform(-PI, PI)
            direct = overlap(coherent_state(n, ta, pa), coherent_state(n, tb, pb))
            closed = coherent_overlap(n, ta, pa, tb, pb)
            assert abs(direct - closed) < 1e-12


def test_closed_form_specific_pair():
    direct = overlap(coherent_state(5, 1.1, 0.3), coherent_state(5, 0.7, -2.0))
    assert abs(direct - coherent_overlap(5, 1.1, 0.3, 0.7, -2.0)) < 1e-12


def test_norm_examples():
    assert norm(DickeState(1, [0.0, 0.0])) == 0.0
    assert abs(norm(DickeState(1, [3 / 5, 4j / 5])) - 1.0) < 1e-15
    assert abs(norm(coherent_state(7, 2.2, 0.9)) - 1.0) < 1e-12
