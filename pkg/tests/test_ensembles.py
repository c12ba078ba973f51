import numpy as np
import pytest

from meanscope.ensembles import (
    REGIONS,
    REGION_BOUNDARY,
    EnsembleSpec,
    random_invertible,
    random_ordered_pair,
    random_pd,
    random_pd_tuple,
    sample_region,
)
from meanscope.linalg import loewner_leq


class TestRandomPD:
    def test_scalar_range(self):
        spec = EnsembleSpec(n=1, kappa_max=100.0, seed=5)
        a = random_pd(spec).array[0, 0].real
        assert 0.1 <= a <= 10.0

    def test_kappa_one_gives_identity(self):
        spec = EnsembleSpec(n=4, kappa_max=1.0, seed=6)
        a = random_pd(spec)
        lam = a.decomposition().eigenvalues
        assert np.allclose(lam, lam[0])

    def test_deterministic(self):
        spec = EnsembleSpec(n=4, seed=42)
        a1 = random_pd(spec)
        a2 = random_pd(spec)
        assert np.array_equal(a1.array, a2.array)

    def test_distinct_indices_differ(self):
        spec = EnsembleSpec(n=4, seed=42)
        assert not np.array_equal(random_pd(spec, 0).array,
                                  random_pd(spec, 1).array)

    def test_condition_bounded(self):
        for seed in range(10):
            spec = EnsembleSpec(n=5, kappa_max=1e3, seed=seed)
            lam = random_pd(spec).decomposition().eigenvalues
            assert lam[-1] / lam[0] <= 1e3 * 1.01

    def test_real_field(self):
        spec = EnsembleSpec(n=4, field="real", seed=3)
        assert np.max(np.abs(random_pd(spec).array.imag)) <= 1e-14

    def test_tuple_length(self):
        spec = EnsembleSpec(n=3, m=4, seed=9)
        mats = random_pd_tuple(spec)
        assert len(mats) == 4

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            EnsembleSpec(n=0)
        with pytest.raises(ValueError):
            EnsembleSpec(n=2, field="quaternion")
        with pytest.raises(ValueError):
            EnsembleSpec(n=2, kappa_max=0.5)


class TestOrderedPair:
    def test_order_holds(self):
        for seed in range(20):
            spec = EnsembleSpec(n=4, seed=seed)
            a, b = random_ordered_pair(spec)
            assert loewner_leq(a, b).margin >= -1e-12

    def test_scalar_case(self):
        spec = EnsembleSpec(n=1, seed=2)
        a, b = random_ordered_pair(spec)
        assert b.array[0, 0].real >= a.array[0, 0].real

    def test_deterministic(self):
        spec = EnsembleSpec(n=3, seed=8)
        a1, b1 = random_ordered_pair(spec)
        a2, b2 = random_ordered_pair(spec)
        assert np.array_equal(a1.array, a2.array)
        assert np.array_equal(b1.array, b2.array)


class TestInvertible:
    def test_well_conditioned(self):
        spec = EnsembleSpec(n=4, seed=1)
        c = random_invertible(spec)
        sv = np.linalg.svd(c, compute_uv=False)
        assert sv[0] / sv[-1] <= 16.0 * 1.01


class TestRegions:
    def test_callebaut_sample_satisfies_predicate(self):
        for seed in range(50):
            s, t = sample_region("callebaut", seed)
            assert REGIONS["callebaut"](s, t)

    def test_between_sample(self):
        for seed in range(50):
            s, t = sample_region("between", seed)
            assert min(t, 1 - t) <= s <= max(t, 1 - t)

    def test_boundary_points_are_in_region(self):
        for name, pts in REGION_BOUNDARY.items():
            for s, t in pts:
                assert REGIONS[name](s, t), (name, s, t)

    def test_deterministic(self):
        assert sample_region("callebaut", 7) == sample_region("callebaut", 7)

    def test_unknown_region(self):
        with pytest.raises(ValueError):
            sample_region("nope", 0)
