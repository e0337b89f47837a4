import numpy as np
import pytest

from matroid_sampling import (Distribution, LinearSpec, ParallelClassesSpec,
                              ProjectiveSpec, UniformSpec, build_matroid,
                              enumerate_independent_ksets, estimate_F, eval_F,
                              sample_kset)
from matroid_sampling.streams import (blocks_per_trial, trial_substream,
                                      trial_uniforms)


def test_stream_slicing_matches_substreams():
    flat = trial_uniforms(99, 0, 12, 5)
    for t in range(12):
        sub = trial_substream(99, t, 5).random(5)
        assert np.array_equal(flat[t], sub)
    # chunked generation is identical to one-shot generation
    again = np.vstack([trial_uniforms(99, 0, 5, 5), trial_uniforms(99, 5, 7, 5)])
    assert np.array_equal(flat, again)


def test_blocks_per_trial():
    assert blocks_per_trial(1) == 1
    assert blocks_per_trial(4) == 1
    assert blocks_per_trial(5) == 2
    with pytest.raises(ValueError):
        blocks_per_trial(0)


def test_seed_validation():
    with pytest.raises(ValueError):
        trial_uniforms(-1, 0, 1, 2)


def test_point_mass_never_distinct(fano):
    p = Distribution([1.0, 0, 0, 0, 0, 0, 0])
    for t in range(20):
        distinct, independent = sample_kset(fano, p, 2, trial_substream(0, t, 2))
        assert not distinct and not independent


def test_simple_matroid_k2_success_iff_distinct(pg12):
    u = Distribution.uniform(3)
    for t in range(200):
        distinct, independent = sample_kset(pg12, u, 2, trial_substream(1, t, 2))
        assert distinct == independent


def test_k1_estimate_is_exactly_one(fano):
    est = estimate_F(fano, Distribution.uniform(7), 1, 500, seed=2)
    assert est.p_hat == 1.0
    assert est.std_err == 0.0


def test_golden_fixed_seed_draws(fano):
    # frozen behaviour of (Fano, uniform, K=3) under seed 11
    u = Distribution.uniform(7)
    expected = {0: (False, False), 2: (True, False), 4: (True, True)}
    for trial, want in expected.items():
        assert sample_kset(fano, u, 3, trial_substream(11, trial, 3)) == want
    assert estimate_F(fano, u, 3, 1000, seed=11).successes == 470


def test_estimate_matches_per_trial_sampling(fano):
    u = Distribution.uniform(7)
    est = estimate_F(fano, u, 3, 400, seed=21)
    successes = sum(
        sample_kset(fano, u, 3, trial_substream(21, t, 3))[1] for t in range(400))
    assert est.successes == successes


def test_estimate_deterministic_across_chunkings(fano):
    u = Distribution.uniform(7)
    runs = [estimate_F(fano, u, 3, 20_000, seed=5, chunk=c) for c in (251, 4096, 20_000)]
    assert len({r.successes for r in runs}) == 1
    assert runs[0].p_hat == runs[1].p_hat


def test_estimate_fields():
    matroid = build_matroid(UniformSpec(2, 5))
    est = estimate_F(matroid, Distribution.uniform(5), 2, 1000, seed=9)
    assert est.n_trials == 1000
    assert 0 <= est.p_hat <= 1
    assert est.std_err == pytest.approx(
        np.sqrt(est.p_hat * (1 - est.p_hat) / 1000), abs=1e-16)
    assert est.to_json()["seed"] == 9


def test_estimate_agrees_with_exact_battery():
    rng = np.random.default_rng(17)
    battery = [
        (build_matroid(ProjectiveSpec(2, 2)), 2),
        (build_matroid(ProjectiveSpec(3, 2)), 3),
        (build_matroid(ProjectiveSpec(3, 3)), 2),
        (build_matroid(ParallelClassesSpec(2)), 2),
        (build_matroid(UniformSpec(3, 6)), 3),
        (build_matroid(LinearSpec(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)))), 3),
    ]
    for seed, (matroid, k) in enumerate(battery):
        idx = enumerate_independent_ksets(matroid, k)
        for p in (Distribution.uniform(matroid.m),
                  Distribution(rng.dirichlet(np.full(matroid.m, 5.0)))):
            exact = eval_F(idx, p)
            est = estimate_F(matroid, p, k, 100_000, seed=seed)
            spread = max(est.std_err, 1e-12)
            assert abs(est.p_hat - exact) <= 4 * spread


def test_nonuniform_distribution_k2_identity(pg12):
    # for a simple matroid, P(success) = 1 - sum p_e^2
    p = Distribution([0.5, 0.25, 0.25])
    est = estimate_F(pg12, p, 2, 200_000, seed=8)
    assert abs(est.p_hat - 0.625) <= 4 * est.std_err


def test_input_validation(fano):
    u = Distribution.uniform(7)
    with pytest.raises(ValueError):
        estimate_F(fano, u, 0, 100)
    with pytest.raises(ValueError):
        estimate_F(fano, u, 2, 0)
    with pytest.raises(ValueError):
        estimate_F(fano, Distribution.uniform(6), 2, 100)
    with pytest.raises(ValueError):
        sample_kset(fano, u, 0, trial_substream(0, 0, 1))
