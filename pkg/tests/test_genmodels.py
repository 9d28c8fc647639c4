import math

import numpy as np
import pytest

from graphon_cpd.genmodels import (
    GRAPHON_IDS,
    SBM_IDS,
    ScenarioSpec,
    delta_nT,
    graphon_matrix,
    sample_snapshot,
    sbm_matrix,
    scenario_sequence,
    segment_matrices,
    snapshot_rng,
)


class TestDelta:
    def test_powers_of_two(self):
        assert delta_nT("DSBM-I", 64, 256) == pytest.approx(0.25, abs=1e-15)
        assert delta_nT("DSBM-V", 100, 256, segment=2) == pytest.approx(0.5, abs=1e-15)

    def test_mdsbm_first_segment_unit_args(self):
        assert delta_nT("MDSBM-I", 1, 1, segment=1) == pytest.approx(2.0, abs=1e-15)

    def test_unknown_scenario(self):
        with pytest.raises(ValueError):
            delta_nT("DSBM-XIII", 10, 10)


class TestSbmMatrix:
    def test_sbm_i_small(self):
        p = sbm_matrix("SBM-I", 6)
        # nodes 1-4 in block 1, nodes 5-6 in block 2 (1-based)
        assert p[0, 4] == 0.3
        assert p[0, 1] == 0.6
        assert p[4, 5] == 0.6

    def test_sbm_vii_single_node_switch(self):
        n, delta = 30, 0.2
        a = sbm_matrix("SBM-VI", n, delta)
        b = sbm_matrix("SBM-VII", n, delta)
        diff = np.argwhere(a != b)
        switched = 2 * (n // 3) - 1  # 0-based index of the switched node
        assert len(diff) == 2 * (n - 1)
        assert all(switched in pair for pair in diff)

    def test_sbm_x_degenerates_at_zero_delta(self):
        assert (sbm_matrix("SBM-X", 10, 0.0) == 0.6).all()

    def test_lambda_range_enforced(self):
        with pytest.raises(ValueError):
            sbm_matrix("SBM-IX", 10, 0.7)
        with pytest.raises(ValueError):
            sbm_matrix("SBM-IV", 10, 0.5)

    @pytest.mark.parametrize("sbm_id", SBM_IDS)
    def test_symmetric_unit_range(self, sbm_id):
        p = sbm_matrix(sbm_id, 23, 0.1)
        assert (p == p.T).all()
        assert p.min() >= 0 and p.max() <= 1


class TestGraphonMatrix:
    def test_graphon_ii_center_value(self):
        p = graphon_matrix("GRAPHON-II", np.array([0.5, 0.5, 0.1]))
        assert p[0, 1] == pytest.approx(0.9207354924039483, abs=1e-15)

    def test_graphon_i_block_values(self):
        # n = 100 gives KB = floor(log 100) = 4
        xi = np.full(100, 0.1)  # all in block 1
        p = graphon_matrix("GRAPHON-I", xi)
        assert np.allclose(p, 1 / 5)
        mixed = graphon_matrix("GRAPHON-I", np.concatenate([np.full(50, 0.1), np.full(50, 0.9)]))
        assert mixed[0, 99] == pytest.approx(0.3 / 5, abs=1e-15)
        assert mixed[99, 98] == pytest.approx(4 / 5, abs=1e-15)

    def test_graphon_iii_origin(self):
        p = graphon_matrix("GRAPHON-III", np.array([0.0, 0.0, 0.5]))
        assert p[0, 1] == pytest.approx(0.15, abs=1e-15)

    @pytest.mark.parametrize("gid", GRAPHON_IDS)
    def test_symmetric_unit_range(self, gid):
        rng = np.random.default_rng(6)
        xi = rng.random(40)
        p = graphon_matrix(gid, xi)
        assert np.abs(p - p.T).max() == 0
        assert p.min() >= 0 and p.max() <= 1

    @pytest.mark.parametrize("gid", GRAPHON_IDS)
    def test_permutation_equivariance(self, gid):
        rng = np.random.default_rng(7)
        xi = rng.random(15)
        perm = rng.permutation(15)
        assert np.array_equal(
            graphon_matrix(gid, xi[perm]), graphon_matrix(gid, xi)[perm][:, perm]
        )


class TestSampling:
    def test_degenerate_probabilities(self):
        zero = sample_snapshot(np.zeros((10, 10)), snapshot_rng(0, 1))
        ones = sample_snapshot(np.ones((10, 10)), snapshot_rng(0, 1))
        assert (zero == 0).all()
        assert (ones == 1).all()

    def test_density_concentrates(self):
        p = np.full((100, 100), 0.5)
        densities = [
            sample_snapshot(p, snapshot_rng(seed, 1)).mean() for seed in range(30)
        ]
        assert all(abs(d - 0.5) < 0.02 for d in densities)

    def test_stream_determinism(self):
        p = np.full((20, 20), 0.3)
        a = sample_snapshot(p, snapshot_rng(123, 7))
        b = sample_snapshot(p, snapshot_rng(123, 7))
        c = sample_snapshot(p, snapshot_rng(123, 8))
        assert (a == b).all()
        assert (a != c).any()

    def test_symmetry(self):
        p = np.full((15, 15), 0.4)
        a = sample_snapshot(p, snapshot_rng(1, 1))
        assert (a == a.T).all()


class TestScenarios:
    def test_dsbm_i_ground_truth(self):
        _, truth = scenario_sequence(ScenarioSpec(id="DSBM-I", n=12, T=100, seed=0))
        assert truth.changepoints == [50]

    def test_mdsbm_i_ground_truth(self):
        _, truth = scenario_sequence(ScenarioSpec(id="MDSBM-I", n=12, T=100, seed=0))
        assert truth.changepoints == [25, 50, 75]

    def test_nochange_single_segment(self):
        seq, truth = scenario_sequence(
            ScenarioSpec(id="NOCHANGE-SBM-III", n=12, T=6, seed=0)
        )
        assert truth.changepoints == []
        assert len(truth.segment_matrices) == 1
        assert seq.shape == (6, 12, 12)

    def test_divisibility_enforced(self):
        with pytest.raises(ValueError):
            scenario_sequence(ScenarioSpec(id="MDSBM-II", n=12, T=101, seed=0))

    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError):
            ScenarioSpec(id="DSBM-IX", n=12, T=10, seed=0)

    def test_reproducible(self):
        spec = ScenarioSpec(id="DSBM-II", n=64, T=8, seed=99)
        a, _ = scenario_sequence(spec)
        b, _ = scenario_sequence(spec)
        assert (a == b).all()

    def test_consecutive_segments_differ(self):
        for sid in ("DSBM-I", "DSBM-II", "DSBM-III", "MDSBM-I", "MDSBM-II"):
            mats = segment_matrices(sid, 30, 100)
            for a, b in zip(mats, mats[1:]):
                assert (a != b).any()

    def test_graphon_nochange_fixed_latents(self):
        spec = ScenarioSpec(id="NOCHANGE-GRAPHON-II", n=15, T=4, seed=3)
        _, truth = scenario_sequence(spec)
        _, truth2 = scenario_sequence(spec)
        assert np.array_equal(truth.segment_matrices[0], truth2.segment_matrices[0])
