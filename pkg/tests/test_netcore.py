import numpy as np
import pytest

from graphon_cpd.netcore import (
    as_adjacency_sequence,
    average_adjacency,
    dist_2inf,
    dist_frob,
)


def ring(n):
    a = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        a[i, (i + 1) % n] = 1
        a[(i + 1) % n, i] = 1
    return a


class TestAverageAdjacency:
    def test_constant_window(self):
        a = ring(5)
        seq = np.stack([a, a, a])
        assert (average_adjacency(seq, 1, 3) == a).all()

    def test_two_snapshot_mean(self):
        a = np.zeros((3, 3), dtype=np.int8)
        b = a.copy()
        b[0, 1] = b[1, 0] = 1
        seq = np.stack([b, a])
        abar = average_adjacency(seq, 1, 2)
        assert abar[0, 1] == 0.5
        assert abar[1, 0] == 0.5

    def test_single_element_window(self):
        seq = np.stack([ring(4), np.eye(4, dtype=np.int8)])
        assert (average_adjacency(seq, 2, 2) == np.eye(4)).all()

    @pytest.mark.parametrize("window", [(0, 1), (2, 1), (1, 3), (3, 3)])
    def test_bad_window(self, window):
        seq = np.stack([ring(4), ring(4)])
        with pytest.raises(IndexError):
            average_adjacency(seq, *window)

    def test_range_and_equivariance(self):
        rng = np.random.default_rng(3)
        seq = np.stack(
            [np.triu(rng.integers(0, 2, (6, 6))) for _ in range(4)]
        )
        seq = np.maximum(seq, seq.transpose(0, 2, 1))
        abar = average_adjacency(seq, 1, 4)
        assert abar.min() >= 0 and abar.max() <= 1
        perm = rng.permutation(6)
        relabeled = seq[:, perm][:, :, perm]
        assert np.array_equal(
            average_adjacency(relabeled, 1, 4), abar[perm][:, perm]
        )


class TestDistances:
    def test_zero_on_equal(self):
        p = np.array([[0.2, 0.5], [0.5, 0.9]])
        assert dist_2inf(p, p) == 0.0
        assert dist_frob(p, p) == 0.0

    def test_2inf_hand_value(self):
        p = np.array([[0.0, 1.0], [1.0, 0.0]])
        q = np.zeros((2, 2))
        assert dist_2inf(p, q) == pytest.approx(0.7071067811865475, abs=1e-15)

    def test_frob_all_ones_diff(self):
        p = np.ones((2, 2))
        q = np.zeros((2, 2))
        assert dist_frob(p, q) == pytest.approx(1.0, abs=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            dist_2inf(np.zeros((2, 2)), np.zeros((3, 3)))
        with pytest.raises(ValueError):
            dist_frob(np.zeros((2, 2)), np.zeros((3, 3)))

    def test_frob_bounded_by_2inf(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = rng.integers(2, 9)
            p = rng.random((n, n))
            q = rng.random((n, n))
            p = (p + p.T) / 2
            q = (q + q.T) / 2
            assert dist_frob(p, q) <= dist_2inf(p, q) + 1e-12


class TestSequenceValidation:
    def test_rejects_asymmetric(self):
        a = np.zeros((1, 3, 3), dtype=np.int8)
        a[0, 0, 1] = 1
        with pytest.raises(ValueError):
            as_adjacency_sequence(a)

    def test_rejects_nonbinary(self):
        with pytest.raises(ValueError):
            as_adjacency_sequence(np.full((1, 3, 3), 0.5))

    def test_accepts_valid(self):
        seq = as_adjacency_sequence(np.stack([ring(4)]))
        assert seq.shape == (1, 4, 4)
