import numpy as np
import pytest

from rdag.errors import NotPolystable
from rdag.estimator import MleVerdict, classify
from rdag.stability import StabilityVerdict, classify_stability, stabiliser_basis

from conftest import gap_graph


class TestVerdicts:
    def test_stable_matches_unique(self, running, heights):
        sc = classify_stability(running, heights)
        assert sc.verdict is StabilityVerdict.STABLE
        assert sc.stabiliser_dimension == 0

    def test_unstable_matches_unbounded(self, running):
        Y = np.array([[2.0], [2.0], [1.0]])
        sc = classify_stability(running, Y)
        assert sc.verdict is StabilityVerdict.UNSTABLE
        assert sc.stabiliser_dimension is None

    def test_polystable_matches_non_unique(self):
        g = gap_graph(4)
        Y = np.random.default_rng(12).standard_normal((6, 1))
        sc = classify_stability(g, Y)
        assert sc.verdict is StabilityVerdict.POLYSTABLE_NOT_STABLE
        assert sc.stabiliser_dimension == 3

    def test_verdict_always_tracks_mle_verdict(self):
        g = gap_graph(3)
        rng = np.random.default_rng(13)
        pairing = {
            MleVerdict.UNBOUNDED: StabilityVerdict.UNSTABLE,
            MleVerdict.EXISTS_NON_UNIQUE: StabilityVerdict.POLYSTABLE_NOT_STABLE,
            MleVerdict.EXISTS_UNIQUE: StabilityVerdict.STABLE,
        }
        for n in (1, 2, 3, 4):
            Y = rng.standard_normal((5, n))
            assert classify_stability(g, Y).verdict is pairing[classify(g, Y).verdict]


class TestStabiliserBasis:
    def test_raises_when_unstable(self, running):
        with pytest.raises(NotPolystable):
            stabiliser_basis(running, np.array([[2.0], [2.0], [1.0]]))

    def test_basis_spans_flat_directions(self):
        g = gap_graph(4)
        Y = np.random.default_rng(14).standard_normal((6, 1))
        bases = stabiliser_basis(g, Y)
        assert bases["blue"].shape == (3, 4)
        # each basis vector zeroes the lower rows of the augmented matrix
        from rdag.augmented import build_augmented

        M = build_augmented(g, Y, "blue")
        np.testing.assert_allclose(bases["blue"] @ M.matrix[1:], 0.0, atol=1e-10)

    def test_trivial_basis_when_stable(self, running, heights):
        bases = stabiliser_basis(running, heights)
        assert all(b.shape[0] == 0 for b in bases.values())
