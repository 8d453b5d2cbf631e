import pytest

from rdag.errors import IncompatibleColouring
from rdag.structure import (
    butterfly_signature,
    find_unshielded_colliders,
    has_monochrome_edge,
    is_group,
    is_transitive,
    rcon_equivalent,
    star_signature,
    wedge_signature,
)

import oracles
from conftest import (
    chain_no_shortcut,
    complete_dag,
    dog_graph,
    gap_graph,
    make_graph,
    running_example,
    ten_vertex_two_component,
    two_blue_edge,
)


class TestSignatures:
    def test_star_signature_running(self, running):
        sig1 = star_signature(running, 1)
        sig3 = star_signature(running, 3)
        assert sig1.centre_colour == "blue"
        assert sig1.branches == ()
        assert sig3.branches == (("red", "blue"), ("red", "blue"))

    def test_wedge_signature_collects_shared_children(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(3, 1, "e"), (2, 1, "f"), (3, 2, "g")],
        )
        sig = wedge_signature(g, 3, 2)
        assert sig.branches == (("a", ("e", "f")),)

    def test_butterfly_signature_ordered_pairs(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(3, 1, "e"), (2, 1, "f"), (3, 2, "g")],
        )
        sig = butterfly_signature(g, 3, 1)
        assert sig.paths == (("f", "g"),)


class TestColliders:
    def test_running_has_none(self, running):
        assert find_unshielded_colliders(running) == []

    def test_simple_collider(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(2, 1, "e"), (3, 1, "f")],
        )
        assert find_unshielded_colliders(g) == [(2, 1, 3)]

    def test_shielded_collider_not_reported(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(2, 1, "e"), (3, 1, "f"), (3, 2, "g")],
        )
        assert find_unshielded_colliders(g) == []


class TestRconEquivalence:
    def test_running_example_equal(self, running):
        assert rcon_equivalent(running).equal

    def test_two_blue_edge_not_equal(self):
        d = rcon_equivalent(two_blue_edge())
        assert not d.equal
        assert d.failed_condition == "b"

    def test_ten_vertex_equal(self):
        assert rcon_equivalent(ten_vertex_two_component()).equal

    def test_collider_fails_condition_a(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(2, 1, "e"), (3, 1, "f")],
        )
        d = rcon_equivalent(g)
        assert not d.equal
        assert d.failed_condition == "a"
        assert d.witness == (2, 1, 3)

    def test_wedge_mismatch_fails_condition_c(self):
        # two red edges with matching stars; only one of them has a
        # shared child, so the doubled-edge graphs differ
        g = make_graph(
            [(1, "x"), (2, "x"), (3, "p"), (4, "p"), (5, "w"), (6, "w"), (7, "w")],
            [
                (3, 1, "red"),
                (4, 2, "red"),
                (3, 5, "g1"),
                (1, 5, "g2"),
                (4, 6, "g1"),
                (2, 7, "g2"),
            ],
        )
        d = rcon_equivalent(g)
        assert not d.equal
        assert d.failed_condition == "c"
        assert set(d.witness) == {(3, 1), (4, 2)}

    def test_incompatible_colouring_rejected(self):
        g = make_graph(
            [(1, "a"), (2, "b"), (3, "c")],
            [(3, 1, "e"), (3, 2, "e")],
        )
        with pytest.raises(IncompatibleColouring):
            rcon_equivalent(g)

    def test_matches_numeric_model_comparison(self):
        # independent check: sample both parameterisations and compare
        cases = [
            running_example(),
            two_blue_edge(),
            ten_vertex_two_component(),
            dog_graph(),
        ]
        for g in cases:
            assert rcon_equivalent(g).equal == oracles.models_numerically_equal(g)


class TestTransitivityAndGroup:
    def test_chain_without_shortcut_not_transitive(self):
        ok, witness = is_transitive(chain_no_shortcut())
        assert not ok
        assert witness == (3, 1)

    def test_complete_dag_transitive(self):
        ok, _ = is_transitive(complete_dag(4))
        assert ok

    def test_running_example_group(self, running):
        assert is_group(running).group

    def test_chain_not_group_by_transitivity(self):
        d = is_group(chain_no_shortcut())
        assert not d.group
        assert d.failed == "transitivity"
        assert d.witness == (3, 1)

    def test_butterfly_failure(self):
        # transitive, but two equally coloured edges with different
        # two-path colour patterns between their endpoints
        g = make_graph(
            [(1, "x"), (2, "x"), (3, "y"), (4, "y"), (5, "z"), (6, "z")],
            [
                (5, 1, "red"),
                (6, 2, "red"),
                (3, 1, "mid1"),
                (5, 3, "mid2"),
            ],
        )
        # add shortcut to stay transitive: 5 -> 3 -> 1 needs 5 -> 1 (have)
        d = is_group(g)
        assert not d.group
        assert d.failed == "butterfly"

    def test_group_decisions_match_closure_oracle(self):
        for g in (running_example(), complete_dag(4), dog_graph(), gap_graph(3)):
            assert is_group(g).group == oracles.closed_under_products(g, pairs=20)
        assert not oracles.closed_under_products(chain_no_shortcut(), pairs=20)


def test_has_monochrome_edge():
    mono, edge = has_monochrome_edge(two_blue_edge())
    assert mono and edge == (2, 1)
    assert not has_monochrome_edge(running_example())[0]
    assert not has_monochrome_edge(dog_graph())[0]
