"""Group element enumeration and the definitional power-graph oracle."""

import numpy as np
import pytest

from powspec.groups import (
    GroupFamily,
    GroupSpec,
    complement_graph,
    cyclic_subgroup,
    delete_identity,
    edge_lines,
    elements,
    mul,
    power_graph_oracle,
)
from powspec.numtheory import prime_power

Z = GroupFamily.CYCLIC
D = GroupFamily.DIHEDRAL
Q = GroupFamily.DICYCLIC


def test_enumerate_orders():
    assert elements(GroupSpec(Z, 4)) == [0, 1, 2, 3]
    assert len(elements(GroupSpec(D, 3))) == 6
    assert len(elements(GroupSpec(Q, 2))) == 8


def test_enumerate_identity_first_and_unique():
    for spec in [GroupSpec(Z, 9), GroupSpec(D, 5), GroupSpec(Q, 3)]:
        elts = elements(spec)
        assert elts[0] == spec.identity
        assert len(set(elts)) == len(elts) == spec.order


def test_dicyclic_needs_n_at_least_two():
    with pytest.raises(ValueError):
        GroupSpec(Q, 1)
    with pytest.raises(ValueError):
        GroupSpec(Z, 0)


def test_multiplication_relations():
    # defining relations of each presentation
    spec = GroupSpec(D, 7)
    a, b = ("r", 1), ("s", 0)
    x = a
    for _ in range(6):
        x = mul(spec, x, a)
    assert x == ("r", 0)  # a^7 = e
    assert mul(spec, b, b) == ("r", 0)  # b^2 = e
    # b*a = a^(-1)*b
    assert mul(spec, b, a) == mul(spec, mul(spec, ("r", 6), b), ("r", 0))

    spec = GroupSpec(Q, 3)
    a, b = ("a", 1), ("b", 0)
    x = a
    for _ in range(5):
        x = mul(spec, x, a)
    assert x == ("a", 0)  # a^6 = e
    assert mul(spec, b, b) == ("a", 3)  # b^2 = a^n
    # a*b = b*a^(-1)
    assert mul(spec, a, b) == mul(spec, b, ("a", 5))


def test_cyclic_subgroup_examples():
    assert cyclic_subgroup(GroupSpec(Z, 6), 2) == {0, 2, 4}
    # b in Q_2 generates {e, b, a^2, a^2 b}, written b^3 = a^2 b
    got = cyclic_subgroup(GroupSpec(Q, 2), ("b", 0))
    assert got == {("a", 0), ("b", 0), ("a", 2), ("b", 2)}
    assert len(got) == 4
    # every reflection of D_n has order 2
    for n in (2, 5, 9):
        for k in range(n):
            assert cyclic_subgroup(GroupSpec(D, n), ("s", k)) == {("r", 0), ("s", k)}


def brute_power_graph_zn(n):
    """Independent oracle: u ~ v iff one is an integer multiple of the other
    mod n, checked by direct enumeration of multiples."""
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        mult_u = {(u * m) % n for m in range(n)}
        for v in range(n):
            mult_v = {(v * m) % n for m in range(n)}
            if u != v and (u in mult_v or v in mult_u):
                adj[u, v] = True
    return adj


def test_power_graph_z4_complete():
    g = power_graph_oracle(GroupSpec(Z, 4))
    assert g.edge_count() == 6  # K_4


def test_power_graph_z6():
    g = power_graph_oracle(GroupSpec(Z, 6))
    assert g.edge_count() == 13
    assert np.array_equal(g.adj, brute_power_graph_zn(6))
    assert not g.adj[2, 3] and not g.adj[4, 3]


def test_power_graph_d3():
    g = power_graph_oracle(GroupSpec(D, 3))
    # triangle on {e, a, a^2} plus e joined to the three reflections
    assert g.edge_count() == 6
    labels = list(g.labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    rot = [idx[("r", k)] for k in range(3)]
    refl = [idx[("s", k)] for k in range(3)]
    assert all(g.adj[i, j] for i in rot for j in rot if i != j)
    assert all(g.adj[0, j] for j in refl)
    assert not any(g.adj[i, j] for i in refl for j in refl if i != j)
    assert not any(g.adj[i, j] for i in rot[1:] for j in refl)


def test_delete_identity():
    g4 = delete_identity(power_graph_oracle(GroupSpec(Z, 4)))
    assert g4.n == 3 and g4.edge_count() == 3  # K_3

    gd3 = delete_identity(power_graph_oracle(GroupSpec(D, 3)))
    assert gd3.n == 5 and gd3.edge_count() == 1  # K_2 plus 3 isolated vertices

    g1 = delete_identity(power_graph_oracle(GroupSpec(Z, 1)))
    assert g1.n == 0

    with pytest.raises(ValueError):
        delete_identity(g4)  # identity already gone


def test_complement_examples():
    k4 = power_graph_oracle(GroupSpec(Z, 4))
    assert complement_graph(k4).edge_count() == 0
    comp6 = complement_graph(power_graph_oracle(GroupSpec(Z, 6)))
    assert sorted(edge_lines(comp6)) == ["2 3", "3 4"]


def test_complement_involution():
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = int(rng.integers(1, 30))
        adj = np.triu(rng.uniform(size=(n, n)) < 0.5, 1)
        g = power_graph_oracle(GroupSpec(Z, n))  # plus a random graph below
        assert np.array_equal(complement_graph(complement_graph(g)).adj, g.adj)
        from powspec.groups import LabeledGraph

        h = LabeledGraph(adj | adj.T, tuple(range(n)))
        assert np.array_equal(complement_graph(complement_graph(h)).adj, h.adj)


def test_completeness_criterion_small():
    # complete iff n = 1 or a prime power (cyclic family)
    for n in range(1, 61):
        g = power_graph_oracle(GroupSpec(Z, n))
        complete = g.edge_count() == n * (n - 1) // 2
        assert complete == (n == 1 or prime_power(n) is not None)


def test_identity_universal_and_reflection_degree():
    for spec in [GroupSpec(Z, 12), GroupSpec(D, 8), GroupSpec(Q, 5)]:
        g = power_graph_oracle(spec)
        assert int(g.degrees()[g.identity_index]) == g.n - 1
    for n in (2, 3, 10):
        g = power_graph_oracle(GroupSpec(D, n))
        idx = {lab: i for i, lab in enumerate(g.labels)}
        for k in range(n):
            assert int(g.degrees()[idx[("s", k)]]) == 1


def test_edge_lines_format():
    g = power_graph_oracle(GroupSpec(Z, 4))
    lines = list(edge_lines(g))
    assert lines == ["0 1", "0 2", "0 3", "1 2", "1 3", "2 3"]
