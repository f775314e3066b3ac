"""Join templates, block partitions, assembly, and oracle validation."""

import numpy as np
import pytest

from powspec.groups import (
    GroupFamily,
    GroupSpec,
    delete_identity,
    power_graph_oracle,
)
from powspec.joinstruct import (
    StructureValidationError,
    Variant,
    assemble,
    build_join,
    dicyclic_template,
    dihedral_template,
    divisor_graph,
    validate_structure,
)
from powspec.numtheory import divisors, totient

Z = GroupFamily.CYCLIC
D = GroupFamily.DIHEDRAL
Q = GroupFamily.DICYCLIC


def template_edges(t):
    return {
        (t.labels[i], t.labels[j])
        for i in range(t.n)
        for j in range(i + 1, t.n)
        if t.adj[i, j]
    }


def test_divisor_graph_15():
    t = divisor_graph(15)
    assert t.labels == (1, 3, 5, 15)
    assert template_edges(t) == {(1, 3), (1, 5), (1, 15), (3, 15), (5, 15)}


def test_divisor_graph_prime_power_complete():
    for n in (8, 27, 25):
        t = divisor_graph(n)
        assert len(template_edges(t)) == t.n * (t.n - 1) // 2


def test_divisor_graph_trivial():
    t = divisor_graph(1)
    assert t.labels == (1,) and t.adj.sum() == 0


def test_dihedral_template():
    t = dihedral_template(15)
    assert t.n == 5
    assert ("R",) == t.labels[-1:]
    edges = template_edges(t)
    assert (15, "R") in edges
    assert sum(1 for e in edges if "R" in e) == 1

    t7 = dihedral_template(7)  # path 1 -- 7 -- R
    assert template_edges(t7) == {(1, 7), (7, "R")}

    t1 = dihedral_template(1)
    assert template_edges(t1) == {(1, "R")}


def test_dicyclic_template_star():
    t = dicyclic_template(5)
    assert t.n == 7
    assert t.adj[0].sum() == 6
    assert np.array_equal(t.adj[1:, 1:], np.zeros((6, 6), dtype=bool))


def test_build_join_z6_blocks():
    js = build_join(GroupSpec(Z, 6), Variant.POWER)
    by_label = {b.label: b for b in js.blocks}
    assert {lab: b.size for lab, b in by_label.items()} == {1: 2, 2: 2, 3: 1, 6: 1}
    assert all(b.kind == "complete" for b in js.blocks)


def test_build_join_d15_blocks():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    by_label = {b.label: b for b in js.blocks}
    assert {lab: b.size for lab, b in by_label.items()} == {1: 8, 3: 4, 5: 2, 15: 1, "R": 15}
    assert by_label["R"].kind == "empty"
    assert all(by_label[d].kind == "complete" for d in (1, 3, 5, 15))


def test_build_join_q2_proper_blocks():
    js = build_join(GroupSpec(Q, 2), Variant.PROPER)
    assert js.sizes == (1, 2, 2, 2)
    assert js.blocks[0].members == (("a", 2),)
    assert js.template.adj[0].sum() == 3  # star center


def test_assemble_z4_complete():
    g = assemble(build_join(GroupSpec(Z, 4), Variant.POWER))
    assert g.edge_count() == 6


@pytest.mark.parametrize(
    "spec,variant",
    [
        (GroupSpec(Z, 6), Variant.POWER),
        (GroupSpec(D, 3), Variant.POWER),
        (GroupSpec(D, 3), Variant.PROPER),
        (GroupSpec(Q, 4), Variant.POWER),
    ],
)
def test_assemble_matches_oracle_vertexwise(spec, variant):
    js = build_join(spec, variant)
    built = assemble(js)
    oracle = power_graph_oracle(spec)
    if variant is Variant.PROPER:
        oracle = delete_identity(oracle)
    pos = {lab: i for i, lab in enumerate(oracle.labels)}
    perm = np.array([pos[lab] for lab in built.labels])
    assert np.array_equal(built.adj, oracle.adj[np.ix_(perm, perm)])


def test_validation_sweep_small():
    for n in range(1, 61):
        build_join(GroupSpec(Z, n), Variant.POWER)
        if n >= 2:
            build_join(GroupSpec(Z, n), Variant.PROPER)
    for n in range(1, 31):
        build_join(GroupSpec(D, n), Variant.POWER)
        build_join(GroupSpec(D, n), Variant.PROPER)
    for n in (2, 4, 8, 16):
        build_join(GroupSpec(Q, n), Variant.POWER)
        build_join(GroupSpec(Q, n), Variant.PROPER)


def test_dicyclic_structure_refused_away_from_two_powers():
    for n in (3, 5, 6, 12):
        with pytest.raises(StructureValidationError):
            build_join(GroupSpec(Q, n), Variant.POWER)
        with pytest.raises(StructureValidationError):
            build_join(GroupSpec(Q, n), Variant.PROPER)


def test_proper_needs_order_two():
    with pytest.raises(ValueError):
        build_join(GroupSpec(Z, 1), Variant.PROPER)


def test_block_size_sums():
    for spec in [GroupSpec(Z, 36), GroupSpec(D, 12), GroupSpec(Q, 8)]:
        assert build_join(spec, Variant.POWER).order == spec.order
        assert build_join(spec, Variant.PROPER).order == spec.order - 1


def test_cross_block_adjacency_is_divisibility():
    # on the oracle graph, two gcd-classes are fully joined iff one divisor
    # divides the other, and never partially joined
    from math import gcd

    for n in range(2, 201):
        g = power_graph_oracle(GroupSpec(Z, n))
        divs = divisors(n)
        members = {d: [] for d in divs}
        for x in range(n):
            members[gcd(x, n) if x else n].append(x)
        for i, di in enumerate(divs):
            for dj in divs[i + 1 :]:
                if dj == n or di == n:
                    continue
                sub = g.adj[np.ix_(members[di], members[dj])]
                if dj % di == 0 or di % dj == 0:
                    assert sub.all(), (n, di, dj)
                else:
                    assert not sub.any(), (n, di, dj)


def test_degree_formula():
    # degree of a vertex in the gcd-d block: phi(n/d) - 1 + sum of adjacent
    # block sizes in the divisor graph
    from math import gcd

    for n in (12, 30, 60, 90):
        g = power_graph_oracle(GroupSpec(Z, n))
        divs = divisors(n)
        deg = g.degrees()
        for x in range(n):
            d = gcd(x, n) if x else n
            expected = totient(n // d) - 1 + sum(
                totient(n // dj)
                for dj in divs
                if dj != d and (dj % d == 0 or d % dj == 0)
            )
            assert int(deg[x]) == expected


def test_join_degree_field():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    by_label = {b.label: b for b in js.blocks}
    # reflections block touches only the {e} block
    assert by_label["R"].join_degree == 1
    assert by_label[15].join_degree == 8 + 4 + 2 + 15  # all other blocks
    assert by_label[1].join_degree == 4 + 2 + 1


def test_validate_structure_direct_call():
    js = build_join(GroupSpec(Z, 12), Variant.POWER, validate=False)
    validate_structure(js)  # no error
