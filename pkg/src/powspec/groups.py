"""Element enumeration and definitional power graphs for three group families.

Families: the cyclic group Z_n (integers with addition mod n), the
dihedral group D_n of order 2n, and the dicyclic group Q_n of order 4n
with presentation a^(2n) = e, b^2 = a^n, a*b = b*a^(-1).

Elements live in a fixed normal form (tuples), products reduce by
rewriting, and the power graph is built directly from generated cyclic
subgroups: u ~ v iff one lies in the subgroup generated by the other.
That definitional construction is the ground-truth oracle against which
the structural (join) route is validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

__all__ = [
    "GroupFamily",
    "GroupSpec",
    "LabeledGraph",
    "elements",
    "mul",
    "cyclic_subgroup",
    "power_graph_oracle",
    "delete_identity",
    "complement_graph",
    "edge_lines",
    "element_label",
]


class GroupFamily(str, Enum):
    CYCLIC = "zn"
    DIHEDRAL = "dn"
    DICYCLIC = "qn"


@dataclass(frozen=True)
class GroupSpec:
    """One of the three supported group families plus its size parameter."""

    family: GroupFamily
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"group parameter must be positive, got n={self.n}")
        if self.family is GroupFamily.DICYCLIC and self.n < 2:
            raise ValueError("dicyclic groups need n >= 2")

    @property
    def order(self) -> int:
        if self.family is GroupFamily.CYCLIC:
            return self.n
        if self.family is GroupFamily.DIHEDRAL:
            return 2 * self.n
        return 4 * self.n

    @property
    def identity(self):
        if self.family is GroupFamily.CYCLIC:
            return 0
        if self.family is GroupFamily.DIHEDRAL:
            return ("r", 0)
        return ("a", 0)


@dataclass(eq=False)
class LabeledGraph:
    """Dense undirected graph with group-element vertex labels.

    ``adj`` is a square boolean array, symmetric with an empty diagonal.
    ``identity_index`` points at the identity-element vertex when one is
    present (power graphs have one, proper power graphs do not).
    """

    adj: np.ndarray
    labels: tuple
    identity_index: int | None = None

    def __post_init__(self):
        self.adj = np.asarray(self.adj, dtype=bool)
        if self.adj.shape != (len(self.labels), len(self.labels)):
            raise ValueError("adjacency shape does not match label count")

    @property
    def n(self) -> int:
        return len(self.labels)

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2


def elements(spec: GroupSpec) -> list:
    """Deterministic element order: rotations/a-powers by exponent, then the
    reflection/b-coset elements by exponent.  Index 0 is the identity."""
    n = spec.n
    if spec.family is GroupFamily.CYCLIC:
        return list(range(n))
    if spec.family is GroupFamily.DIHEDRAL:
        return [("r", k) for k in range(n)] + [("s", k) for k in range(n)]
    return [("a", k) for k in range(2 * n)] + [("b", k) for k in range(2 * n)]


def mul(spec: GroupSpec, x, y):
    """Product x*y reduced to normal form.

    Dihedral: ("r", k) is a^k, ("s", k) is b*a^k; b*a^k*b = a^(-k).
    Dicyclic: ("a", k) is a^k, ("b", k) is a^k*b; b*a^k = a^(-k)*b and
    b^2 = a^n, exponents mod 2n.
    """
    n = spec.n
    if spec.family is GroupFamily.CYCLIC:
        return (x + y) % n
    if spec.family is GroupFamily.DIHEDRAL:
        tx, kx = x
        ty, ky = y
        if tx == "r" and ty == "r":
            return ("r", (kx + ky) % n)
        if tx == "r" and ty == "s":
            return ("s", (ky - kx) % n)
        if tx == "s" and ty == "r":
            return ("s", (kx + ky) % n)
        return ("r", (ky - kx) % n)
    m = 2 * n
    tx, kx = x
    ty, ky = y
    if tx == "a" and ty == "a":
        return ("a", (kx + ky) % m)
    if tx == "a" and ty == "b":
        return ("b", (kx + ky) % m)
    if tx == "b" and ty == "a":
        return ("b", (kx - ky) % m)
    return ("a", (kx - ky + n) % m)


def cyclic_subgroup(spec: GroupSpec, x) -> set:
    """The subgroup {x^m : m in Z} generated by x; always contains the
    identity and x itself."""
    e = spec.identity
    out = {e}
    y = x
    while y != e:
        out.add(y)
        y = mul(spec, y, x)
    return out


def power_graph_oracle(spec: GroupSpec) -> LabeledGraph:
    """Definitional power graph: u ~ v iff u != v and one of them is a power
    of the other (membership in the generated cyclic subgroup)."""
    elts = elements(spec)
    index = {x: i for i, x in enumerate(elts)}
    size = len(elts)
    member = np.zeros((size, size), dtype=bool)
    for i, x in enumerate(elts):
        cols = [index[y] for y in cyclic_subgroup(spec, x)]
        member[i, cols] = True
    adj = member | member.T
    np.fill_diagonal(adj, False)
    return LabeledGraph(adj, tuple(elts), identity_index=0)


def delete_identity(g: LabeledGraph) -> LabeledGraph:
    """Induced subgraph on everything except the identity vertex."""
    if g.identity_index is None:
        raise ValueError("graph has no identity vertex to delete")
    keep = [i for i in range(g.n) if i != g.identity_index]
    sub = g.adj[np.ix_(keep, keep)]
    return LabeledGraph(sub, tuple(g.labels[i] for i in keep), identity_index=None)


def complement_graph(g: LabeledGraph) -> LabeledGraph:
    """Same vertices, complemented adjacency, still loop-free."""
    comp = ~g.adj
    np.fill_diagonal(comp, False)
    return LabeledGraph(comp, g.labels, identity_index=g.identity_index)


def edge_lines(g: LabeledGraph) -> Iterator[str]:
    """One "u v" line per edge, vertices by canonical index, u < v."""
    rows, cols = np.nonzero(np.triu(g.adj, k=1))
    for u, v in zip(rows.tolist(), cols.tolist()):
        yield f"{u} {v}"


def element_label(x) -> str:
    """Human-readable element name: 3, a^2, b·a, a^3·b, ..."""
    if isinstance(x, int):
        return str(x)
    tag, k = x
    if tag == "r":
        return "e" if k == 0 else ("a" if k == 1 else f"a^{k}")
    if tag == "s":
        return "b" if k == 0 else (f"b·a" if k == 1 else f"b·a^{k}")
    if tag == "a":
        return "e" if k == 0 else ("a" if k == 1 else f"a^{k}")
    return "b" if k == 0 else (f"a·b" if k == 1 else f"a^{k}·b")
