"""Join decompositions of power graphs.

A power graph on any of the supported families splits into blocks of
group elements (each inducing a clique or an independent set) glued
along a small template graph: blocks sit on template vertices and two
blocks are completely joined exactly when their template vertices are
adjacent.  Templates:

* cyclic Z_n   -- the divisibility graph on the divisors of n, one clique
                  block per divisor d holding the elements with gcd d;
* dihedral D_n -- the same divisor graph plus one extra vertex "R" holding
                  all n reflections (an independent set) pendant on the
                  divisor-n vertex;
* dicyclic Q_n -- a star: {e, a^n} in the middle, the remaining a-powers
                  as one clique leaf, and n two-element b-coset cliques.

The dicyclic template is only correct when the a-power clique survives
(in practice n a power of two), so ``build_join`` always validates the
assembled graph vertex-for-vertex against the definitional oracle and
raises ``StructureValidationError`` on any mismatch rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

import numpy as np

from .groups import (
    GroupFamily,
    GroupSpec,
    LabeledGraph,
    delete_identity,
    power_graph_oracle,
)
from .numtheory import divisors, totient

__all__ = [
    "Variant",
    "TemplateGraph",
    "JoinBlock",
    "JoinStructure",
    "StructureValidationError",
    "divisor_graph",
    "dihedral_template",
    "dicyclic_template",
    "build_join",
    "assemble",
    "validate_structure",
]


class Variant(str, Enum):
    POWER = "power"
    PROPER = "proper"


class StructureValidationError(RuntimeError):
    """The assembled join graph disagrees with the definitional oracle."""


@dataclass(eq=False)
class TemplateGraph:
    """Small graph whose vertices index the blocks of a join."""

    adj: np.ndarray
    labels: tuple

    def __post_init__(self):
        self.adj = np.asarray(self.adj, dtype=bool)

    @property
    def n(self) -> int:
        return len(self.labels)

    def drop_vertex(self, label) -> "TemplateGraph":
        keep = [i for i, lab in enumerate(self.labels) if lab != label]
        if len(keep) == self.n:
            raise ValueError(f"template has no vertex labelled {label!r}")
        return TemplateGraph(
            self.adj[np.ix_(keep, keep)], tuple(self.labels[i] for i in keep)
        )


@dataclass(frozen=True)
class JoinBlock:
    """One block: its template label, concrete members, and local shape."""

    label: object
    members: tuple
    kind: str  # "complete" | "empty"
    join_degree: int  # total size of template-adjacent blocks

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def regularity(self) -> int:
        return self.size - 1 if self.kind == "complete" else 0


@dataclass(eq=False)
class JoinStructure:
    """Template plus ordered blocks; block order follows template labels."""

    spec: GroupSpec
    variant: Variant
    template: TemplateGraph
    blocks: tuple

    @property
    def order(self) -> int:
        return sum(b.size for b in self.blocks)

    @property
    def sizes(self) -> tuple:
        return tuple(b.size for b in self.blocks)


def divisor_graph(n: int) -> TemplateGraph:
    """Graph on the divisors of n; two divisors are adjacent iff one
    divides the other."""
    divs = divisors(n)
    t = len(divs)
    adj = np.zeros((t, t), dtype=bool)
    for i in range(t):
        for j in range(i + 1, t):
            if divs[j] % divs[i] == 0:
                adj[i, j] = adj[j, i] = True
    return TemplateGraph(adj, tuple(divs))


def dihedral_template(n: int) -> TemplateGraph:
    """Divisor graph plus a reflections vertex "R" adjacent only to the
    divisor-n vertex."""
    base = divisor_graph(n)
    t = base.n
    adj = np.zeros((t + 1, t + 1), dtype=bool)
    adj[:t, :t] = base.adj
    adj[t, t - 1] = adj[t - 1, t] = True  # divisor n sits last (ascending)
    return TemplateGraph(adj, base.labels + ("R",))


def dicyclic_template(n: int) -> TemplateGraph:
    """Star on n+2 vertices with vertex 1 (the {e, a^n} block) as center."""
    size = n + 2
    adj = np.zeros((size, size), dtype=bool)
    adj[0, 1:] = adj[1:, 0] = True
    return TemplateGraph(adj, tuple(range(1, size + 1)))


def _cyclic_members(n: int):
    by_gcd: dict[int, list[int]] = {d: [] for d in divisors(n)}
    for x in range(n):
        by_gcd[gcd(x, n) if x else n].append(x)
    return by_gcd


def _blocks_from_template(template, members, kinds):
    sizes = [len(m) for m in members]
    blocks = []
    for i in range(template.n):
        rho = int(sum(sizes[j] for j in np.nonzero(template.adj[i])[0]))
        blocks.append(
            JoinBlock(template.labels[i], tuple(members[i]), kinds[i], rho)
        )
    return tuple(blocks)


def build_join(
    spec: GroupSpec,
    variant: Variant,
    validate: bool = True,
    oracle: LabeledGraph | None = None,
) -> JoinStructure:
    """Block partition + template for the (proper) power graph of ``spec``.

    Raises ``StructureValidationError`` when the assembled graph does not
    reproduce the oracle (the dicyclic star template away from powers of
    two); callers then fall back to the oracle-only route.  A precomputed
    power graph of ``spec`` can be passed as ``oracle`` to skip rebuilding
    it during validation.
    """
    variant = Variant(variant)
    n = spec.n
    if variant is Variant.PROPER and spec.order < 2:
        raise ValueError("proper variant needs group order >= 2")

    if spec.family is GroupFamily.CYCLIC:
        template = divisor_graph(n)
        by_gcd = _cyclic_members(n)
        labels = list(template.labels)
        if variant is Variant.PROPER:
            template = template.drop_vertex(n)
            labels = list(template.labels)
        members = [by_gcd[d] for d in labels]
        kinds = ["complete"] * len(labels)
    elif spec.family is GroupFamily.DIHEDRAL:
        template = dihedral_template(n)
        by_gcd = _cyclic_members(n)
        if variant is Variant.PROPER:
            template = template.drop_vertex(n)
        members = []
        kinds = []
        for lab in template.labels:
            if lab == "R":
                members.append([("s", k) for k in range(n)])
                kinds.append("empty")
            else:
                members.append([("r", x) for x in by_gcd[lab]])
                kinds.append("complete")
    else:
        template = dicyclic_template(n)
        center = [("a", 0), ("a", n)]
        if variant is Variant.PROPER:
            center = [("a", n)]
        members = [center]
        members.append([("a", j) for j in range(2 * n) if j not in (0, n)])
        for k in range(n):
            members.append([("b", k), ("b", n + k)])
        kinds = ["complete"] * template.n

    js = JoinStructure(spec, variant, template, _blocks_from_template(template, members, kinds))
    if validate:
        validate_structure(js, oracle=oracle)
    return js


def assemble(js: JoinStructure) -> LabeledGraph:
    """Concrete graph of a join structure: clique/empty blocks plus complete
    bipartite gluing between template-adjacent blocks."""
    sizes = js.sizes
    offsets = np.concatenate(([0], np.cumsum(sizes)))
    total = int(offsets[-1])
    adj = np.zeros((total, total), dtype=bool)
    for i, block in enumerate(js.blocks):
        lo, hi = offsets[i], offsets[i + 1]
        if block.kind == "complete":
            adj[lo:hi, lo:hi] = True
        for j in range(i + 1, js.template.n):
            if js.template.adj[i, j]:
                lo2, hi2 = offsets[j], offsets[j + 1]
                adj[lo:hi, lo2:hi2] = True
                adj[lo2:hi2, lo:hi] = True
    np.fill_diagonal(adj, False)
    labels = tuple(x for block in js.blocks for x in block.members)
    ident = js.spec.identity
    identity_index = labels.index(ident) if ident in labels else None
    return LabeledGraph(adj, labels, identity_index=identity_index)


def reference_graph(
    spec: GroupSpec, variant: Variant, base: LabeledGraph | None = None
) -> LabeledGraph:
    """Definitional graph the structure must reproduce; ``base`` is an
    already-built power graph of ``spec``."""
    g = base if base is not None else power_graph_oracle(spec)
    if Variant(variant) is Variant.PROPER:
        g = delete_identity(g)
    return g


def validate_structure(js: JoinStructure, oracle: LabeledGraph | None = None) -> None:
    """Hard check: assembled graph == oracle graph vertex-for-vertex."""
    oracle = reference_graph(js.spec, js.variant, base=oracle)
    built = assemble(js)
    if built.n != oracle.n:
        raise StructureValidationError(
            f"join structure for {js.spec} covers {built.n} vertices, oracle has {oracle.n}"
        )
    pos = {lab: i for i, lab in enumerate(oracle.labels)}
    try:
        perm = np.array([pos[lab] for lab in built.labels], dtype=int)
    except KeyError as missing:
        raise StructureValidationError(
            f"block member {missing} is not a vertex of the oracle graph"
        ) from None
    if not np.array_equal(built.adj, oracle.adj[np.ix_(perm, perm)]):
        raise StructureValidationError(
            f"assembled join of {js.spec.family.value} n={js.spec.n} "
            f"({js.variant.value}) disagrees with the definitional power graph"
        )
