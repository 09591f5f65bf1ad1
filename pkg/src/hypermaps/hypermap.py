"""Regular hypermaps presented by a group together with three involutions.

With flags identified with the group elements, g1 and g2 stabilize a
hypervertex, g2 and g0 a hyperedge, and g0 and g1 a hyperface; the
hypervertices, hyperedges and hyperfaces are the right cosets of
H = <g1,g2>, K = <g2,g0> and F = <g0,g1>.  The type (k, m, n) records the
orders of g1*g2, g2*g0 and g0*g1 (the three valencies).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError, NotGenerating, NotInvolution
from .group import (
    CosetPartition,
    GroupTable,
    SubgroupHandle,
    right_cosets,
    subgroup_generate,
)
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class InvolutionTriple:
    """Element indices of (g0, g1, g2) in some GroupTable."""

    g0: int
    g1: int
    g2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.g0, self.g1, self.g2)


@dataclass(frozen=True)
class HypermapType:
    k: int  # hypervertex valency, |g1*g2|
    m: int  # hyperedge valency,   |g2*g0|
    n: int  # hyperface valency,   |g0*g1|

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.k, self.m, self.n)


class Hypermap:
    """A regular hypermap with all derived incidence data populated.

    Instances are immutable after construction; build with
    :func:`hypermap_build`.
    """

    def __init__(self, group: GroupTable, triple: InvolutionTriple):
        g0, g1, g2 = triple.as_tuple()
        for name, g in (("g0", g0), ("g1", g1), ("g2", g2)):
            o = group.order_of(g)
            if o != 2:
                raise NotInvolution(f"{name} has order {o}, not 2")
        self.group = group
        self.triple = triple
        self.H: SubgroupHandle = subgroup_generate(group, [g1, g2])
        self.K: SubgroupHandle = subgroup_generate(group, [g2, g0])
        self.F: SubgroupHandle = subgroup_generate(group, [g0, g1])
        generated = group.closure([g0, g1, g2], seed=self.H.members)
        if len(generated) != group.order:
            raise NotGenerating(
                f"triple generates a subgroup of order {len(generated)}, "
                f"not the full group of order {group.order}"
            )
        self.type = HypermapType(
            group.order_of(group.mul(g1, g2)),
            group.order_of(group.mul(g2, g0)),
            group.order_of(group.mul(g0, g1)),
        )
        self.vertex_cosets: CosetPartition = right_cosets(group, self.H)
        self.edge_cosets: CosetPartition = right_cosets(group, self.K)
        self.face_cosets: CosetPartition = right_cosets(group, self.F)
        self.num_vertices = self.vertex_cosets.count
        self.num_edges = self.edge_cosets.count
        self.num_faces = self.face_cosets.count
        self.num_flags = group.order
        self.euler = (
            self.num_vertices + self.num_edges + self.num_faces - self.num_flags // 2
        )
        k, m, n = self.type.as_tuple()
        # <g1,g2> etc. are dihedral of order twice the product order for
        # genuine involutions; diagnose (rather than reject) any exception
        self.dihedral_ok = (
            self.H.size == 2 * k and self.K.size == 2 * m and self.F.size == 2 * n
        )
        type_euler = (
            self.num_flags // (2 * k)
            + self.num_flags // (2 * m)
            + self.num_flags // (2 * n)
            - self.num_flags // 2
        )
        if self.dihedral_ok and type_euler != self.euler:
            raise InternalError("Euler characteristic mismatch between formulas")
        even = subgroup_generate(group, [group.mul(g1, g2), group.mul(g2, g0)])
        index = group.order // even.size
        if index not in (1, 2):
            raise InternalError(f"even subgroup has index {index}")
        self.orientable = index == 2
        if self.orientable:
            if self.euler % 2 != 0:
                raise InternalError("orientable hypermap with odd Euler characteristic")
            self.genus_orientable: int | None = (2 - self.euler) // 2
            self.genus_nonorientable: int | None = None
        else:
            self.genus_orientable = None
            self.genus_nonorientable = 2 - self.euler

    def __repr__(self) -> str:
        k, m, n = self.type.as_tuple()
        return (
            f"Hypermap(type=({k},{m},{n}), flags={self.num_flags}, "
            f"euler={self.euler}, orientable={self.orientable})"
        )


def hypermap_build(G: GroupTable, triple: InvolutionTriple) -> Hypermap:
    """Build the hypermap of a generating involution triple on G."""
    return Hypermap(G, triple)


def orientable(hm: Hypermap) -> bool:
    """True iff the even subgroup <g1*g2, g2*g0> has index 2 in the group."""
    return hm.orientable


def underlying_hypergraph(hm: Hypermap) -> Hypergraph:
    """Vertices are the right cosets of H; each right coset of K yields one
    hyperedge whose vertex set is the H-cosets it meets.  Hyperedges appear
    in canonical coset order and duplicates are retained."""
    coset_of = hm.vertex_cosets.coset_of
    edges = []
    for block in hm.edge_cosets.blocks:
        edges.append(sorted({int(coset_of[g]) for g in block}))
    return Hypergraph(hm.num_vertices, edges)
