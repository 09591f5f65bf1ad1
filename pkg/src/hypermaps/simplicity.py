"""Simplicity tests for the underlying hypergraph of a regular hypermap.

Two independent routes are kept deliberately separate:

* the subgroup route: edge multiplicity equals [M : K], where M is the
  intersection over x in K of the product sets K*(H^x); the hypergraph is
  simple exactly when M = K;
* the incidence route: build the underlying hypergraph and literally count
  hyperedges, used as a brute-force oracle for the subgroup route.
"""

from __future__ import annotations

from .group import product_intersection_size, core, intersect
from .hypergraph import Hypergraph
from .hypermap import Hypermap, underlying_hypergraph


def flag_condition(hm: Hypermap) -> bool:
    """True iff H and K intersect in exactly {1, g2}.

    Equivalent to every hypervertex-hyperedge pair being incident with at
    most two flags, which is forced when the Levi graph is simple.
    """
    expected = {0, hm.triple.g2}
    return set(intersect(hm.H, hm.K).members) == expected


def edge_multiplicity(hm: Hypermap) -> int:
    """Number of hyperedges incident with every hypervertex of a given
    hyperedge, via the product-set intersection [M : K]."""
    return product_intersection_size(hm.group, hm.H, hm.K) // hm.K.size


def edge_multiplicity_direct(hm: Hypermap) -> int:
    """Brute-force oracle for :func:`edge_multiplicity`.

    Builds the underlying hypergraph, takes the vertex set S of edge 0
    (the coset K itself) and counts the edges whose vertex set contains S.
    """
    hg = underlying_hypergraph(hm)
    S = set(hg.edges[0])
    return sum(1 for e in hg.edges if S.issubset(e))


def proviso_ok(hm: Hypermap) -> bool:
    """The standing assumption k >= 3 when m = 2 (rules out cycles in a
    sphere).  Reported, not enforced: the classifier applies it as a
    filter."""
    k, m, _ = hm.type.as_tuple()
    return not (m == 2 and k < 3)


def is_simple(hm: Hypermap) -> bool:
    """True iff the underlying hypergraph is simple, i.e. the product-set
    intersection collapses to K (edge multiplicity 1)."""
    return edge_multiplicity(hm) == 1


def hypergraph_simple_direct(hg: Hypergraph) -> bool:
    """Brute-force simplicity check on an explicit hypergraph: no edge
    occurrence may repeat or be contained in a different occurrence."""
    sets = [set(e) for e in hg.edges]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a.issubset(b):
                return False
    return True


def faithful_on_vertices(hm: Hypermap) -> bool:
    """True iff the group acts faithfully on hypervertices, i.e. H has
    trivial core."""
    return core(hm.group, hm.H).size == 1
