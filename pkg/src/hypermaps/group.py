"""Fully enumerated finite permutation groups with indexed multiplication.

A :class:`GroupTable` stores every element of a permutation group in BFS
discovery order (identity first, fixed generator order), so that all
downstream output is deterministic.  Multiplication by element index is
memoized in a dense table once the group is touched, provided its order is
at most ``DENSE_TABLE_LIMIT``; larger groups fall back to composing
permutations on demand.

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from .errors import CapExceeded, DegreeMismatch, InternalError
from .perm import Permutation

DEFAULT_CAP = 200_000
DENSE_TABLE_LIMIT = 4096


class GroupTable:
    """A finite permutation group enumerated as an indexed element list.

    ``elements[0]`` is the identity.  ``mul(i, j)`` is the index of
    ``elements[i] * elements[j]`` (apply ``i`` first).  Construct with
    :func:`group_generate`.
    """

    def __init__(self, elements, index, generators, parents):
        self.elements: list[Permutation] = elements
        self.index: dict[Permutation, int] = index
        self.generators: list[int] = generators
        self.degree: int = elements[0].degree
        self.order: int = len(elements)
        self._parents = parents  # (parent_index, generator_slot) per element
        self._table: np.ndarray | None = None
        self._inv: np.ndarray | None = None
        self._orders: list[int | None] = [None] * self.order

    # -- multiplication ------------------------------------------------

    @property
    def table(self) -> np.ndarray | None:
        """Dense multiplication table, or None for oversized groups."""
        if self._table is None and self.order <= DENSE_TABLE_LIMIT:
            self._build_table()
        return self._table

    def _build_table(self) -> None:
        n = self.order
        dtype = np.uint16 if n < 65536 else np.uint32
        tbl = np.empty((n, n), dtype=dtype)
        tbl[0] = np.arange(n, dtype=dtype)
        gen_elems = sorted({g for g in self.generators})
        for gi in gen_elems:
            pg = self.elements[gi]
            row = [0] * n
            for j, pj in enumerate(self.elements):
                row[j] = self.index[pg * pj]
            tbl[gi] = row
        gen_done = set(gen_elems)
        # elements[i] = elements[a] * gen_slot, so row_i = row_a[row_gen]
        for i in range(1, n):
            if i in gen_done:
                continue
            a, slot = self._parents[i]
            tbl[i] = tbl[a][tbl[self.generators[slot]]]
        self._table = tbl

    def mul(self, i: int, j: int) -> int:
        t = self.table
        if t is not None:
            return int(t[i, j])
        return self.index[self.elements[i] * self.elements[j]]

    def inv(self, i: int) -> int:
        if self._inv is None:
            t = self.table
            if t is not None:
                self._inv = np.argmax(t == 0, axis=1)
            else:
                self._inv = np.array(
                    [self.index[e.inverse()] for e in self.elements], dtype=np.int64
                )
        return int(self._inv[i])

    def power(self, i: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(i), -e)
        acc = 0
        for _ in range(e):
            acc = self.mul(acc, i)
        return acc

    def conj(self, i: int, g: int) -> int:
        """Index of g^-1 * elements[i] * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def order_of(self, i: int) -> int:
        o = self._orders[i]
        if o is None:
            o = self.elements[i].order()
            self._orders[i] = o
        return o

    def identity_index(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, degree={self.degree})"

    # -- closure --------------------------------------------------------

    def closure(self, gens: Sequence[int], seed: Iterable[int] = (0,)) -> tuple[int, ...]:
        """Sorted indices of the subgroup generated by ``gens``.

        ``seed`` may pre-populate the search with indices already known to
        lie in the target subgroup (it must contain the identity's index).
        """
        gens = [int(g) for g in gens]
        t = self.table
        if t is not None:
            mask = np.zeros(self.order, dtype=bool)
            seed_arr = np.fromiter(set(seed), dtype=np.int64)
            mask[seed_arr] = True
            frontier = seed_arr
            garr = np.array(gens, dtype=np.int64)
            while frontier.size and garr.size:
                prods = np.unique(t[np.ix_(frontier, garr)])
                new = prods[~mask[prods]]
                mask[new] = True
                frontier = new
            return tuple(int(x) for x in np.nonzero(mask)[0])
        members = set(seed)
        frontier = list(members)
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    b = self.mul(a, s)
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
            frontier = nxt
        return tuple(sorted(members))


class SubgroupHandle:
    """A subgroup of a parent GroupTable, stored as sorted element indices."""

    __slots__ = ("parent", "members", "member_set")

    def __init__(self, parent: GroupTable, members: Sequence[int]):
        self.parent = parent
        self.members = tuple(sorted(int(m) for m in set(members)))
        self.member_set = frozenset(self.members)
        if parent.order % len(self.members) != 0:
            raise InternalError(
                f"subgroup size {len(self.members)} does not divide {parent.order}"
            )

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"SubgroupHandle(size={self.size})"


class ElementSet:
    """A plain subset of a group's element indices (not necessarily closed)."""

    __slots__ = ("parent", "members", "member_set")

    def __init__(self, parent: GroupTable, members: Sequence[int]):
        self.parent = parent
        self.members = tuple(sorted(int(m) for m in set(members)))
        self.member_set = frozenset(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.member_set

    def __repr__(self) -> str:
        return f"ElementSet(size={self.size})"


class CosetPartition:
    """Right cosets H\\G in canonical order (block 0 is H itself; blocks
    ordered by least element index)."""

    __slots__ = ("blocks", "coset_of")

    def __init__(self, blocks, coset_of):
        self.blocks: list[tuple[int, ...]] = blocks
        self.coset_of = coset_of  # element index -> block number

    @property
    def count(self) -> int:
        return len(self.blocks)


def group_generate(gens: Sequence[Permutation], cap: int = DEFAULT_CAP) -> GroupTable:
    """Breadth-first closure of the generators, identity first.

    Raises CapExceeded once more than ``cap`` elements are discovered, and
    DegreeMismatch for generators of unequal degree.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch("generators have mixed degrees")
    ident = Permutation.identity(degree)
    elements = [ident]
    index = {ident: 0}
    parents = [(-1, -1)]
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        a = queue[qpos]
        qpos += 1
        pa = elements[a]
        for slot, g in enumerate(gens):
            prod = pa * g
            if prod not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"group closure exceeded cap {cap}")
                index[prod] = len(elements)
                elements.append(prod)
                parents.append((a, slot))
                queue.append(index[prod])
    gen_indices = [index[g] for g in gens]
    return GroupTable(elements, index, gen_indices, parents)


def subgroup_generate(G: GroupTable, gens: Sequence[int]) -> SubgroupHandle:
    """Subgroup generated by the given element indices."""
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"element index {g} out of range")
    return SubgroupHandle(G, G.closure(gens))


def right_cosets(G: GroupTable, H: SubgroupHandle) -> CosetPartition:
    """Partition of G into right cosets Hg."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    blocks: list[tuple[int, ...]] = []
    t = G.table
    hm = np.array(H.members, dtype=np.int64)
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        if t is not None:
            blk = t[hm, g].astype(np.int64)
        else:
            blk = np.array([G.mul(h, g) for h in H.members], dtype=np.int64)
        coset_of[blk] = len(blocks)
        blocks.append(tuple(int(x) for x in np.sort(blk)))
    return CosetPartition(blocks, coset_of)


def core(G: GroupTable, H: SubgroupHandle) -> SubgroupHandle:
    """Largest normal subgroup of G inside H.

    Computed as the kernel of the right-coset action: the elements whose
    right multiplication fixes every coset block Hx.
    """
    part = right_cosets(G, H)
    reps = [blk[0] for blk in part.blocks]
    t = G.table
    if t is not None:
        mask = np.ones(G.order, dtype=bool)
        for r in reps:
            mask &= part.coset_of[t[r].astype(np.int64)] == part.coset_of[r]
        members = [int(x) for x in np.nonzero(mask)[0]]
    else:
        members = [
            g
            for g in range(G.order)
            if all(part.coset_of[G.mul(r, g)] == part.coset_of[r] for r in reps)
        ]
    return SubgroupHandle(G, members)


def conjugate_subgroup(H: SubgroupHandle, x: int) -> SubgroupHandle:
    """The subgroup x^-1 H x."""
    G = H.parent
    t = G.table
    if t is not None:
        ix = G.inv(x)
        a = t[ix, np.array(H.members, dtype=np.int64)].astype(np.int64)
        members = t[a, x]
    else:
        members = [G.conj(h, x) for h in H.members]
    return SubgroupHandle(G, [int(m) for m in members])


SetLike = Union[SubgroupHandle, ElementSet]


def set_product(K: SetLike, S: SetLike) -> ElementSet:
    """The product set {k*s : k in K, s in S}."""
    G = K.parent
    if S.parent is not G:
        raise ValueError("operands belong to different groups")
    t = G.table
    if t is not None:
        km = np.array(K.members, dtype=np.int64)
        sm = np.array(S.members, dtype=np.int64)
        members = np.unique(t[np.ix_(km, sm)])
        return ElementSet(G, [int(m) for m in members])
    return ElementSet(G, {G.mul(k, s) for k in K.members for s in S.members})


def intersect(A: SetLike, B: SetLike) -> ElementSet:
    """Sorted-set intersection of two element sets."""
    if A.parent is not B.parent:
        raise ValueError("operands belong to different groups")
    return ElementSet(A.parent, A.member_set & B.member_set)


def is_normal(G: GroupTable, H: SubgroupHandle) -> bool:
    return all(conjugate_subgroup(H, g).member_set == H.member_set
               for g in G.generators)


def product_intersection_size(G: GroupTable, H: SubgroupHandle, K: SubgroupHandle) -> int:
    """Size of M, the intersection over x in K of the product sets K*(H^x).

    M always contains K and is a union of right cosets of K.  Membership of
    g in K*(H^x) is decided as: some k in K has k^-1 * g in H^x.  The
    running intersection starts from K*H (the x = identity term) and is
    filtered by each remaining x in K, stopping early once it has shrunk to
    K itself.
    """
    t = G.table
    km = list(K.members)
    if t is not None:
        km_arr = np.array(km, dtype=np.int64)
        hm_arr = np.array(H.members, dtype=np.int64)
        M = np.unique(t[np.ix_(km_arr, hm_arr)]).astype(np.int64)
        inv_k = np.array([G.inv(k) for k in km], dtype=np.int64)
        for x in km:
            if x == 0 or M.size == len(km):
                continue
            hx = conjugate_subgroup(H, x)
            hx_mask = np.zeros(G.order, dtype=bool)
            hx_mask[np.array(hx.members, dtype=np.int64)] = True
            prods = t[np.ix_(inv_k, M)]
            M = M[hx_mask[prods].any(axis=0)]
        size = int(M.size)
    else:
        M = {G.mul(k, h) for k in km for h in H.members}
        inv_k = [G.inv(k) for k in km]
        for x in km:
            if x == 0 or len(M) == len(km):
                continue
            hx = conjugate_subgroup(H, x).member_set
            M = {g for g in M if any(G.mul(ik, g) in hx for ik in inv_k)}
        size = len(M)
    if size % len(km) != 0:
        raise InternalError(
            f"product intersection size {size} not a multiple of |K| = {len(km)}"
        )
    return size
