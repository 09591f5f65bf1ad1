"""Search for simple regular hypermaps on a given group and reduction of
the survivors to equivalence-class representatives.

The search enumerates triples (g0, g1, g2) of involutions subject to, in
order of increasing cost: H = <g1, g2> having the requested index omega,
the triple generating the whole group, the flag condition H meet K = {1, g2},
the proviso (k >= 3 whenever m = 2), and simplicity of the underlying
hypergraph.  To avoid cubing the involution count, g2 ranges only over
representatives of conjugacy classes of involutions while (g0, g1) range
over all involutions; conjugating a whole triple never changes any of the
conditions nor its equivalence class, so no class is lost.

Two triples are equivalent when the slotwise assignment extends to a group
automorphism; this is decided constructively by propagating a partial map
over the Cayley graph rather than by computing the automorphism group.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import NotPrime, VerificationFailure
from .families import (
    FamilyParams,
    TRIPLE_LABELS,
    build_family,
    known_triple,
    label_family,
    label_n_values,
    legal_params,
)
from .gf import is_prime
from .group import DEFAULT_CAP, GroupTable, SubgroupHandle, core
from .group import product_intersection_size
from .hypergraph import hypergraph_to_dict
from .hypermap import Hypermap, InvolutionTriple, hypermap_build, underlying_hypergraph
from .simplicity import edge_multiplicity, faithful_on_vertices, flag_condition
from .simplicity import is_simple, proviso_ok


def involutions(G: GroupTable) -> list[int]:
    """Indices of all elements of order exactly 2, ascending."""
    return [i for i in range(G.order) if G.order_of(i) == 2]


def involution_class_reps(G: GroupTable) -> list[int]:
    """Least-index representatives of the conjugacy classes of involutions."""
    reps = []
    seen: set[int] = set()
    for i in involutions(G):
        if i in seen:
            continue
        reps.append(i)
        seen.update(G.conj(i, g) for g in range(G.order))
    return reps


@dataclass(frozen=True)
class TripleRecord:
    """One surveyed triple: a generating involution triple of the right
    index, with every condition evaluated independently."""

    triple: InvolutionTriple
    k: int
    m: int
    n: int
    edge_multiplicity: int
    flag_condition: bool
    simple: bool
    proviso: bool
    faithful: bool

    @property
    def passes(self) -> bool:
        return self.flag_condition and self.simple and self.proviso


def _survey_pairs(G: GroupTable, omega: int, prune: bool):
    """(g2, g1, H-members) for every pair with [G : <g1,g2>] = omega."""
    if G.order % omega != 0:
        return [], []
    target = G.order // omega
    invs = involutions(G)
    g2_list = involution_class_reps(G) if prune else invs
    pairs = []
    for g2 in g2_list:
        for g1 in invs:
            members = G.closure([g1, g2])
            if len(members) == target:
                pairs.append((g2, g1, members))
    return pairs, invs


def _survey_chunk(G: GroupTable, pairs, invs) -> list[TripleRecord]:
    out = []
    for g2, g1, h_members in pairs:
        H = SubgroupHandle(G, h_members)
        h_set = H.member_set
        k = G.order_of(G.mul(g1, g2))
        h_core_trivial = core(G, H).size == 1
        for g0 in invs:
            generated = G.closure([g0, g1, g2], seed=h_members)
            if len(generated) != G.order:
                continue
            K = SubgroupHandle(G, G.closure([g2, g0]))
            m = G.order_of(G.mul(g2, g0))
            n = G.order_of(G.mul(g0, g1))
            flag = (h_set & K.member_set) == {0, g2}
            mult = product_intersection_size(G, H, K) // K.size
            out.append(
                TripleRecord(
                    triple=InvolutionTriple(g0, g1, g2),
                    k=k,
                    m=m,
                    n=n,
                    edge_multiplicity=mult,
                    flag_condition=flag,
                    simple=mult == 1,
                    proviso=not (m == 2 and k < 3),
                    faithful=h_core_trivial,
                )
            )
    return out


def survey_triples(G: GroupTable, omega: int, prune: bool = True,
                   workers: int = 1) -> list[TripleRecord]:
    """All generating involution triples with [G : <g1,g2>] = omega, each
    carrying its full condition ledger.  With ``prune`` the g2 slot runs
    over involution-class representatives only.

    Results are sorted by (g0, g1, g2), so the output does not depend on
    the worker count.
    """
    pairs, invs = _survey_pairs(G, omega, prune)
    if workers <= 1 or len(pairs) < 2:
        records = _survey_chunk(G, pairs, invs)
    else:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ch: _survey_chunk(G, ch, invs), chunks))
        records = [r for part in parts for r in part]
    records.sort(key=lambda r: r.triple.as_tuple())
    return records


def enumerate_candidates(G: GroupTable, omega: int, prune: bool = True,
                         workers: int = 1) -> list[TripleRecord]:
    """Surveyed triples that pass the flag condition, simplicity and the
    proviso."""
    return [r for r in survey_triples(G, omega, prune, workers) if r.passes]


def conjugate_triple(G: GroupTable, t: InvolutionTriple, g: int) -> InvolutionTriple:
    return InvolutionTriple(G.conj(t.g0, g), G.conj(t.g1, g), G.conj(t.g2, g))


def triples_equivalent(G: GroupTable, t1: InvolutionTriple,
                       t2: InvolutionTriple) -> bool:
    """Whether g_i -> g_i' extends to an automorphism of G.

    Propagates phi over the Cayley graph of (G, t1): phi(1) = 1,
    phi(g * s_i) = phi(g) * s_i'.  The extension exists iff no element
    receives two images and the final map is a bijection; both triples are
    assumed to generate G.
    """
    a = t1.as_tuple()
    b = t2.as_tuple()
    for s1, s2 in zip(a, b):
        if G.order_of(s1) != G.order_of(s2):
            return False
    # slotwise product orders are automorphism invariants; cheap reject
    for (i, j) in ((1, 2), (2, 0), (0, 1)):
        if G.order_of(G.mul(a[i], a[j])) != G.order_of(G.mul(b[i], b[j])):
            return False
    phi = [-1] * G.order
    phi[0] = 0
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        g = queue[qpos]
        qpos += 1
        fg = phi[g]
        for s1, s2 in zip(a, b):
            u = G.mul(g, s1)
            v = G.mul(fg, s2)
            if phi[u] == -1:
                phi[u] = v
                queue.append(u)
            elif phi[u] != v:
                return False
    return -1 not in phi and len(set(phi)) == G.order


@dataclass
class ClassEntry:
    """An equivalence class of candidate triples."""

    triple: InvolutionTriple  # least conjugate in the class
    class_size: int
    hypermap: Hypermap
    record: TripleRecord


@dataclass
class ClassificationReport:
    descriptor: dict
    omega: int
    group_order: int
    degree: int
    entries: list[ClassEntry]

    @property
    def total_candidates(self) -> int:
        return sum(e.class_size for e in self.entries)

    @property
    def class_sizes(self) -> list[int]:
        return [e.class_size for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "source": self.descriptor,
            "omega": self.omega,
            "order": self.group_order,
            "degree": self.degree,
            "total_candidates": self.total_candidates,
            "class_sizes": self.class_sizes,
            "representatives": [_entry_dict(e) for e in self.entries],
        }


def _entry_dict(entry: ClassEntry) -> dict:
    hm = entry.hypermap
    G = hm.group
    t = entry.triple
    return {
        "triple": {
            "g0": {"index": t.g0, "cycles": G.elements[t.g0].cycle_string()},
            "g1": {"index": t.g1, "cycles": G.elements[t.g1].cycle_string()},
            "g2": {"index": t.g2, "cycles": G.elements[t.g2].cycle_string()},
        },
        "type": list(hm.type.as_tuple()),
        "num_vertices": hm.num_vertices,
        "num_edges": hm.num_edges,
        "num_faces": hm.num_faces,
        "num_flags": hm.num_flags,
        "euler": hm.euler,
        "orientable": hm.orientable,
        "genus_orientable": hm.genus_orientable,
        "genus_nonorientable": hm.genus_nonorientable,
        "edge_multiplicity": entry.record.edge_multiplicity,
        "class_size": entry.class_size,
        "conditions": condition_ledger(hm, omega=hm.num_vertices),
        "hypergraph": hypergraph_to_dict(underlying_hypergraph(hm)),
    }


def condition_ledger(hm: Hypermap, omega: int | None = None) -> dict:
    """Every search condition evaluated independently on a built hypermap."""
    return {
        "involutions": True,  # enforced by construction
        "generates": True,
        "index_matches": hm.num_vertices == omega if omega is not None else None,
        "flag_condition": flag_condition(hm),
        "simple": is_simple(hm),
        "proviso": proviso_ok(hm),
        "faithful_on_vertices": faithful_on_vertices(hm),
        "stabilizer_dihedral": hm.dihedral_ok,
    }


def classify(G: GroupTable, omega: int, prune: bool = True, workers: int = 1,
             descriptor: dict | None = None) -> ClassificationReport:
    """Candidates partitioned into automorphism-equivalence classes.

    Each class is canonicalized to its lexicographically least conjugate
    triple and its size counts all candidate triples in the class, so the
    report is identical whether or not g2 pruning was applied.
    """
    cands = enumerate_candidates(G, omega, prune, workers)
    classes: list[list[TripleRecord]] = []
    for r in cands:
        for cls in classes:
            if triples_equivalent(G, cls[0].triple, r.triple):
                cls.append(r)
                break
        else:
            classes.append([r])
    raw = []
    for cls in classes:
        closure: set[tuple[int, int, int]] = set()
        for r in cls:
            t = r.triple
            closure.update(
                conjugate_triple(G, t, g).as_tuple() for g in range(G.order)
            )
        raw.append((min(closure), len(closure), cls[0]))
    raw.sort(key=lambda item: item[0])
    entries = []
    for rep_tuple, size, member in raw:
        triple = InvolutionTriple(*rep_tuple)
        hm = hypermap_build(G, triple)
        record = TripleRecord(
            triple=triple,
            k=hm.type.k,
            m=hm.type.m,
            n=hm.type.n,
            edge_multiplicity=edge_multiplicity(hm),
            flag_condition=flag_condition(hm),
            simple=is_simple(hm),
            proviso=proviso_ok(hm),
            faithful=faithful_on_vertices(hm),
        )
        entries.append(ClassEntry(triple, size, hm, record))
    return ClassificationReport(
        descriptor=descriptor or {},
        omega=omega,
        group_order=G.order,
        degree=G.degree,
        entries=entries,
    )


# -- verification of the built-in catalog -----------------------------------


def verify_catalog(p: int, cap: int = DEFAULT_CAP, strict: bool = False) -> dict:
    """Check every applicable catalog hypermap at this prime.

    For each label H1..H6 and each legal n, the triple must consist of
    involutions, generate its group, have vertex count p^2, satisfy the
    flag condition and the proviso, and have edge multiplicity 1.  For
    p >= 3 the G7 family is additionally classified and must carry no
    simple hypermap at order p^2.  Inapplicable labels get an explicit
    not-applicable entry.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    entries = []
    ok = True
    omega = p * p
    for label in TRIPLE_LABELS:
        fam = label_family(label)
        ns = label_n_values(label, p)
        if not ns:
            entries.append(
                {
                    "label": label,
                    "family": fam,
                    "n": None,
                    "status": "not_applicable",
                    "reason": f"no legal n for {label} at p = {p}",
                }
            )
            continue
        for n in ns:
            fg, triple = known_triple(label, p, n, cap=cap)
            hm = hypermap_build(fg.group, triple)
            ledger = condition_ledger(hm, omega=omega)
            passed = (
                ledger["index_matches"]
                and ledger["flag_condition"]
                and ledger["simple"]
                and ledger["proviso"]
            )
            ok = ok and passed
            entries.append(
                {
                    "label": label,
                    "family": fam,
                    "n": n,
                    "status": "pass" if passed else "fail",
                    "order": fg.group.order,
                    "type": list(hm.type.as_tuple()),
                    "edge_multiplicity": edge_multiplicity(hm),
                    "conditions": ledger,
                }
            )
            if strict and not passed:
                failed = [key for key, val in ledger.items() if val is False]
                raise VerificationFailure(
                    f"{label} (p={p}, n={n}) failed: {failed[0]}"
                )
    if p >= 3:
        fg7 = build_family(FamilyParams("G7", p, p), cap=cap)
        report = classify(fg7.group, omega)
        g7_ok = len(report.entries) == 0
        ok = ok and g7_ok
        g7 = {
            "status": "pass" if g7_ok else "fail",
            "representatives": len(report.entries),
            "order": fg7.group.order,
        }
        if strict and not g7_ok:
            raise VerificationFailure(
                f"G7 (p={p}) unexpectedly carries a simple hypermap"
            )
    else:
        g7 = {"status": "not_applicable", "reason": "G7 requires p >= 3"}
    return {"p": p, "entries": entries, "g7": g7, "ok": ok}


def report_json(obj: dict) -> str:
    """Canonical JSON serialization used for all machine output."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
