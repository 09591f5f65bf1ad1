"""The seven families of degree-p^2 affine permutation groups G1..G7 and
the catalog of known simple regular hypermaps H1..H6 living on them.

Each family is T . <linear part>, where T = Z_p x Z_p is the translation
subgroup acting regularly on the p^2 points of the plane.  The linear
generators are:

  G1 (p = 2, n = 3):        x = ||1,1;1,0||,      y = ||0,1;1,0||
  G2 (n | p+1, n >= 3):     x = ||e,f*theta;f,e||, y = ||1,0;0,-1||
                            with e^2 - theta*f^2 = 1 and e + f*alpha of
                            multiplicative order n in GF(p^2)
  G3 (n | p-1, n >= 3):     x = ||t,0;0,t^-1||,   y = ||0,1;1,0||   (|t| = n)
  G4 (n = 2):               x = ||-1,0;0,-1||,    y = ||1,0;0,-1||
  G5 (n = p):               x = ||1,1;0,1||,      y = ||-1,0;0,1||
  G6 (n = 2p):              x1 = ||1,1;0,1||, x2 = ||-1,0;0,-1||, y = ||1,0;0,-1||
  G7 (n = p):               x = ||1,1;0,1||,      y = ||-1,0;0,-1||

The group order is 2*n*p^2 throughout (2*p^3 for G7, whose n equals p).
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineMap
from .errors import InternalError, InvalidFamilyParams, NotInvolution, ParityMismatch
from .gf import diag_param, is_prime, norm_one_element, primitive_root
from .group import DEFAULT_CAP, GroupTable, SubgroupHandle, group_generate
from .hypermap import InvolutionTriple

FAMILIES = ("G1", "G2", "G3", "G4", "G5", "G6", "G7")


@dataclass(frozen=True)
class FamilyParams:
    """A legal (family, p, n) combination."""

    family: str
    p: int
    n: int

    def __post_init__(self):
        validate_params(self.family, self.p, self.n)

    @property
    def order(self) -> int:
        return 2 * self.n * self.p * self.p

    @property
    def degree(self) -> int:
        return self.p * self.p


def validate_params(family: str, p: int, n: int) -> None:
    if family not in FAMILIES:
        raise InvalidFamilyParams(f"unknown family {family!r}")
    if not is_prime(p):
        raise InvalidFamilyParams(f"p = {p} is not prime")
    if family == "G1":
        if p != 2 or n != 3:
            raise InvalidFamilyParams("G1 requires p = 2 and n = 3")
        return
    if p < 3:
        raise InvalidFamilyParams(f"{family} requires p >= 3")
    if family == "G2" and (n < 3 or (p + 1) % n != 0):
        raise InvalidFamilyParams("G2 requires n | p+1, n >= 3")
    if family == "G3" and (n < 3 or (p - 1) % n != 0):
        raise InvalidFamilyParams("G3 requires n | p-1, n >= 3")
    if family == "G4" and n != 2:
        raise InvalidFamilyParams("G4 requires n = 2")
    if family == "G5" and n != p:
        raise InvalidFamilyParams("G5 requires n = p")
    if family == "G6" and n != 2 * p:
        raise InvalidFamilyParams("G6 requires n = 2p")
    if family == "G7" and n != p:
        raise InvalidFamilyParams("G7 requires n = p")


def legal_n_values(family: str, p: int) -> list[int]:
    """All n making (family, p, n) legal, in increasing order."""
    if family == "G1":
        return [3] if p == 2 else []
    if p < 3 or not is_prime(p):
        return []
    if family == "G2":
        return [n for n in range(3, p + 2) if (p + 1) % n == 0]
    if family == "G3":
        return [n for n in range(3, p) if (p - 1) % n == 0]
    if family == "G4":
        return [2]
    if family in ("G5", "G7"):
        return [p]
    if family == "G6":
        return [2 * p]
    raise InvalidFamilyParams(f"unknown family {family!r}")


def legal_params(p: int) -> list[FamilyParams]:
    """Every legal FamilyParams at this prime, in (family, n) order."""
    if not is_prime(p):
        raise InvalidFamilyParams(f"p = {p} is not prime")
    out = []
    for fam in FAMILIES:
        for n in legal_n_values(fam, p):
            out.append(FamilyParams(fam, p, n))
    return out


def family_generators(params: FamilyParams) -> list[tuple[str, AffineMap]]:
    """Named affine generators in canonical order (translations first)."""
    p, n = params.p, params.n
    gens: list[tuple[str, AffineMap]] = [
        ("t10", AffineMap.translation(p, 1, 0)),
        ("t01", AffineMap.translation(p, 0, 1)),
    ]
    fam = params.family
    if fam == "G1":
        gens.append(("x", AffineMap.linear(2, 1, 1, 1, 0)))
        gens.append(("y", AffineMap.linear(2, 0, 1, 1, 0)))
    elif fam == "G2":
        theta = primitive_root(p)
        e, f = norm_one_element(p, n)
        gens.append(("x", AffineMap.linear(p, e, f * theta, f, e)))
        gens.append(("y", AffineMap.linear(p, 1, 0, 0, -1)))
    elif fam == "G3":
        t = diag_param(p, n)
        gens.append(("x", AffineMap.linear(p, t, 0, 0, pow(t, p - 2, p))))
        gens.append(("y", AffineMap.linear(p, 0, 1, 1, 0)))
    elif fam == "G4":
        gens.append(("x", AffineMap.linear(p, -1, 0, 0, -1)))
        gens.append(("y", AffineMap.linear(p, 1, 0, 0, -1)))
    elif fam == "G5":
        gens.append(("x", AffineMap.linear(p, 1, 1, 0, 1)))
        gens.append(("y", AffineMap.linear(p, -1, 0, 0, 1)))
    elif fam == "G6":
        gens.append(("x1", AffineMap.linear(p, 1, 1, 0, 1)))
        gens.append(("x2", AffineMap.linear(p, -1, 0, 0, -1)))
        gens.append(("y", AffineMap.linear(p, 1, 0, 0, -1)))
    elif fam == "G7":
        gens.append(("x", AffineMap.linear(p, 1, 1, 0, 1)))
        gens.append(("y", AffineMap.linear(p, -1, 0, 0, -1)))
    return gens


class FamilyGroup:
    """A built family: the GroupTable plus named generator indices."""

    def __init__(self, params: FamilyParams, group: GroupTable,
                 named: dict[str, int], affine: dict[str, AffineMap]):
        self.params = params
        self.group = group
        self.named = named
        self.affine = affine

    def element_index(self, m: AffineMap) -> int:
        """Index of an affine map's permutation in the group."""
        return self.group.index[m.to_permutation()]

    def origin_stabilizer(self) -> SubgroupHandle:
        members = [i for i, e in enumerate(self.group.elements) if e.images[0] == 0]
        return SubgroupHandle(self.group, members)

    def __repr__(self) -> str:
        pr = self.params
        return f"FamilyGroup({pr.family}, p={pr.p}, n={pr.n}, order={self.group.order})"


def build_family(params: FamilyParams, cap: int = DEFAULT_CAP) -> FamilyGroup:
    """Enumerate the family as a permutation group of degree p^2."""
    named_affine = family_generators(params)
    perms = [m.to_permutation() for _, m in named_affine]
    group = group_generate(perms, cap=cap)
    if group.order != params.order:
        raise InternalError(
            f"{params.family} at p={params.p}, n={params.n}: enumerated order "
            f"{group.order}, expected {params.order}"
        )
    named = {name: group.index[m.to_permutation()] for name, m in named_affine}
    return FamilyGroup(params, group, named, dict(named_affine))


# -- catalog hypermap triples ---------------------------------------------

TRIPLE_LABELS = ("H1", "H21", "H22", "H31", "H32", "H4", "H5", "H6")

_LABEL_FAMILY = {
    "H1": "G1", "H21": "G2", "H22": "G2", "H31": "G3", "H32": "G3",
    "H4": "G4", "H5": "G5", "H6": "G6",
}
# None = any legal n for the family
_LABEL_PARITY = {"H21": 0, "H31": 0, "H22": 1, "H32": 1}


def label_family(label: str) -> str:
    if label not in TRIPLE_LABELS:
        raise InvalidFamilyParams(f"unknown hypermap label {label!r}")
    return _LABEL_FAMILY[label]


def label_n_values(label: str, p: int) -> list[int]:
    """Legal n for this label at this prime (parity filter applied)."""
    fam = label_family(label)
    ns = legal_n_values(fam, p)
    parity = _LABEL_PARITY.get(label)
    if parity is not None:
        ns = [n for n in ns if n % 2 == parity]
    return ns


def triple_maps(label: str, params: FamilyParams) -> tuple[AffineMap, AffineMap, AffineMap]:
    """The (g0, g1, g2) affine maps of a catalog hypermap."""
    fam = label_family(label)
    if params.family != fam:
        raise InvalidFamilyParams(f"{label} lives on {fam}, not {params.family}")
    parity = _LABEL_PARITY.get(label)
    if parity is not None and params.n % 2 != parity:
        want = "even" if parity == 0 else "odd"
        raise ParityMismatch(f"{label} requires n {want}, got n = {params.n}")
    p, n = params.p, params.n
    g = dict(family_generators(params))
    x = g.get("x")
    y = g["y"]
    t = lambda e, f: AffineMap.translation(p, e, f)
    if label == "H1":
        return (t(1, 1) * y, x * y, y)
    if label == "H21":
        return (t(1, 0) * x ** (n // 2) * y, x * y, y)
    if label == "H22":
        return (t(0, 1) * y, x * y, y)
    if label == "H31":
        return (t(1, 1) * x ** (n // 2) * y, x * y, y)
    if label == "H32":
        return (t(1, -1) * y, x * y, y)
    if label == "H4":
        return (t(1, 1) * x, y, x)
    if label == "H5":
        return (t(1, 0) * y, x * y, y)
    if label == "H6":
        x1, x2 = g["x1"], g["x2"]
        return (t(1, 0) * x2 * y, x1 * x2 * y, y)
    raise InvalidFamilyParams(f"unknown hypermap label {label!r}")  # pragma: no cover


def known_triple(label: str, p: int, n: int | None = None,
                 cap: int = DEFAULT_CAP) -> tuple[FamilyGroup, InvolutionTriple]:
    """Build a catalog hypermap's group and involution triple.

    When the family admits several n, the label's parity constraint picks
    the admissible ones and n must be given unless exactly one is legal.
    """
    fam = label_family(label)
    if n is None:
        options = label_n_values(label, p)
        if not options:
            raise InvalidFamilyParams(f"{label} has no legal n at p = {p}")
        if len(options) > 1:
            raise InvalidFamilyParams(
                f"{label} at p = {p} needs an explicit n from {options}"
            )
        n = options[0]
    params = FamilyParams(fam, p, n)
    maps = triple_maps(label, params)
    fg = build_family(params, cap=cap)
    indices = []
    for which, m in zip("012", maps):
        perm = m.to_permutation()
        if perm.order() != 2:
            raise NotInvolution(f"{label}: g{which} has order {perm.order()}, not 2")
        indices.append(fg.group.index[perm])
    return fg, InvolutionTriple(*indices)
