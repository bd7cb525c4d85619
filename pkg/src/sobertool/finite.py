"""
Explicit finite T0 spaces and brute-force classifiers.

A space is stored by its closed sets. Everything here is computed from the
definitions by enumeration; on a finite carrier these computations are the
ground truth the symbolic gallery and the power-space constructions are
checked against.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import order
from .errors import InputError, SizeError
from .order import FinitePoset, check_size, set_label

RUDIN_SEED_SIZE = 3
HOMEOMORPHISM_CAP = 8


def _lattice_closure(masks: Iterable[int]) -> set:
    """Close a family of bitmasks under pairwise union and intersection."""
    family = set(masks)
    frontier = list(family)
    while frontier:
        new = []
        current = list(family)
        for a in frontier:
            for b in current:
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        new.append(c)
        frontier = new
    return family


class FiniteSpace:
    """A finite T0 space given by its family of closed sets."""

    def __init__(self, points: Iterable[str], closed: Iterable[Iterable[str]], generate: bool = False):
        points = tuple(points)
        if not points:
            raise InputError("the empty space is not accepted")
        if len(set(points)) != len(points):
            raise InputError("duplicate point identifiers")
        self.points = points
        self._bit = {p: 1 << i for i, p in enumerate(points)}
        self.full = (1 << len(points)) - 1
        masks = {self.mask(c) for c in closed}
        if generate:
            masks = _lattice_closure(masks | {0, self.full})
        else:
            self._validate(masks)
        self._masks = tuple(sorted(masks, key=lambda m: (bin(m).count("1"), m)))
        self._mask_set = frozenset(masks)
        self._pc = {}
        for p in points:
            b = self._bit[p]
            self._pc[p] = min((m for m in masks if m & b), key=lambda m: bin(m).count("1"))
        self._check_t0()
        self._spec = None

    def _validate(self, masks):
        if 0 not in masks or self.full not in masks:
            raise InputError("the empty set and the whole carrier must be closed")
        ms = list(masks)
        for a, b in itertools.combinations(ms, 2):
            if a | b not in masks or a & b not in masks:
                raise InputError(
                    f"closed family not closed under union/intersection: "
                    f"{set_label(self.members(a))}, {set_label(self.members(b))}"
                )

    def _check_t0(self):
        seen = {}
        for p, m in self._pc.items():
            if m in seen:
                raise InputError(f"not T0: points {seen[m]!r} and {p!r} have the same closure")
            seen[m] = p

    # conversions -------------------------------------------------------

    def mask(self, A: Iterable[str]) -> int:
        m = 0
        for a in A:
            try:
                m |= self._bit[a]
            except KeyError:
                raise InputError(f"unknown point {a!r}") from None
        return m

    def members(self, m: int) -> frozenset:
        return frozenset(p for p in self.points if m & self._bit[p])

    # queries -------------------------------------------------------------

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"FiniteSpace({list(self.points)!r}, {len(self._masks)} closed sets)"

    @property
    def closed_sets(self) -> list:
        return [self.members(m) for m in self._masks]

    @property
    def open_sets(self) -> list:
        return [self.members(self.full ^ m) for m in self._masks]

    def closed_masks(self) -> tuple:
        return self._masks

    def is_closed(self, A) -> bool:
        return self.mask(A) in self._mask_set

    def is_open(self, A) -> bool:
        return (self.full ^ self.mask(A)) in self._mask_set

    def closure_mask(self, m: int) -> int:
        out = self.full
        for c in self._masks:
            if c & m == m:
                out &= c
        return out

    def closure(self, A) -> frozenset:
        return self.members(self.closure_mask(self.mask(A)))

    def point_closure(self, x: str) -> frozenset:
        return self.members(self._pc[x])

    def point_closure_mask(self, x: str) -> int:
        return self._pc[x]

    def saturation(self, A) -> frozenset:
        """Intersection of all open sets containing A."""
        m = self.mask(A)
        out = self.full
        for c in self._masks:
            u = self.full ^ c
            if u & m == m:
                out &= u
        return self.members(out)

    def specialization(self) -> FinitePoset:
        if self._spec is None:
            rel = [(x, y) for x in self.points for y in self.points if self._pc[y] & self._bit[x]]
            self._spec = FinitePoset(self.points, rel)
        return self._spec

    def same_topology(self, other: "FiniteSpace") -> bool:
        return set(self.points) == set(other.points) and set(self.closed_sets) == set(other.closed_sets)

    def subspace(self, A) -> "FiniteSpace":
        m = self.mask(A)
        return FiniteSpace(self.members(m), [self.members(c & m) for c in self._masks])

    def relabel(self, mapping: dict) -> "FiniteSpace":
        return FiniteSpace([mapping[p] for p in self.points], [[mapping[p] for p in c] for c in self.closed_sets])

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        closed = sorted((sorted(c) for c in self.closed_sets), key=lambda c: (len(c), c))
        return {"points": list(self.points), "closed": closed}

    @classmethod
    def from_json(cls, data) -> "FiniteSpace":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["points"], data["closed"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed space JSON: {exc}") from exc


# builders ----------------------------------------------------------------


def topology_from_poset(P: FinitePoset, kind: str) -> FiniteSpace:
    """Alexandroff, upper, Scott or weak Scott topology of a finite poset."""
    check_size(len(P))
    elements = P.elements
    if kind == "alexandroff":
        closed = [A for A in order.subsets(elements) if P.down_set(A) == A]
        return FiniteSpace(elements, closed)
    if kind == "upper":
        gens = [P.down(x) for x in elements] + [frozenset(), frozenset(elements)]
        return FiniteSpace(elements, gens, generate=True)
    directed = order.directed_family(P)
    everything = frozenset(elements)
    opens = []
    if kind == "scott":
        for U in order.subsets(elements):
            if P.up_set(U) != U:
                continue
            ok = True
            for D in directed:
                j = P.join(D)
                if j is not None and j in U and not (D & U):
                    ok = False
                    break
            if ok:
                opens.append(U)
    elif kind == "weak_scott":
        cuts = {D: order.cut_closure(P, D) for D in directed}
        for U in order.subsets(elements):
            if all(D & U or not (cuts[D] & U) for D in directed):
                opens.append(U)
    else:
        raise InputError(f"unknown topology kind {kind!r}")
    return FiniteSpace(elements, [everything - U for U in opens])


def sierpinski() -> FiniteSpace:
    return FiniteSpace(["0", "1"], [[], ["0"], ["0", "1"]])


def discrete(points: Iterable[str]) -> FiniteSpace:
    points = list(points)
    return FiniteSpace(points, order.subsets(points))


def specialization_order(X: FiniteSpace) -> FinitePoset:
    return X.specialization()


def random_space(n: int, rng: random.Random, density: float = 0.35) -> FiniteSpace:
    """Random finite T0 space: the Alexandroff space of a random poset, possibly coarsened.

    Every finite T0 topology is the Alexandroff topology of its specialization
    order, so random posets reach all of them.
    """
    return topology_from_poset(order.random_poset(n, rng, density, prefix="x"), "alexandroff")


def all_t0_spaces(n: int):
    """All T0 topologies on n labelled points (one per partial order)."""
    for P in order.all_posets(n, prefix="x"):
        yield topology_from_poset(P, "alexandroff")


# set families ------------------------------------------------------------


def point_closures(X: FiniteSpace) -> list:
    return [X.point_closure(x) for x in X.points]


def irreducible_closed(X: FiniteSpace) -> list:
    """Nonempty closed sets that are not covered by two closed sets without lying in one."""
    masks = X.closed_masks()
    out = []
    for a in masks:
        if a == 0:
            continue
        irreducible = True
        for f1, f2 in itertools.combinations(masks, 2):
            if a & (f1 | f2) == a and a & f1 != a and a & f2 != a:
                irreducible = False
                break
        if irreducible:
            out.append(X.members(a))
    return out


def is_sober(X: FiniteSpace, irr=None):
    """Every irreducible closed set is the closure of exactly one point; returns (flag, witness)."""
    for A in irreducible_closed(X) if irr is None else irr:
        if sum(X.point_closure(x) == A for x in X.points) != 1:
            return False, {"irreducible_closed": sorted(A)}
    return True, None


def directed_closures(X: FiniteSpace) -> list:
    P = X.specialization()
    return sorted({X.closure(D) for D in order.directed_family(P)}, key=lambda s: (len(s), sorted(s)))


def is_compact(X: FiniteSpace, K, max_opens: int = 16) -> bool:
    """Brute-force compactness: every open cover of K has a finite subcover.

    Finite covers are their own finite subcovers, so the check enumerates
    covers and confirms each contains a subcover of size at most |K|.
    """
    opens = [X.full ^ c for c in X.closed_masks()]
    if len(opens) > max_opens:
        raise SizeError(f"{len(opens)} open sets; open-cover enumeration capped at {max_opens}")
    k = X.mask(K)
    for r in range(len(opens) + 1):
        for cover in itertools.combinations(opens, r):
            union = 0
            for u in cover:
                union |= u
            if union & k != k:
                continue
            small = any(
                (_or_all(sub) & k) == k
                for s in range(min(len(cover), bin(k).count("1")) + 1)
                for sub in itertools.combinations(cover, s)
            )
            if not small:
                return False
    return True


def _or_all(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def compact_saturated(X: FiniteSpace) -> list:
    """Nonempty compact saturated subsets; on a finite carrier every subset is compact."""
    check_size(len(X))
    out = []
    for A in order.subsets(X.points, 1):
        if X.saturation(A) == A:
            out.append(A)
    return out


def smyth_le(K1, K2) -> bool:
    """K1 below K2 in the Smyth order iff K2 is contained in K1."""
    return frozenset(K2) <= frozenset(K1)


def is_filtered(family) -> bool:
    fam = [frozenset(K) for K in family]
    if not fam:
        return False
    for a, b in itertools.combinations(fam, 2):
        if not any(c <= a & b for c in fam):
            return False
    return True


def rudin_machinery(X: FiniteSpace, family):
    """M(K): closed sets meeting every member of K; m(K): the minimal ones."""
    fam = [frozenset(K) for K in family]
    if not fam:
        raise InputError("the compact family must be nonempty")
    ks = set(compact_saturated(X))
    for K in fam:
        if K not in ks:
            raise InputError(f"{set_label(K)} is not a nonempty compact saturated set")
    if not is_filtered(fam):
        raise InputError("the compact family is not filtered in the Smyth order")
    kms = [X.mask(K) for K in fam]
    M = [c for c in X.closed_masks() if all(c & k for k in kms)]
    m = [c for c in M if not any(d != c and d & c == d for d in M)]
    return [X.members(c) for c in M], [X.members(c) for c in m]


def _filtered_seeds(kmasks: list, seed_size: int):
    for r in range(1, seed_size + 1):
        for seed in itertools.combinations(kmasks, r):
            if r == 1 or all(any(c & (a & b) == c for c in seed) for a, b in itertools.combinations(seed, 2)):
                yield seed


def rudin_sets(X: FiniteSpace, seed_size: int = RUDIN_SEED_SIZE) -> list:
    """Closed sets minimal among those meeting every member of some filtered compact family.

    Filtered families are enumerated through seeds of at most ``seed_size``
    members; closing a filtered seed under Smyth-smaller sets (supersets)
    leaves both M and m unchanged, so seeds stand for their up-closures.
    """
    closed = X.closed_masks()
    kmasks = [X.mask(K) for K in compact_saturated(X)]
    meets = {}
    for k in kmasks:
        bits = 0
        for i, c in enumerate(closed):
            if c & k:
                bits |= 1 << i
        meets[k] = bits
    minimal_cache = {}
    found = 0
    for seed in _filtered_seeds(kmasks, seed_size):
        M = -1
        for k in seed:
            M &= meets[k]
        if M not in minimal_cache:
            members = [closed[i] for i in range(len(closed)) if M >> i & 1]
            bits = 0
            for i, c in enumerate(closed):
                if M >> i & 1 and not any(d != c and d & c == d for d in members):
                    bits |= 1 << i
            minimal_cache[M] = bits
        found |= minimal_cache[M]
    return [X.members(closed[i]) for i in range(len(closed)) if found >> i & 1]


def is_well_filtered(X: FiniteSpace, seed_size: int = RUDIN_SEED_SIZE):
    """Definitional well-filteredness over filtered seeds; returns (flag, witness)."""
    closed = X.closed_masks()
    opens = [X.full ^ c for c in closed]
    kmasks = [X.mask(K) for K in compact_saturated(X)]

    def containing(m):
        bits = 0
        for i, u in enumerate(opens):
            if u & m == m:
                bits |= 1 << i
        return bits

    inside = {k: containing(k) for k in kmasks}
    cache = {}
    for seed in _filtered_seeds(kmasks, seed_size):
        inter = X.full
        for k in seed:
            inter &= k
        if inter not in cache:
            cache[inter] = containing(inter)
        covered = 0
        for k in seed:
            covered |= inside[k]
        bad = cache[inter] & ~covered
        if bad:
            i = (bad & -bad).bit_length() - 1
            return False, {"family": [sorted(X.members(k)) for k in seed], "open": sorted(X.members(opens[i]))}
    return True, None


# classification ----------------------------------------------------------


@dataclass
class ClassificationReport:
    sober: Optional[bool]
    d_space: Optional[bool]
    well_filtered: Optional[bool]
    cut_space: Optional[bool]
    weakly_sober: Optional[bool]
    quasisober: Optional[bool]
    dc: Optional[bool]
    rudin: Optional[bool]
    wd: str
    t1: Optional[bool] = None
    witnesses: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    FLAGS = ("sober", "d_space", "well_filtered", "cut_space", "weakly_sober", "quasisober", "dc", "rudin", "t1")

    def implication_violations(self) -> list:
        """Known implications between the flags that this report contradicts."""
        out = []

        def implies(a, b, name):
            va, vb = getattr(self, a), getattr(self, b)
            if va is True and vb is False:
                out.append(name)

        implies("sober", "quasisober", "sober => quasisober")
        implies("quasisober", "weakly_sober", "quasisober => weakly sober")
        implies("weakly_sober", "cut_space", "weakly sober => cut space")
        implies("sober", "dc", "sober => DC")
        implies("dc", "rudin", "DC => RD")
        implies("sober", "well_filtered", "sober => well-filtered")
        implies("well_filtered", "d_space", "well-filtered => d-space")
        if self.rudin is True and self.wd != "yes":
            out.append("RD => WD")
        if self.well_filtered is True and self.wd == "yes" and self.sober is False:
            out.append("well-filtered WD => sober")
        return out

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in self.FLAGS}
        out["wd"] = self.wd
        out["witnesses"] = self.witnesses
        out["provenance"] = self.provenance
        out["notes"] = list(self.notes)
        return out


def wd_status(rudin, well_filtered, sober) -> str:
    if rudin:
        return "yes"
    if well_filtered and sober is False:
        return "no"
    return "undetermined"


def _label_list(sets) -> list:
    return sorted(sorted(s) for s in sets)


def classify(X: FiniteSpace) -> ClassificationReport:
    """Compute every flag of a finite space from its definition."""
    check_size(len(X))
    P = X.specialization()
    irr = irreducible_closed(X)
    irr_set = set(irr)
    directed = order.directed_family(P)
    witnesses = {}

    sober, sober_witness = is_sober(X, irr)
    if sober_witness:
        witnesses["sober"] = sober_witness

    cut_space = True
    for D in directed:
        if X.closure(D) != order.cut_closure(P, D):
            cut_space = False
            witnesses["cut_space"] = {"directed": sorted(D), "closure": sorted(X.closure(D)),
                                      "cut_closure": sorted(order.cut_closure(P, D))}
            break

    weakly_sober = all(order.cut_closure(P, A) == A for A in irr)
    # the equivalent formulation: every irreducible closed set is an intersection of point closures
    weakly_sober_alt = True
    for A in irr:
        inter = frozenset(X.points)
        for x in X.points:
            if A <= X.point_closure(x):
                inter &= X.point_closure(x)
        if inter != A:
            weakly_sober_alt = False
    notes = []
    if weakly_sober != weakly_sober_alt:
        notes.append("weakly sober: cut formulation and point-closure-intersection formulation disagree")
    if not weakly_sober:
        bad = next(A for A in irr if order.cut_closure(P, A) != A)
        witnesses["weakly_sober"] = {"irreducible_closed": sorted(bad)}

    cuts_of_directed = {order.cut_closure(P, D) for D in directed}
    quasisober = all(A in cuts_of_directed for A in irr)
    if not quasisober:
        witnesses["quasisober"] = {"irreducible_closed": sorted(next(A for A in irr if A not in cuts_of_directed))}

    dcs = {X.closure(D) for D in directed}
    dc = irr_set == dcs
    if not dc:
        witnesses["dc"] = {"irreducible_closed": _label_list(irr_set ^ dcs)}

    rd = set(rudin_sets(X))
    rudin = irr_set == rd
    if not rudin:
        witnesses["rudin"] = {"difference": _label_list(irr_set ^ rd)}

    dcpo = all(P.join(D) is not None for D in directed)
    scott = True
    for U in X.open_sets:
        for D in directed:
            j = P.join(D)
            if j is not None and j in U and not (D & U):
                scott = False
                witnesses["d_space"] = {"open": sorted(U), "directed": sorted(D)}
                break
        if not scott:
            break
    d_space = dcpo and scott

    well_filtered, wf_witness = is_well_filtered(X)
    if wf_witness:
        witnesses["well_filtered"] = wf_witness

    t1 = all(len(X.point_closure(x)) == 1 for x in X.points)
    report = ClassificationReport(
        sober=sober, d_space=d_space, well_filtered=well_filtered, cut_space=cut_space,
        weakly_sober=weakly_sober, quasisober=quasisober, dc=dc, rudin=rudin,
        wd=wd_status(rudin, well_filtered, sober), t1=t1, witnesses=witnesses,
        provenance={f: "computed" for f in ClassificationReport.FLAGS} | {"wd": "computed"},
        notes=notes + [f"rudin and well-filtered enumeration over filtered seeds of size <= {RUDIN_SEED_SIZE}"],
    )
    return report


# maps --------------------------------------------------------------------


@dataclass
class SpaceMap:
    """A map between spaces: a total point rule plus an optional closed-preimage table."""

    source: object
    target: object
    rule: object                       # dict for finite sources, callable for symbolic ones
    preimage_table: Optional[Callable] = None
    name: str = "f"

    def __call__(self, x):
        if isinstance(self.rule, dict):
            return self.rule[x]
        return self.rule(x)

    def validate_total(self):
        if isinstance(self.rule, dict) and isinstance(self.source, FiniteSpace):
            missing = set(self.source.points) - set(self.rule)
            if missing:
                raise InputError(f"map is not total: no value for {sorted(missing)}")
            bad = [y for y in self.rule.values() if y not in set(self.target.points)]
            if bad:
                raise InputError(f"map values outside the target: {sorted(set(bad))}")

    def preimage(self, C) -> frozenset:
        C = frozenset(C)
        return frozenset(x for x in self.source.points if self(x) in C)


def identity_map(X: FiniteSpace) -> SpaceMap:
    return SpaceMap(X, X, {x: x for x in X.points}, name="id")


def check_continuous(f: SpaceMap) -> bool:
    f.validate_total()
    return all(f.source.is_closed(f.preimage(C)) for C in f.target.closed_sets)


def is_embedding(f: SpaceMap) -> bool:
    if not check_continuous(f):
        return False
    values = [f(x) for x in f.source.points]
    if len(set(values)) != len(values):
        return False
    induced = {f.preimage(C) for C in f.target.closed_sets}
    return induced == set(f.source.closed_sets)


def find_homeomorphism(X: FiniteSpace, Y: FiniteSpace) -> Optional[SpaceMap]:
    """Brute-force search for a homeomorphism X -> Y, pruned by closure sizes."""
    if len(X) != len(Y):
        return None
    if len(X) > HOMEOMORPHISM_CAP:
        raise SizeError(f"homeomorphism search capped at {HOMEOMORPHISM_CAP} points")
    if len(X.closed_sets) != len(Y.closed_sets):
        return None
    PX, PY = X.specialization(), Y.specialization()
    sig_x = {x: (len(PX.down(x)), len(PX.up(x))) for x in X.points}
    sig_y = {y: (len(PY.down(y)), len(PY.up(y))) for y in Y.points}
    iso = order.order_isomorphism(PX, PY)
    if iso is None:
        return None
    ys = list(Y.points)
    target_closed = set(Y.closed_sets)
    xs = list(X.points)
    for perm in itertools.permutations(ys):
        rule = dict(zip(xs, perm))
        if any(sig_x[x] != sig_y[rule[x]] for x in xs):
            continue
        if all(frozenset(rule[p] for p in C) in target_closed for C in X.closed_sets):
            return SpaceMap(X, Y, rule, name="h")
    return None
