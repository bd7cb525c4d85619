"""
Top-point extensions and the machinery that shows certain reflections fail.

A top-point extension adds one point above everything. The flat variant
replaces the closed set X by X + {top}; the natural variant removes the
closed set X minus its greatest element instead. Both work on explicit
finite spaces and on gallery oracles. For oracles the extension is itself
an oracle, so sobrification certificates and refutations are computed
descriptor by descriptor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from . import finite
from .errors import InputError, PreconditionError
from .finite import FiniteSpace, SpaceMap
from .gallery.base import EVERYTHING, EXT_TOP, ChainScheme, Closed, Pt, SpaceOracle, UpperSet
from .gallery.classify import check_irreducible_extras, classify_symbolic
from .order import set_label

FLAT, NATURAL = "flat", "natural"
DEFAULT_CUTOFF = 8

# class name -> classification flag deciding membership
CLASS_FLAGS = {
    "dc": "dc",
    "rd": "rudin",
    "wd": "wd",
    "quasisober": "quasisober",
    "weakly_sober": "weakly_sober",
    "cut": "cut_space",
}


def class_member(report, class_name: str) -> Optional[bool]:
    """Whether a classification report puts the space in the named class (None if unknown)."""
    if class_name not in CLASS_FLAGS:
        raise InputError(f"unknown class {class_name!r}; expected one of {sorted(CLASS_FLAGS)}")
    value = getattr(report, CLASS_FLAGS[class_name])
    if class_name == "wd":
        return {"yes": True, "no": False}.get(value)
    return value


@dataclass
class TopExtension:
    base: object
    kind: str
    added_point: object
    eta: SpaceMap
    space: object
    base_top: object = None
    checks: dict = field(default_factory=dict)

    def is_symbolic(self) -> bool:
        return isinstance(self.space, SpaceOracle)


# -- finite spaces ----------------------------------------------------------


def _fresh_name(X: FiniteSpace, wanted="T") -> str:
    name = wanted
    while name in X.points:
        name += "'"
    return name


def _splitting_pair(X: FiniteSpace):
    proper = [C for C in X.closed_sets if C != frozenset(X.points)]
    whole = frozenset(X.points)
    for A, B in itertools.combinations(proper, 2):
        if A | B == whole:
            return A, B
    return None


def _finite_greatest(X: FiniteSpace):
    P = X.specialization()
    return P.greatest(P.elements)


def _finite_extension(X: FiniteSpace, kind: str, removed: frozenset, eta_rule: dict, top: str,
                      base_top=None) -> TopExtension:
    whole = frozenset(X.points)
    closed = [C for C in X.closed_sets if C != removed] + [whole | {top}]
    try:
        space = FiniteSpace(list(X.points) + [top], closed)
    except InputError as exc:
        witness = {"reason": str(exc)}
        if kind == NATURAL:
            witness["guard"] = sober_guard(X)
        raise PreconditionError(f"the {kind} extension is not a T0 space: {exc}", witness) from exc
    eta = SpaceMap(X, space, eta_rule, name=f"eta_{kind}")
    image = frozenset(eta_rule.values())
    dense = all(C == frozenset(space.points) for C in space.closed_sets if image <= C)
    checks = {"t0": True, "embedding": finite.is_embedding(eta), "dense": dense}
    return TopExtension(X, kind, top, eta, space, base_top=base_top, checks=checks)


def sober_guard(X: FiniteSpace) -> dict:
    """A finite space is already sober; a top-point extension can only be strictly larger."""
    from .powerspace import sobrification
    sob = sobrification(X).space
    same = len(sob) == len(X) and finite.find_homeomorphism(X, sob) is not None if len(X) <= 8 else None
    return {"sober": finite.classify(X).sober, "sobrification_homeomorphic_to_space": same,
            "note": "finite spaces are sober, so an extension is never their sobrification"}


def flat_top_finite(X: FiniteSpace) -> TopExtension:
    whole = frozenset(X.points)
    if whole not in set(finite.irreducible_closed(X)):
        A, B = _splitting_pair(X)
        raise PreconditionError("the carrier is not irreducible, so the flat family is not a topology",
                                {"A": sorted(A), "B": sorted(B), "union": sorted(whole)})
    top = _fresh_name(X)
    return _finite_extension(X, FLAT, whole, {x: x for x in X.points}, top)


def natural_top_finite(X: FiniteSpace) -> TopExtension:
    g = _finite_greatest(X)
    if g is None:
        raise PreconditionError("the space has no greatest element", {"maximal": sorted(X.specialization().maximal(X.points))})
    rest = frozenset(X.points) - {g}
    if not rest or rest not in set(finite.irreducible_closed(X)):
        raise PreconditionError("the carrier minus its greatest element is not irreducible closed",
                                {"greatest": g, "rest": sorted(rest)})
    top = _fresh_name(X)
    rule = {x: x for x in X.points}
    rule[g] = top
    return _finite_extension(X, NATURAL, rest, rule, top, base_top=g)


# -- symbolic extensions ----------------------------------------------------


class ExtensionOracle(SpaceOracle):
    """A flat or natural top-point extension of a gallery oracle.

    Closed descriptors are the base descriptors that survive (kind "ext",
    inner = base descriptor) plus "all" for the base carrier with the new
    top point.
    """

    def __init__(self, base: SpaceOracle, kind: str):
        self.base, self.kind = base, kind
        self.name = f"{base.name}+{kind}"
        self.cardinality = base.cardinality
        if kind == FLAT:
            self.base_top = None
            self.removed = base.all
        else:
            self.base_top = base.greatest_in(base.all)
            self.removed = base.complement_of_top()
        self.grammar = f"closed sets of {base.name} except {base.label(self.removed)}, plus everything"

    # descriptors
    def valid(self, D: Closed, with_top: bool) -> bool:
        if not self.base.in_grammar(D):
            return False
        if with_top:
            return D == self.base.all
        return D != self.removed

    def make(self, D: Closed, with_top: bool = False) -> Closed:
        if not self.valid(D, with_top):
            raise InputError(f"{self.base.label(D)}{' + top' if with_top else ''} is not closed in {self.name}")
        if with_top:
            return self.all
        if D.kind == "empty":
            return self.empty
        return Closed(self.name, "ext", inner=D, param=0)

    def hull(self, D: Closed) -> Closed:
        """The least closed set of the extension containing a base closed set."""
        if self.valid(D, False):
            return self.make(D)
        if self.kind == FLAT:
            return self.all
        return self.make(self.base.all)

    def parts(self, d: Closed):
        d = self.check(d)
        if d.kind == "empty":
            return self.base.empty, False
        if d.kind == "all":
            return self.base.all, True
        return d.inner, False

    def in_grammar(self, d):
        if d.kind in ("empty", "all"):
            return d.inner is None
        return (d.kind == "ext" and d.param == 0 and d.inner is not None
                and d.inner.kind != "empty" and self.valid(d.inner, False))

    def label(self, d):
        if d.kind != "ext":
            return d.kind
        return self.base.label(d.inner)

    def is_point(self, p):
        return p == EXT_TOP or self.base.is_point(p)

    def points_upto(self, cutoff):
        return list(self.base.points_upto(cutoff)) + [EXT_TOP]

    def contains(self, d, p):
        D, top = self.parts(d)
        if p == EXT_TOP:
            return top
        return self.base.contains(D, p)

    def leq(self, p, q):
        if q == EXT_TOP:
            return True
        if p == EXT_TOP:
            return False
        return self.base.leq(p, q)

    def closure_point(self, p):
        if p == EXT_TOP:
            return self.all
        return self.hull(self.base.closure_point(p))

    def union(self, a, b):
        (Da, ta), (Db, tb) = self.parts(a), self.parts(b)
        return self.make(self.base.union(Da, Db), ta or tb)

    def intersect(self, a, b):
        (Da, ta), (Db, tb) = self.parts(a), self.parts(b)
        return self.make(self.base.intersect(Da, Db), ta and tb)

    @staticmethod
    def _with_top(U: UpperSet) -> UpperSet:
        if U.everything:
            return U
        return UpperSet(U.points | {EXT_TOP}, U.pieces)

    def up(self, p):
        if p == EXT_TOP:
            return UpperSet(frozenset({EXT_TOP}))
        return self._with_top(self.base.up(p))

    def upper_bounds(self, d):
        D, top = self.parts(d)
        if top:
            return UpperSet(frozenset({EXT_TOP}))
        return self._with_top(self.base.upper_bounds(D))

    def piece_contains(self, piece, p):
        return p != EXT_TOP and self.base.piece_contains(piece, p)

    def piece_meet(self, a, b):
        return self.base.piece_meet(a, b)

    def piece_lower(self, piece):
        return self.hull(self.base.piece_lower(piece))

    def piece_least(self, piece):
        return self.base.piece_least(piece)

    def global_lower(self):
        return self.hull(self.base.global_lower())

    def generators(self, d):
        D, top = self.parts(d)
        return frozenset(self.base.generators(D)) | ({EXT_TOP} if top else frozenset())

    def sample_descriptors(self, cutoff):
        out = [self.empty, self.all]
        for D in list(self.base.sample_descriptors(cutoff)) + [self.base.all]:
            out.append(self.hull(D))
        seen, uniq = set(), []
        for d in out:
            if d not in seen:
                seen.add(d)
                uniq.append(d)
        return uniq

    # the canonical map and its preimages
    def eta(self, p: Pt) -> Pt:
        if self.kind == NATURAL and p == self.base_top:
            return EXT_TOP
        return p

    def eta_preimage(self, d: Closed) -> Closed:
        D, top = self.parts(d)
        if top:
            return self.base.all
        if self.kind == NATURAL and D == self.base.all:
            return self.removed
        return D

    def image_of_base_closed(self, B: Closed) -> Closed:
        """A closed set of the extension whose eta-preimage is B."""
        if B == self.base.all:
            return self.all
        if B == self.removed:
            return self.make(self.base.all)
        return self.make(B)


def _symbolic_checks(ext: ExtensionOracle, cutoff: int) -> dict:
    base = ext.base
    pts = base.points_upto(cutoff)
    problems = []
    # T0: distinct points have distinct closures, split into the three cases
    cases = {"new_top": 0, "base_top": 0, "base_points": 0}
    ext_pts = ext.points_upto(cutoff)
    closures = {p: ext.closure_point(p) for p in ext_pts}
    for p, q in itertools.combinations(ext_pts, 2):
        if EXT_TOP in (p, q):
            case = "new_top"
        elif ext.base_top is not None and ext.base_top in (p, q):
            case = "base_top"
        else:
            case = "base_points"
        cases[case] += 1
        if closures[p] == closures[q]:
            problems.append(f"{p} and {q} have the same closure")
    samples = ext.sample_descriptors(cutoff)
    for C in samples:
        pre = ext.eta_preimage(C)
        base.check(pre)
        for p in pts:
            if base.contains(pre, p) != ext.contains(C, ext.eta(p)):
                problems.append(f"preimage of {ext.label(C)} disagrees at {p}")
                break
        if pre == base.all and C != ext.all:
            problems.append(f"{ext.label(C)} contains the image but is proper")
    for B in base.sample_descriptors(cutoff):
        if ext.eta_preimage(ext.image_of_base_closed(B)) != B:
            problems.append(f"{base.label(B)} is not induced from the extension")
    images = [ext.eta(p) for p in pts]
    injective = len(set(images)) == len(images)
    return {"t0": not any("same closure" in s for s in problems), "t0_cases": cases,
            "embedding": injective and not any("preimage" in s or "induced" in s for s in problems),
            "dense": not any("contains the image" in s for s in problems), "problems": problems}


def _symbolic_extension(X: SpaceOracle, kind: str, cutoff: int) -> TopExtension:
    ext = ExtensionOracle(X, kind)
    checks = _symbolic_checks(ext, cutoff)
    if checks["problems"]:
        raise PreconditionError(f"the {kind} extension of {X.name} failed its checks",
                                {"problems": checks["problems"][:5]})
    eta = SpaceMap(X, ext, ext.eta, preimage_table=ext.eta_preimage, name=f"eta_{kind}")
    return TopExtension(X, kind, EXT_TOP, eta, ext, base_top=ext.base_top, checks=checks)


def flat_top(X, cutoff: int = DEFAULT_CUTOFF) -> TopExtension:
    """Flat top-point extension; requires the whole space to be irreducible."""
    if isinstance(X, FiniteSpace):
        return flat_top_finite(X)
    if X.all not in X.irr_extras() and X.greatest_in(X.all) is None:
        raise PreconditionError(f"the whole of {X.name} is not in its irreducible inventory")
    if check_irreducible_extras(X, cutoff):
        raise PreconditionError(f"the whole of {X.name} is split by two proper closed sets")
    return _symbolic_extension(X, FLAT, cutoff)


def natural_top(X, cutoff: int = DEFAULT_CUTOFF) -> TopExtension:
    """Natural top-point extension; requires a greatest element whose complement is irreducible."""
    if isinstance(X, FiniteSpace):
        return natural_top_finite(X)
    top = X.greatest_in(X.all)
    if top is None:
        raise PreconditionError(f"{X.name} has no greatest element")
    rest = X.complement_of_top()
    if rest is None:
        raise PreconditionError(f"{X.name}: the carrier minus {top} is not a closed set of the grammar")
    if rest not in X.irr_extras() and X.greatest_in(rest) is None:
        raise PreconditionError(f"{X.name}: the carrier minus {top} is not irreducible")
    return _symbolic_extension(X, NATURAL, cutoff)


def make_extension(X, kind: str, cutoff: int = DEFAULT_CUTOFF) -> TopExtension:
    if kind == FLAT:
        return flat_top(X, cutoff)
    if kind == NATURAL:
        return natural_top(X, cutoff)
    raise InputError(f"unknown extension kind {kind!r}; expected flat or natural")


# -- the four-condition test ------------------------------------------------


@dataclass
class KNegResult:
    class_name: str
    conditions: dict

    @property
    def value(self) -> bool:
        return all(v is True for v in self.conditions.values())

    def __bool__(self):
        return self.value

    def to_dict(self) -> dict:
        return {"class": self.class_name, "is_K_neg": self.value, "conditions": dict(self.conditions)}


def is_K_neg(X, class_name: str, report=None) -> KNegResult:
    """Not in the class, a greatest element, irreducible closed rest without a greatest element."""
    if isinstance(X, FiniteSpace):
        report = report or finite.classify(X)
        member = class_member(report, class_name)
        g = _finite_greatest(X)
        rest = frozenset(X.points) - {g} if g is not None else None
        irr = set(finite.irreducible_closed(X))
        c3 = rest is not None and rest in irr
        c4 = c3 and all(X.point_closure(x) != rest for x in X.points)
    else:
        report = report or classify_symbolic(X)
        member = class_member(report, class_name)
        g = X.greatest_in(X.all)
        rest = X.complement_of_top() if g is not None else None
        c3 = rest is not None and rest.kind != "empty" and (
            rest in X.irr_extras() or X.greatest_in(rest) is not None)
        c4 = c3 and X.greatest_in(rest) is None
    conditions = {
        "not_in_class": None if member is None else not member,
        "greatest_element": g is not None,
        "rest_irreducible_closed": bool(c3),
        "rest_has_no_greatest": bool(c4),
    }
    return KNegResult(class_name, conditions)


# -- sobrification certificates ---------------------------------------------


@dataclass
class SobrificationCertificate:
    space: str
    kind: str
    h: SpaceMap
    rows: list
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"space": self.space, "kind": self.kind, "ok": self.ok, "checks": dict(self.checks),
                "table": self.rows}


def sobrification_iso_check(X, ext: TopExtension, cutoff: int = DEFAULT_CUTOFF) -> SobrificationCertificate:
    """Build h from the irreducible sets to the extension and check both closed-set tables.

    Points of the sobrification are irreducible closed sets, so h is given on
    descriptors: a point closure goes to its point (the base top goes to the
    new top in the natural case) and the extra irreducible set goes to the
    new top (flat) or to the base top (natural). Closed sets of the
    sobrification are boxes of base closed sets and are named by those sets.
    """
    if isinstance(X, FiniteSpace):
        raise PreconditionError("inventory shape mismatch: a finite space is sober, every irreducible "
                                "closed set is a point closure", sober_guard(X))
    if not isinstance(ext.space, ExtensionOracle) or ext.base is not X:
        raise InputError("the extension was not built over this space")
    E: ExtensionOracle = ext.space
    extra = X.all if ext.kind == FLAT else X.complement_of_top()
    if list(X.irr_extras()) != [extra]:
        raise PreconditionError(f"inventory shape mismatch: {X.name} must have exactly one irreducible "
                                f"set beyond point closures, namely {X.label(extra)}",
                                {"inventory": [X.label(d) for d in X.irr_extras()]})

    def h_point(A: Closed) -> Pt:
        if A == extra:
            return EXT_TOP if ext.kind == FLAT else ext.base_top
        x = X.greatest_in(A)
        if x is None:
            raise InputError(f"{X.label(A)} is not a point of the sobrification")
        return E.eta(x)

    def h_closed(B: Closed) -> Closed:
        X.check(B)
        if B == X.all:
            return E.all
        if ext.kind == NATURAL and B == extra:
            return E.make(X.all)
        return E.make(B)

    def h_inverse(C: Closed) -> Closed:
        D, top = E.parts(C)
        if top:
            return X.all
        if ext.kind == NATURAL and D == X.all:
            return extra
        return D

    pts = X.points_upto(cutoff)
    irreducibles = [X.closure_point(p) for p in pts] + [extra]
    base_closed = list(X.sample_descriptors(cutoff)) + [extra]
    ext_closed = E.sample_descriptors(cutoff)
    images = [h_point(A) for A in irreducibles]
    checks = {
        "injective": len(set(images)) == len(images),
        "surjective": set(E.points_upto(cutoff)) <= set(images),
        "forward_table": True,
        "inverse_table": True,
        "round_trip_base": True,
        "round_trip_extension": True,
        "eta_commutes": all(h_point(X.closure_point(p)) == E.eta(p) for p in pts),
    }
    for B in base_closed:
        C = h_closed(B)
        for A, y in zip(irreducibles, images):
            if X.is_subset(A, B) != E.contains(C, y):
                checks["forward_table"] = False
        if h_inverse(C) != B:
            checks["round_trip_base"] = False
    for C in ext_closed:
        B = h_inverse(C)
        X.check(B)
        for A, y in zip(irreducibles, images):
            if X.is_subset(A, B) != E.contains(C, y):
                checks["inverse_table"] = False
        if h_closed(B) != C:
            checks["round_trip_extension"] = False
    rows = [{"irreducible": X.label(A), "h": str(y)} for A, y in zip(irreducibles, images)][-4:]
    h = SpaceMap(X, E, h_point, preimage_table=h_inverse, name="h")
    h.closed_image = h_closed
    return SobrificationCertificate(X.name, ext.kind, h, rows, checks)


# -- refutation of the forced extension -------------------------------------


class ImageChain(NamedTuple):
    """A chain in the source whose image is a representative chain of the target."""

    name: str
    source_point: Callable
    target_chain: ChainScheme
    target_param: object = None


@dataclass
class WitnessMap:
    """A map between oracles with an explicit closed-preimage table."""

    source: SpaceOracle
    target: SpaceOracle
    rule: Callable
    preimage: Callable
    name: str = "f"
    image_chains: list = field(default_factory=list)

    def __call__(self, p):
        return self.rule(p)

    def validate(self, cutoff: int) -> dict:
        """Preimages land in the source grammar and agree with the rule pointwise."""
        X, W = self.source, self.target
        pts = X.points_upto(cutoff)
        for p in pts:
            if not W.is_point(self(p)):
                raise InputError(f"{self.name}({p}) = {self(p)!r} is not a point of {W.name}")
        checked = 0
        for C in W.sample_descriptors(cutoff):
            P = self.preimage(C)
            try:
                X.check(P)
            except InputError as exc:
                raise InputError(f"{self.name} is not continuous: preimage of {W.label(C)}: {exc}") from exc
            for p in pts:
                if X.contains(P, p) != W.contains(C, self(p)):
                    raise InputError(f"{self.name} is not continuous: preimage table of {W.label(C)} "
                                     f"disagrees at {p}")
            checked += 1
        for chain in self.image_chains:
            members = W.chain_members(chain.target_chain, chain.target_param, cutoff)
            got = [self(chain.source_point(k)) for k in range(1, cutoff + 1)]
            if got != members:
                raise InputError(f"image chain {chain.name} does not map onto {chain.target_chain.name}")
        return {"closed_sets_checked": checked, "points_checked": len(pts)}

    def as_space_map(self) -> SpaceMap:
        return SpaceMap(self.source, self.target, self.rule, preimage_table=self.preimage, name=self.name)


@dataclass
class RefutationCertificate:
    example: str
    witness_space: str
    witness_map: str
    extension: str
    forced_values: list
    kind: Optional[str]
    contradiction: dict
    inputs: tuple = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.kind in ("A", "B")

    def to_dict(self) -> dict:
        return {"example": self.example, "witness_space": self.witness_space, "witness_map": self.witness_map,
                "extension": self.extension, "forced_values": self.forced_values, "kind": self.kind,
                "contradiction": self.contradiction}


def _natural_preimage(X, E, pre, c_in, base_top, rest):
    """Base part of the preimage once the base-top point is sent to a forced value."""
    has_top = X.contains(pre, base_top)
    if has_top == c_in:
        return pre
    if has_top:
        # the base top is greatest, so pre is everything; dropping it leaves the rest
        return rest if pre == X.all else None
    return X.all if pre == rest else None


def refute_extension(X: SpaceOracle, ext: TopExtension, W: SpaceOracle, f: WitnessMap,
                     cutoff: int = DEFAULT_CUTOFF, example: str = "") -> RefutationCertificate:
    """Force the only possible continuous extension of f and find where it breaks.

    Values on the image of eta are forced by commutation. The remaining point
    sits above a known set, so its value is an upper bound of that set's
    image (and, in the natural case, below the image of the base top). If no
    upper bound exists the certificate is of kind A; if exactly one candidate
    remains, every sampled closed set of W is pulled back and any preimage
    that is not closed gives a certificate of kind B.
    """
    if not isinstance(ext.space, ExtensionOracle):
        raise InputError("refutations need a symbolic extension")
    E: ExtensionOracle = ext.space
    if f.source is not X:
        raise InputError("the witness map does not start at this space")
    validation = f.validate(cutoff)
    pts = X.points_upto(cutoff)
    forced = []
    for p in pts:
        if ext.kind == NATURAL and p == ext.base_top:
            continue
        forced.append({"point": str(E.eta(p)), "value": str(f(p)), "reason": "dense image"})
    if ext.kind == NATURAL:
        top_value = f(ext.base_top)
        forced.append({"point": str(EXT_TOP), "value": str(top_value), "reason": "dense image"})
        free_point, below, ceiling = ext.base_top, E.removed, top_value
    else:
        free_point, below, ceiling = EXT_TOP, X.all, None

    # lower approximation of the closure of f(below)
    image = W.empty
    used = []
    for p in pts:
        if X.contains(below, p):
            image = W.union(image, W.closure_point(f(p)))
    for chain in f.image_chains:
        if all(X.contains(below, chain.source_point(k)) for k in range(1, cutoff + 1)):
            image = W.union(image, W.chain_closure(chain.target_chain, chain.target_param))
            used.append(chain.name)
    bounds = W.upper_bounds(image)
    inequalities = [f"f(x) <= value at {free_point} for x in {X.label(below)}"]
    if ceiling is not None:
        inequalities.append(f"value at {free_point} <= {ceiling}")

    def certificate(kind, contradiction, forced_rows):
        return RefutationCertificate(example, W.name, f.name, E.name, forced_rows, kind, contradiction,
                                     inputs=(X, ext, W, f, cutoff, example))

    base_info = {"image_closure_lower_bound": W.label(image), "image_chains": used,
                 "inequalities": inequalities, "map_validation": validation}
    if bounds.is_empty():
        row = {"point": str(free_point), "value": None, "reason": "upper bound of the image", "candidates": []}
        return certificate("A", {"no_upper_bound": W.label(image), **base_info}, forced + [row])

    candidates = sorted(q for q in bounds.points if ceiling is None or W.leq(q, ceiling))
    unresolved = []
    for piece in sorted(bounds.pieces):
        hits = [q for q in W.points_upto(cutoff) if W.piece_contains(piece, q)
                and (ceiling is None or W.leq(q, ceiling))]
        if hits:
            unresolved.append(str(piece))
    if not candidates and not unresolved:
        row = {"point": str(free_point), "value": None, "reason": "upper bound of the image below the ceiling",
               "candidates": []}
        return certificate("A", {"no_upper_bound": W.label(image), **base_info}, forced + [row])
    if len(candidates) != 1 or unresolved or bounds.everything:
        return certificate(None, {"refutation_failed": "forced value is not unique",
                                  "candidates": [str(c) for c in candidates],
                                  "unresolved_pieces": unresolved, **base_info}, forced)

    c = candidates[0]
    forced_rows = forced + [{"point": str(free_point), "value": str(c), "reason": "upper bound of the image",
                             "candidates": [str(c)]}]
    failures = []
    for C in W.sample_descriptors(cutoff):
        pre = f.preimage(C)
        c_in = W.contains(C, c)
        if ext.kind == FLAT:
            inner, with_top = pre, c_in
        else:
            inner = _natural_preimage(X, E, pre, c_in, ext.base_top, E.removed)
            with_top = W.contains(C, ceiling)
        if inner is None or not E.valid(inner, with_top):
            failures.append({"closed": W.label(C),
                             "preimage": (X.label(inner) if inner is not None else "not a lower set")
                             + (" + top" if with_top else ""),
                             "reason": "preimage is not closed in the extension"})
    if failures:
        return certificate("B", {"preimage_not_closed": failures[0]["closed"], "failures": failures,
                                 **base_info}, forced_rows)
    return certificate(None, {"refutation_failed": "every sampled preimage is closed", **base_info}, forced_rows)


def _image_descriptor(W, cert):
    target = cert.contradiction["no_upper_bound"]
    X, ext, _, f, cutoff, _ = cert.inputs
    below = X.all if ext.kind == FLAT else ext.space.removed
    image = W.empty
    for p in X.points_upto(cutoff):
        if X.contains(below, p):
            image = W.union(image, W.closure_point(f(p)))
    for chain in f.image_chains:
        image = W.union(image, W.chain_closure(chain.target_chain, chain.target_param))
    if W.label(image) != target:
        raise InputError("recorded image descriptor does not match the replay")
    return image


def revalidate(cert: RefutationCertificate) -> bool:
    """Replay a certificate from its inputs and re-check its contradiction object."""
    X, ext, W, f, cutoff, example = cert.inputs
    replay = refute_extension(X, ext, W, f, cutoff=cutoff, example=example)
    if replay.to_dict() != cert.to_dict():
        return False
    E = ext.space
    if cert.kind == "A":
        # no point of a slightly larger truncation bounds the images, chains reaching one step further
        below = X.all if ext.kind == FLAT else E.removed
        images = [f(p) for p in X.points_upto(cutoff) if X.contains(below, p)]
        for chain in f.image_chains:
            images += [f(chain.source_point(k)) for k in range(1, cutoff + 3)]
        ceiling = f(ext.base_top) if ext.kind == NATURAL else None
        for q in W.points_upto(cutoff + 1):
            if all(W.leq(y, q) for y in images) and (ceiling is None or W.leq(q, ceiling)):
                return False
        return W.upper_bounds(_image_descriptor(W, cert)).is_empty()
    if cert.kind == "B":
        target = cert.contradiction["preimage_not_closed"]
        by_label = {W.label(C): C for C in W.sample_descriptors(cutoff)}
        C = by_label[target]
        c = next(r["value"] for r in cert.forced_values if r["reason"] == "upper bound of the image")
        value = {str(q): q for q in W.points_upto(cutoff)}[c]
        def forced_map(p):
            if p == EXT_TOP:
                return value if ext.kind == FLAT else f(ext.base_top)
            if ext.kind == NATURAL and p == ext.base_top:
                return value
            return f(p)
        # the closed hull of the preimage reaches a point the forced map sends outside C
        inside = [p for p in X.points_upto(cutoff) if p != ext.base_top and W.contains(C, forced_map(p))]
        approx = X.empty
        for p in inside:
            approx = X.union(approx, X.closure_point(p))
        for chain in X.chains():
            for param in X.chain_params(chain, cutoff):
                if all(W.contains(C, forced_map(p)) for p in X.chain_members(chain, param, cutoff)):
                    approx = X.union(approx, X.chain_closure(chain, param))
        hull = E.hull(approx)
        if W.contains(C, forced_map(EXT_TOP)):
            hull = E.all
        elif ext.kind == NATURAL and W.contains(C, forced_map(ext.base_top)):
            hull = E.union(hull, E.closure_point(ext.base_top))
        return any(E.contains(hull, p) and not W.contains(C, forced_map(p)) for p in E.points_upto(cutoff))
    return False
