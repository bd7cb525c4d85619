"""
Hoare and Smyth power spaces of finite spaces, the canonical sobrification,
and the box/closure identities that make the reflection constructions work.

Power-space points are named by the canonical encoding of the set they
stand for, so results serialize in the ordinary space JSON format.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import finite
from .errors import InputError, PreconditionError
from .finite import FiniteSpace, SpaceMap
from .order import set_label


@dataclass
class PowerSpaceResult:
    space: FiniteSpace
    eta: Optional[SpaceMap]
    base_family: list
    labels: dict          # point name -> the set it encodes
    kind: str = "hoare"

    def point(self, A) -> str:
        return set_label(A)


def box(family, A) -> frozenset:
    """Members of the family contained in A."""
    A = frozenset(A)
    return frozenset(G for G in family if G <= A)


def diamond(family, A) -> frozenset:
    """Members of the family meeting A."""
    A = frozenset(A)
    return frozenset(G for G in family if G & A)


def _as_family(G) -> list:
    out = []
    for A in G:
        A = frozenset(A)
        if A not in out:
            out.append(A)
    return out


def hoare_space(X: FiniteSpace, G=None) -> PowerSpaceResult:
    """Lower Vietoris topology on a family of nonempty closed sets.

    Without a family, builds the Hoare power space over all nonempty closed
    sets. Closed sets of the result are generated by the boxes of closed sets
    of X (complements of the subbasic diamonds of opens).
    """
    if G is None:
        G = [C for C in X.closed_sets if C]
    fam = _as_family(G)
    if not fam:
        raise InputError("the base family is empty")
    for A in fam:
        if not A:
            raise InputError("the empty set cannot be a point of a Hoare power space")
        if not X.is_closed(A):
            raise InputError(f"{set_label(A)} is not closed")
    labels = {set_label(A): A for A in fam}
    boxes = [[set_label(B) for B in box(fam, C)] for C in X.closed_sets]
    space = FiniteSpace(list(labels), boxes, generate=True)
    eta = None
    if all(X.point_closure(x) in fam for x in X.points):
        eta = SpaceMap(X, space, {x: set_label(X.point_closure(x)) for x in X.points}, name="eta")
    return PowerSpaceResult(space=space, eta=eta, base_family=fam, labels=labels)


def smyth_space(X: FiniteSpace) -> PowerSpaceResult:
    """Upper Vietoris topology on the nonempty compact saturated sets."""
    fam = finite.compact_saturated(X)
    labels = {set_label(K): K for K in fam}
    closed = []
    for U in X.open_sets:
        inside = box(fam, U)
        closed.append([set_label(K) for K in fam if K not in inside])
    space = FiniteSpace(list(labels), closed, generate=True)
    xi = SpaceMap(X, space, {x: set_label(X.saturation([x])) for x in X.points}, name="xi")
    return PowerSpaceResult(space=space, eta=xi, base_family=fam, labels=labels, kind="smyth")


def sobrification(X: FiniteSpace) -> PowerSpaceResult:
    """Hoare space over the irreducible closed sets, with eta(x) = cl{x}."""
    res = hoare_space(X, finite.irreducible_closed(X))
    res.kind = "sobrification"
    return res


def families(X: FiniteSpace) -> dict:
    """The closed-set families shipped for power-space constructions."""
    return {
        "all_closed": [C for C in X.closed_sets if C],
        "irreducible": finite.irreducible_closed(X),
        "point_closures": _as_family(finite.point_closures(X)),
        "directed_closures": finite.directed_closures(X),
        "rudin": finite.rudin_sets(X),
    }


def _require_sandwich(X: FiniteSpace, fam):
    pcs = set(finite.point_closures(X))
    irr = set(finite.irreducible_closed(X))
    fs = set(fam)
    if not pcs <= fs:
        raise PreconditionError("the family must contain every point closure")
    if not fs <= irr:
        raise PreconditionError("the family must consist of irreducible closed sets")


def closure_identity_terms(X: FiniteSpace, G, A) -> dict:
    """The four sets cl eta(A), cl eta(cl A), cl box(A), box(cl A), computed in the Hoare space over G.

    The first, second and fourth always agree. The box term joins them when A
    is a lower set and can be strictly smaller otherwise.
    """
    fam = _as_family(G)
    _require_sandwich(X, fam)
    A = frozenset(A)
    res = hoare_space(X, fam)
    H = res.space
    cl_a = X.closure(A)
    return {
        "closure_of_image": H.closure([res.eta(x) for x in A]),
        "closure_of_image_of_closure": H.closure([res.eta(x) for x in cl_a]),
        "closure_of_box": H.closure([set_label(B) for B in box(fam, A)]),
        "box_of_closure": frozenset(set_label(B) for B in box(fam, cl_a)),
    }


def closure_identity_check(X: FiniteSpace, G, A) -> bool:
    """True iff all four closure terms coincide."""
    values = list(closure_identity_terms(X, G, A).values())
    return all(v == values[0] for v in values)


def box_determinacy(X: FiniteSpace, G, A, B) -> bool:
    """For closed A, B: the boxes over G agree exactly when A = B."""
    fam = _as_family(G)
    if not all(X.point_closure(x) in fam for x in X.points):
        raise PreconditionError("the family must contain every point closure")
    A, B = frozenset(A), frozenset(B)
    if not (X.is_closed(A) and X.is_closed(B)):
        raise PreconditionError("both sets must be closed")
    return (box(fam, A) == box(fam, B)) == (A == B)


def reflection_families(X: FiniteSpace) -> dict:
    """Families for the sober, well-filtered and d-reflection constructions.

    The well-filtered-determined family is pinned between the Rudin sets and
    the irreducible closed sets, and the d-family between the directed
    closures and the well-filtered-determined sets. A family is returned only
    when its sandwich collapses; otherwise it is None.
    """
    irr = set(finite.irreducible_closed(X))
    rd = set(finite.rudin_sets(X))
    dcs = set(finite.directed_closures(X))
    wd = sorted(irr, key=lambda s: (len(s), sorted(s))) if rd == irr else None
    d = None
    if wd is not None and dcs == set(wd):
        d = list(wd)
    return {"sober": sorted(irr, key=lambda s: (len(s), sorted(s))), "well_filtered": wd, "d": d}


def coincidence_check(X: FiniteSpace) -> dict:
    """Sobrification vs. well-filtered and d-reflection constructions, by homeomorphism search."""
    fams = reflection_families(X)
    sob = hoare_space(X, fams["sober"])
    out = {"families_determined": fams["well_filtered"] is not None and fams["d"] is not None}
    for key in ("well_filtered", "d"):
        fam = fams[key]
        if fam is None:
            out[key] = None
            continue
        other = hoare_space(X, fam)
        h = finite.find_homeomorphism(sob.space, other.space)
        commutes = h is not None and all(h(sob.eta(x)) == other.eta(x) for x in X.points)
        out[key] = h is not None and commutes
    return out
