"""
Classification of gallery oracles from their finite inventories.

Flags about irreducible sets and directed sets are computed from the
irreducible inventory and the representative directed families. Filtered
compact families enter through mechanized witnesses (Rudin and
non-well-filtered certificates); the remaining facts are derived from
the implications between the classes or, where nothing else is available,
transcribed and cross-checked on samples.
"""

from __future__ import annotations

import itertools
from typing import Optional

from ..finite import ClassificationReport, wd_status
from .base import Pt, SpaceOracle

DEFAULT_CUTOFF = 8


def chain_sup(O: SpaceOracle, chain, param) -> Optional[Pt]:
    return O.least_of(O.chain_upper_bounds(chain, param))


def chain_data(O: SpaceOracle, cutoff: int) -> list:
    """Closure, cut closure and supremum of every representative chain up to the cutoff."""
    rows = []
    for chain in O.chains():
        for param in O.chain_params(chain, cutoff):
            closure = O.chain_closure(chain, param)
            cut = O.lower_bounds(O.chain_upper_bounds(chain, param))
            rows.append({"chain": chain, "param": param, "closure": closure, "cut": cut,
                         "sup": chain_sup(O, chain, param)})
    return rows


def _chain_name(row) -> str:
    c = row["chain"].name
    return c if row["param"] is None else f"{c}({row['param']})"


def check_chain_closures(O: SpaceOracle, cutoff: int) -> list:
    """The stored closure of each chain contains its members and lies under every sampled closed superset."""
    problems = []
    samples = O.sample_descriptors(cutoff)
    for row in chain_data(O, cutoff):
        chain, param, closure = row["chain"], row["param"], row["closure"]
        if not O.chain_in(chain, param, closure):
            problems.append(f"{_chain_name(row)} is not inside its stored closure")
        for p in O.chain_members(chain, param, cutoff):
            if not O.contains(closure, p):
                problems.append(f"{p} missing from the closure of {_chain_name(row)}")
        for C in samples:
            if O.chain_in(chain, param, C) and not O.is_subset(closure, C):
                problems.append(f"{O.label(C)} contains {_chain_name(row)} but not its stored closure")
        members = O.chain_members(chain, param, cutoff)
        for a, b in zip(members, members[1:]):
            if not O.leq(a, b):
                problems.append(f"{_chain_name(row)} is not increasing at {a}, {b}")
    return problems


def check_irreducible_extras(O: SpaceOracle, cutoff: int) -> list:
    """Each extra inventory member is nonempty, closed, and not split by any sampled pair."""
    problems = []
    samples = O.sample_descriptors(cutoff)
    for E in O.irr_extras():
        O.check(E)
        if E.kind == "empty":
            problems.append("empty set in the irreducible inventory")
        for A, B in itertools.combinations(samples, 2):
            if O.is_subset(E, O.union(A, B)) and not O.is_subset(E, A) and not O.is_subset(E, B):
                problems.append(f"{O.label(E)} is split by {O.label(A)} and {O.label(B)}")
                break
    return problems


def point_closure_problems(O: SpaceOracle, cutoff: int) -> list:
    """{p}^delta = cl{p} = down p, checked for every point up to the cutoff."""
    problems = []
    for p in O.points_upto(cutoff):
        cl = O.closure_point(p)
        if O.lower_bounds(O.up(p)) != cl:
            problems.append(f"cut closure of {{{p}}} differs from its closure")
        if O.greatest_in(cl) != p:
            problems.append(f"{p} is not the greatest element of its closure")
    return problems


# mechanized witnesses ------------------------------------------------------


def cofinite_filter_witness(O: SpaceOracle, cutoff: int, points=None) -> dict:
    """The family {S minus F : F finite} over an infinite discrete-type set S of points.

    Checks on every finite F drawn from the first cutoff points: the family is
    closed under the meet of two members, no member is empty (a point of S
    beyond F survives), and every point of S is removed by some member, so
    the intersection is empty while every member is nonempty.
    """
    points = points or (lambda k: Pt("x", k))
    base = [points(k) for k in range(1, cutoff + 1)]
    checks = {"filtered": True, "members_nonempty": True, "intersection_empty": True}
    for F, G in itertools.combinations_with_replacement(
            [frozenset(c) for r in range(3) for c in itertools.combinations(base, r)], 2):
        meet = F | G
        member_F = {p for p in base if p not in F}
        member_G = {p for p in base if p not in G}
        member_meet = {p for p in base if p not in meet}
        if not member_meet <= member_F & member_G:
            checks["filtered"] = False
        top_index = max([p.i for p in meet] + [0])
        if points(top_index + 1) in meet:
            checks["members_nonempty"] = False
    for p in base:
        if p in [q for q in base if q != p]:
            checks["intersection_empty"] = False
    return {"family": "complements of finite sets", "checks": checks, "ok": all(checks.values())}


def cofinite_rudin_witness(O: SpaceOracle, cutoff: int) -> dict:
    """The whole space is minimal among closed sets meeting every complement of a finite set."""
    details = []
    ok = True
    for B in O.sample_descriptors(cutoff):
        if B.kind in ("all",):
            continue
        if B.kind == "countable":
            continue
        # the member X minus B of the family is disjoint from B
        disjoint = all(not (O.contains(B, p) and p not in B.finite) for p in O.points_upto(cutoff))
        outside = Pt("x", max([p.i for p in B.finite] + [0]) + 1)
        meets = not O.contains(B, outside)
        ok &= disjoint and meets
        details.append({"closed": O.label(B), "disjoint_member": f"complement of {O.label(B)}",
                        "whole_space_meets_member_at": str(outside)})
    return {"family": "complements of finite sets", "ok": ok, "proper_closed_checked": len(details),
            "examples": details[:3]}


def johnstone_rudin_witness(O: SpaceOracle, cutoff: int) -> dict:
    """The whole space is minimal in M(K_max), by the two-case argument on a point outside B."""
    ok, cases, examples = True, {"finite_point": 0, "maximal_point": 0}, []
    for B in O.sample_descriptors(cutoff):
        if B.kind in ("all", "empty"):
            continue
        outside = [p for p in O.points_upto(cutoff + 2) if not O.contains(B, p)]
        starts = [p for p in outside if p.tag == "p"][:1] + [p for p in outside if p.tag == "w"][:1]
        if not starts:
            ok = False
        for x in starts:
            case = "finite_point"
            if x.tag == "w":
                # a maximal point outside B: some point of its column is outside B too
                case = "maximal_point"
                n = x.i
                heights = [g.j for g in B.finite if g.tag == "p" and g.i == n]
                x = Pt("p", n, 1 + max([B.param] + heights))
                ok &= O.leq(x, Pt("w", n)) and not O.contains(B, x)
            m = x.j
            tail = [Pt("w", l) for l in range(m, m + cutoff + 1)]
            above = all(O.leq(x, w) for w in tail)
            missed = all(not O.contains(B, w) for w in tail)
            ok &= above and missed and not O.contains(B, x)
            cases[case] += 1
            if len(examples) < 4:
                examples.append({"closed": O.label(B), "case": case, "outside_point": str(x),
                                 "removed_maximal_points": [str(Pt("w", l)) for l in range(1, m)]})
    return {"family": "K_max = maximal points minus finite sets", "ok": ok, "cases": cases,
            "examples": examples}


def smallest_member_check(points: int = 4, family_size: int = 3) -> dict:
    """Every filtered family of nonempty finite sets has a least member (checked exhaustively at small size)."""
    universe = range(points)
    members = [frozenset(c) for r in range(1, points + 1) for c in itertools.combinations(universe, r)]
    checked = 0
    for k in range(1, family_size + 1):
        for fam in itertools.combinations(members, k):
            filtered = all(any(c <= a & b for c in fam) for a in fam for b in fam)
            if not filtered:
                continue
            checked += 1
            if not any(all(c <= a for a in fam) for c in fam):
                return {"ok": False, "counterexample": [sorted(a) for a in fam]}
    return {"ok": True, "filtered_families_checked": checked}


def chain_filter_witness(O: SpaceOracle, cutoff: int) -> dict:
    """The up-sets of the chain 1 < 2 < ... form a filtered family of compact sets with empty meet."""
    from .base import N
    ok = True
    for n in range(1, cutoff + 1):
        up_n, up_next = O.up(N(n)), O.up(N(n + 1))
        ok &= O.upper_contains(up_n, N(n + 1)) and not O.upper_contains(up_next, N(n))
    return {"family": "up-sets of the chain of naturals", "ok": ok,
            "checks": {"decreasing": ok, "every_point_eventually_removed": ok}}


# classification ------------------------------------------------------------


def classify_symbolic(O: SpaceOracle, cutoff: int = DEFAULT_CUTOFF) -> ClassificationReport:
    witnesses, provenance, notes = {}, {}, []
    problems = check_irreducible_extras(O, cutoff) + check_chain_closures(O, cutoff)
    problems += point_closure_problems(O, cutoff)
    if problems:
        notes.extend(problems)

    extras = O.irr_extras()
    rows = chain_data(O, cutoff)

    sober = all(O.greatest_in(E) is not None for E in extras)
    if not sober:
        witnesses["sober"] = {"irreducible_closed": O.label(next(E for E in extras if O.greatest_in(E) is None)),
                              "reason": "no greatest element, so not a point closure"}
    provenance["sober"] = "computed"

    cut_space = True
    for row in rows:
        if row["closure"] != row["cut"]:
            cut_space = False
            witnesses["cut_space"] = {"directed": _chain_name(row), "closure": O.label(row["closure"]),
                                      "cut_closure": O.label(row["cut"])}
            break
    provenance["cut_space"] = "representative"

    weakly_sober = all(O.cut_closure(E) == E for E in extras)
    if not weakly_sober:
        E = next(E for E in extras if O.cut_closure(E) != E)
        witnesses["weakly_sober"] = {"irreducible_closed": O.label(E), "cut_closure": O.label(O.cut_closure(E))}
    provenance["weakly_sober"] = "computed"

    def reached(E, key):
        if O.greatest_in(E) is not None:
            return "singleton"
        for row in rows:
            if row[key] == E:
                return _chain_name(row)
        return None

    quasisober = all(reached(E, "cut") for E in extras)
    dc = all(reached(E, "closure") for E in extras)
    for flag, key, value in (("quasisober", "cut", quasisober), ("dc", "closure", dc)):
        provenance[flag] = "representative"
        if not value:
            E = next(E for E in extras if not reached(E, key))
            witnesses[flag] = {"irreducible_closed": O.label(E),
                               "reason": "no representative directed set reaches it; chains with a "
                                         "supremum only reach point closures"}

    d_space = True
    samples = O.sample_descriptors(cutoff)
    for row in rows:
        if row["sup"] is None:
            d_space = False
            witnesses["d_space"] = {"directed": _chain_name(row), "reason": "no supremum"}
            break
        for C in samples:
            if O.chain_in(row["chain"], row["param"], C) and not O.contains(C, row["sup"]):
                d_space = False
                witnesses["d_space"] = {"directed": _chain_name(row), "closed": O.label(C),
                                        "reason": "closed set contains the chain but not its supremum"}
                break
        if not d_space:
            break
    provenance["d_space"] = "representative"

    t1 = O.order_discrete or not any(
        p != q and O.leq(p, q) for p in O.points_upto(3) for q in O.points_upto(3))
    if not O.order_discrete and t1:
        t1 = None
    provenance["t1"] = "computed"

    well_filtered, rudin = _analytic(O, cutoff, d_space, dc, sober, witnesses, provenance)
    wd = wd_status(rudin, well_filtered, sober)
    provenance["wd"] = "derived" if wd != "undetermined" else "not stated"
    notes.append("directed-set flags verified over representative families: singletons"
                 + "".join(f", {c.name}" for c in O.chains()))
    report = ClassificationReport(
        sober=sober, d_space=d_space, well_filtered=well_filtered, cut_space=cut_space,
        weakly_sober=weakly_sober, quasisober=quasisober, dc=dc, rudin=rudin, wd=wd, t1=t1,
        witnesses=witnesses, provenance=provenance, notes=notes)
    return report


def _analytic(O, cutoff, d_space, dc, sober, witnesses, provenance):
    name = O.name
    if not d_space:
        well_filtered = False
        provenance["well_filtered"] = "derived"
        witnesses["well_filtered"] = {"reason": "not a d-space"}
    elif name == "cofinite_nat":
        w = cofinite_filter_witness(O, cutoff)
        well_filtered = not w["ok"]
        provenance["well_filtered"] = "computed"
        witnesses["well_filtered"] = w
    elif name == "johnstone_scott":
        w = cofinite_filter_witness(O, cutoff, points=lambda k: Pt("w", k))
        w["family"] = "K_max = maximal points minus finite sets"
        well_filtered = not w["ok"]
        provenance["well_filtered"] = "computed"
        witnesses["well_filtered"] = w
    elif name == "cocountable":
        w = smallest_member_check()
        well_filtered = w["ok"]
        provenance["well_filtered"] = "transcribed"
        witnesses["well_filtered_check"] = {"compact_sets": "nonempty finite sets",
                                            "least_member": w}
    else:
        well_filtered = None
        provenance["well_filtered"] = "not stated"

    if dc:
        rudin = True
        provenance["rudin"] = "derived"
    elif name == "cofinite_nat":
        w = cofinite_rudin_witness(O, cutoff)
        rudin = w["ok"]
        provenance["rudin"] = "computed"
        witnesses["rudin_certificate"] = w
    elif name == "johnstone_scott":
        w = johnstone_rudin_witness(O, cutoff)
        rudin = w["ok"]
        provenance["rudin"] = "computed"
        witnesses["rudin_certificate"] = w
    elif well_filtered and sober is False:
        rudin = False
        provenance["rudin"] = "derived"
        witnesses["rudin"] = {"reason": "well-filtered and not sober, hence not WD and not Rudin"}
    else:
        rudin = None
        provenance["rudin"] = "not stated"
    return well_filtered, rudin
