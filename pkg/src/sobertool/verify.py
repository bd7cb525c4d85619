"""
Item-by-item verification of the four non-reflectivity examples.

Each example is a list of lettered items. An item is a claim plus a check
that returns (passed, witness). Checks never raise: an exception inside a
check becomes a failed item whose witness carries the error text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import InputError, PreconditionError
from .gallery import GALLERY_NAMES, make_gallery_space
from .gallery.base import TOP_N, N, Pt
from .gallery.classify import (chain_filter_witness, check_irreducible_extras, classify_symbolic,
                               point_closure_problems)
from .gallery.sampling import consistency_sample
from .reflection import (FLAT, NATURAL, ImageChain, WitnessMap, flat_top, is_K_neg, natural_top,
                         refute_extension, revalidate, sobrification_iso_check)

CUTOFF = 8

EXAMPLES = {
    "ex_L_cut_wsob_qsob": ("cut", "weakly_sober", "quasisober"),
    "ex_cof_dc_qsob": ("dc", "quasisober"),
    "ex_johnstone_dc_qsob": ("dc", "quasisober"),
    "ex_coc_rd_wd_qsob_dc": ("rd", "wd", "quasisober", "dc"),
}

EXPECTED_ITEMS = {
    "ex_L_cut_wsob_qsob": 11,
    "ex_cof_dc_qsob": 9,
    "ex_johnstone_dc_qsob": 8,
    "ex_coc_rd_wd_qsob_dc": 14,
}

# classes a witness space must belong to, by flag
CLASS_TO_FLAG = {"cut": "cut_space", "weakly_sober": "weakly_sober", "quasisober": "quasisober",
                 "dc": "dc", "rd": "rudin"}


# -- witness maps -----------------------------------------------------------


def chain_into_two_tops(L, W) -> WitnessMap:
    """n -> n and the top of the chain -> top1."""
    def preimage(C):
        if C.kind == "empty":
            return L.empty
        if W.contains(C, Pt("top1")):
            return L.all
        return L.nat() if C.param is None else L._mk(C.param)

    nat_chain = L.chains()[0]
    return WitnessMap(L, W, lambda p: Pt("top1") if p == TOP_N else p, preimage, "f",
                      [ImageChain("naturals", N, nat_chain)])


def discrete_into_upper(X, Y) -> WitnessMap:
    """The inclusion of the discrete part."""
    def preimage(C):
        if C.kind == "all":
            return X.all
        if C.kind == "empty":
            return X.empty
        return X.fin(C.finite)

    return WitnessMap(X, Y, lambda p: p, preimage, "i")


def johnstone_onto_naturals(J, W) -> WitnessMap:
    """(n,m) -> min(n,m) and (n,inf) -> n."""
    def rule(p):
        return N(min(p.i, p.j)) if p.tag == "p" else N(p.i)

    def preimage(C):
        if C.kind in ("all", "empty"):
            return J.all if C.kind == "all" else J.empty
        return J._mk(0, {Pt("w", m) for m in range(1, C.param + 1)})

    return WitnessMap(J, W, rule, preimage, "f",
                      [ImageChain("diagonal", lambda k: Pt("p", k, k), W.chains()[0])])


# -- report types -----------------------------------------------------------


@dataclass
class Item:
    id: str
    claim: str
    status: str
    witness: dict

    def to_dict(self):
        return {"id": self.id, "claim": self.claim, "status": self.status, "witness": self.witness}


@dataclass
class ExampleReport:
    example: str
    items: list
    categories: tuple
    categories_refuted: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.status == "pass" for i in self.items)

    def to_dict(self) -> dict:
        return {"example": self.example, "items": [i.to_dict() for i in self.items],
                "categories_refuted": list(self.categories_refuted)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)


class Context:
    """Shared, lazily computed objects for one verification run."""

    def __init__(self, spaces: Optional[dict] = None, cutoff: int = CUTOFF):
        self.spaces = dict(spaces or {})
        self.cutoff = cutoff
        self._cache = {}

    def space(self, name):
        if name not in self.spaces:
            self.spaces[name] = make_gallery_space(name)
        return self.spaces[name]

    def memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def report(self, name):
        return self.memo(("report", name), lambda: classify_symbolic(self.space(name), self.cutoff))

    def extension(self, name, kind):
        build = flat_top if kind == FLAT else natural_top
        return self.memo(("ext", name, kind), lambda: build(self.space(name), self.cutoff))

    def sobrification(self, name, kind):
        return self.memo(("sob", name, kind),
                         lambda: sobrification_iso_check(self.space(name), self.extension(name, kind), self.cutoff))

    def refutation(self, name, kind, witness_name, make_map, example):
        def run():
            X, W = self.space(name), self.space(witness_name)
            return refute_extension(X, self.extension(name, kind), W, make_map(X, W), self.cutoff, example)
        return self.memo(("ref", name, kind, witness_name), run)


def _flags(report, *names):
    return {n: getattr(report, n) for n in names}


def _expect(report, **expected):
    got = {k: getattr(report, k) for k in expected}
    return got == expected, {"flags": got, "provenance": {k: report.provenance.get(k) for k in expected}}


def _member_of(report, classes):
    out = {}
    for c in classes:
        if c == "wd":
            out[c] = report.wd == "yes"
        else:
            out[c] = getattr(report, CLASS_TO_FLAG[c]) is True
    return out


def _refutation_witness(cert, ok_kind):
    valid = revalidate(cert)
    d = cert.to_dict()
    d["revalidated"] = valid
    d["forced_values"] = d["forced_values"][-3:]
    return cert.kind == ok_kind and valid, d


def _sob_witness(cert):
    return cert.ok, cert.to_dict()


def _coincidence(ctx, name, with_d: bool):
    """Sobrification vs. the well-filtered (and d-) reflection constructions.

    The constructions are Hoare spaces over nested families sandwiched
    between the irreducible sets and the Rudin sets (resp. closures of
    directed sets). When the sandwich collapses the three power spaces are
    literally the same space, so the identity is the homeomorphism.
    """
    X, rep = ctx.space(name), ctx.report(name)
    families = {"irreducible": [X.label(d) for d in X.irr_extras()]}
    rudin_all = rep.rudin is True
    checks = {"every_irreducible_is_rudin": rudin_all}
    if with_d:
        checks["every_irreducible_is_a_directed_closure"] = rep.dc is True
    checks["point_closures_are_rudin"] = not point_closure_problems(X, ctx.cutoff)
    ok = all(checks.values())
    families["well_filtered_family"] = "irreducible" if rudin_all else "undetermined"
    if with_d:
        families["d_family"] = "irreducible" if rep.dc else "undetermined"
    return ok, {"checks": checks, "families": families,
                "homeomorphism": "identity on the Hoare space of irreducible sets" if ok else None}


def _dichotomy(ctx, knegs_or_flat, sob_ok, ref_ok, route):
    ok = knegs_or_flat and sob_ok and ref_ok
    return ok, {"route": route, "preconditions": knegs_or_flat, "sobrification": sob_ok, "refutation": ref_ok,
                "cases": {"image misses a point": "the space would be its own reflection, so in the class",
                          "image is everything": "the sobrification would be the reflection"}}


# -- the four examples ------------------------------------------------------


def _items_L(ctx) -> list:
    L = "L_top"

    def a():
        X, rep = ctx.space(L), ctx.report(L)
        ok, w = _expect(rep, cut_space=False, weakly_sober=False, quasisober=False)
        w["cut_closure_of_naturals"] = X.label(X.cut_closure(X.nat()))
        return ok and X.cut_closure(X.nat()) == X.all, w

    def b():
        X = ctx.space(L)
        top = X.greatest_in(X.all)
        sample = consistency_sample(X, ctx.cutoff, ctx.report(L))
        return top == TOP_N and sample["ok"], {"greatest": str(top), "order_agreement": sample["ok"]}

    def c():
        X = ctx.space(L)
        extras = X.irr_extras()
        ok = extras == [X.nat()] and X.complement_of_top() == X.nat() and not check_irreducible_extras(X, ctx.cutoff)
        return ok, {"extras": [X.label(d) for d in extras], "carrier_minus_top": X.label(X.complement_of_top())}

    def d():
        X = ctx.space(L)
        clos = [X.closure_point(p) for p in X.points_upto(ctx.cutoff)]
        return X.greatest_in(X.nat()) is None and X.nat() not in clos, {"naturals_have_greatest": None}

    def e():
        res = {c: is_K_neg(ctx.space(L), c, ctx.report(L)).to_dict() for c in EXAMPLES["ex_L_cut_wsob_qsob"]}
        return all(r["is_K_neg"] for r in res.values()), res

    def f():
        return _sob_witness(ctx.sobrification(L, NATURAL))

    def g():
        W = ctx.report("N_two_tops")
        member = _member_of(W, EXAMPLES["ex_L_cut_wsob_qsob"])
        cert = ctx.refutation(L, NATURAL, "N_two_tops", chain_into_two_tops, "ex_L_cut_wsob_qsob")
        ok, w = _refutation_witness(cert, "B")
        ok = ok and cert.contradiction.get("preimage_not_closed") == "N"
        w["witness_space_membership"] = member
        w["witness_space_provenance"] = "transcribed + representatively verified"
        return ok and all(member.values()), w

    def h():
        return _dichotomy(ctx, e()[0], f()[0], g()[0], "natural extension")

    def i():
        ok, w = _expect(ctx.report(L), dc=True, rudin=True, wd="yes")
        return ok, w

    def j():
        rep = ctx.report(L)
        ok, w = _expect(rep, d_space=False, well_filtered=False)
        w["d_space_witness"] = rep.witnesses.get("d_space")
        return ok, w

    def k():
        return _coincidence(ctx, L, with_d=True)

    return [
        ("a", "not a cut space, hence neither weakly sober nor quasisober", a),
        ("b", "the top of the chain is the greatest element", b),
        ("c", "irreducible closed sets are the point closures and the naturals", c),
        ("d", "no point closure equals the naturals", d),
        ("e", "the four negative conditions hold for each class", e),
        ("f", "the natural top extension is a sobrification", f),
        ("g", "the forced extension into the two-top chain is discontinuous", g),
        ("h", "no reflection into the classes exists", h),
        ("i", "DC, hence Rudin and WD", i),
        ("j", "neither a d-space nor well-filtered", j),
        ("k", "sobrification, well-filtered and d-reflection constructions coincide", k),
    ]


def _items_cof(ctx) -> list:
    C = "cofinite_nat"

    def a():
        X, rep = ctx.space(C), ctx.report(C)
        ok, w = _expect(rep, t1=True, d_space=True)
        w["closed_grammar"] = X.grammar
        sample = consistency_sample(X, ctx.cutoff, rep)
        return ok and sample["ok"], w

    def b():
        rep = ctx.report(C)
        ok, w = _expect(rep, well_filtered=False, sober=False)
        w["filtered_family"] = rep.witnesses.get("well_filtered")
        return ok, w

    def c():
        X = ctx.space(C)
        singletons = all(len(X.closure_point(p).finite) == 1 for p in X.points_upto(ctx.cutoff))
        ok = X.irr_extras() == [X.all] and singletons and not check_irreducible_extras(X, ctx.cutoff)
        return ok, {"extras": [X.label(d) for d in X.irr_extras()], "point_closures_are_singletons": singletons}

    def d():
        rep = ctx.report(C)
        ok, w = _expect(rep, rudin=True, wd="yes")
        w["rudin_certificate"] = rep.witnesses.get("rudin_certificate")
        return ok, w

    def e():
        return _expect(ctx.report(C), weakly_sober=True, cut_space=True, dc=False, quasisober=False)

    def f():
        return _sob_witness(ctx.sobrification(C, FLAT))

    def g():
        member = _member_of(ctx.report("Y_upper"), EXAMPLES["ex_cof_dc_qsob"])
        cert = ctx.refutation(C, FLAT, "Y_upper", discrete_into_upper, "ex_cof_dc_qsob")
        ok, w = _refutation_witness(cert, "A")
        w["witness_space_membership"] = member
        w["witness_space_provenance"] = "transcribed + representatively verified"
        return ok and all(member.values()), w

    def h():
        pre = c()[0] and e()[0]
        return _dichotomy(ctx, pre, f()[0], g()[0], "flat extension")

    def i():
        return _coincidence(ctx, C, with_d=False)

    return [
        ("a", "closed sets are the finite sets and the whole space; T1, hence a d-space", a),
        ("b", "not well-filtered, hence not sober", b),
        ("c", "irreducible closed sets are the singletons and the whole space", c),
        ("d", "a Rudin space, hence WD", d),
        ("e", "weakly sober and a cut space, but neither DC nor quasisober", e),
        ("f", "the flat top extension is a sobrification", f),
        ("g", "the forced extension into Y has no upper bound to use", g),
        ("h", "no reflection into the classes exists", h),
        ("i", "sobrification and well-filtered reflection coincide", i),
    ]


def _items_johnstone(ctx) -> list:
    J = "johnstone_scott"

    def i():
        X = ctx.space(J)
        problems = check_irreducible_extras(X, ctx.cutoff) + point_closure_problems(X, ctx.cutoff)
        return X.irr_extras() == [X.all] and not problems, {"extras": [X.label(d) for d in X.irr_extras()],
                                                            "problems": problems[:3]}

    def ii():
        # a proper closed set contains only the maximal points named in its generators,
        # so any open cover of a set of maximal points has a finite subcover
        X = ctx.space(J)
        bad = []
        for D in X.sample_descriptors(ctx.cutoff):
            if D.kind in ("all", "empty"):
                continue
            named = {g.i for g in D.finite if g.tag == "w"}
            for n in range(1, 2 * ctx.cutoff + 1):
                if X.contains(D, Pt("w", n)) != (n in named):
                    bad.append(X.label(D))
                    break
        return not bad, {"compact_family": "nonempty sets of maximal points and finite sets",
                         "provenance": "transcribed; maximal-point finiteness of proper closed sets checked",
                         "violations": bad[:3]}

    def iii():
        rep = ctx.report(J)
        ok, w = _expect(rep, well_filtered=False, sober=False)
        w["filtered_family"] = rep.witnesses.get("well_filtered")
        return ok, w

    def a():
        rep = ctx.report(J)
        ok, w = _expect(rep, rudin=True, wd="yes")
        cert = rep.witnesses.get("rudin_certificate", {})
        w["rudin_certificate"] = cert
        return ok and all(v > 0 for v in cert.get("cases", {0: 0}).values()), w

    def b():
        X = ctx.space(J)
        ok, w = _expect(ctx.report(J), weakly_sober=True, cut_space=True, dc=False, quasisober=False)
        w["whole_space_is_a_cut"] = X.cut_closure(X.all) == X.all
        return ok and w["whole_space_is_a_cut"], w

    def c():
        member = _member_of(ctx.report("nat_scott"), EXAMPLES["ex_johnstone_dc_qsob"])
        cert = ctx.refutation(J, FLAT, "nat_scott", johnstone_onto_naturals, "ex_johnstone_dc_qsob")
        ok, w = _refutation_witness(cert, "A")
        w["witness_space_membership"] = member
        w["witness_space_provenance"] = "transcribed + representatively verified"
        return ok and all(member.values()), w

    def d():
        sob_ok, sob = _sob_witness(ctx.sobrification(J, FLAT))
        ok, w = _dichotomy(ctx, i()[0] and b()[0], sob_ok, c()[0], "flat extension")
        w["sobrification_checks"] = sob["checks"]
        return ok, w

    def e():
        ok, w = _coincidence(ctx, J, with_d=False)
        try:
            natural_top(ctx.space(J), ctx.cutoff)
            w["natural_extension"] = "built"
        except PreconditionError as exc:
            w["natural_extension"] = f"not available: {exc}; the flat extension is the sobrification"
        return ok, w

    return [
        ("i", "irreducible closed sets are the point closures and the whole space", i),
        ("ii", "compact saturated sets are the sets of maximal points and the finite sets", ii),
        ("iii", "not well-filtered, hence not sober", iii),
        ("a", "a Rudin space, hence WD", a),
        ("b", "weakly sober and a cut space, but neither DC nor quasisober", b),
        ("c", "the forced extension into the Scott naturals has no upper bound to use", c),
        ("d", "no reflection into the classes exists", d),
        ("e", "sobrification and well-filtered reflection coincide", e),
    ]


def _items_coc(ctx) -> list:
    C, Y = "cocountable", "Y2_upper"

    def a():
        X, rep = ctx.space(C), ctx.report(C)
        ok, w = _expect(rep, t1=True, d_space=True)
        w["closed_grammar"] = X.grammar
        w["discrete_order"] = X.order_discrete
        return ok and X.order_discrete, w

    def b():
        X, rep = ctx.space(C), ctx.report(C)
        ok, w = _expect(rep, sober=False)
        return ok and X.irr_extras() == [X.all] and not check_irreducible_extras(X, ctx.cutoff), w

    def c():
        X = ctx.space(C)
        ok, w = _expect(ctx.report(C), weakly_sober=True, cut_space=True, quasisober=False)
        singles = all(X.cut_closure(X.closure_point(p)) == X.closure_point(p) for p in X.points_upto(ctx.cutoff))
        w["singletons_are_cuts"] = singles
        w["whole_space_is_a_cut"] = X.cut_closure(X.all) == X.all
        return ok and singles and w["whole_space_is_a_cut"], w

    def d():
        rep = ctx.report(C)
        ok, w = _expect(rep, well_filtered=True)
        w["least_member_check"] = rep.witnesses.get("well_filtered_check")
        return ok, w

    def e():
        return _expect(ctx.report(C), wd="no", rudin=False, dc=False)

    def f():
        sob_ok, w = _sob_witness(ctx.sobrification(C, FLAT))
        not_k = all(not v for v in _member_of(ctx.report(C), EXAMPLES["ex_coc_rd_wd_qsob_dc"]).values())
        w["not_in_any_class"] = not_k
        return sob_ok and not_k, w

    def g():
        member = _member_of(ctx.report(Y), EXAMPLES["ex_coc_rd_wd_qsob_dc"])
        cert = ctx.refutation(C, FLAT, Y, discrete_into_upper, "ex_coc_rd_wd_qsob_dc")
        ok, w = _refutation_witness(cert, "A")
        w["witness_space_membership"] = member
        w["witness_space_provenance"] = "transcribed + representatively verified"
        return ok and all(member.values()), w

    def h():
        return _dichotomy(ctx, b()[0], f()[0], g()[0], "flat extension")

    def y1():
        rep = ctx.report(Y)
        ok, w = _expect(rep, d_space=False, well_filtered=False, sober=False)
        w["d_space_witness"] = rep.witnesses.get("d_space")
        return ok, w

    def y2():
        W = ctx.space(Y)
        problems = check_irreducible_extras(W, ctx.cutoff) + point_closure_problems(W, ctx.cutoff)
        return W.irr_extras() == [W.all] and not problems, {"closed_grammar": W.grammar,
                                                            "extras": [W.label(d) for d in W.irr_extras()]}

    def y3():
        w = chain_filter_witness(ctx.space(Y), ctx.cutoff)
        return w["ok"] and ctx.report(Y).well_filtered is False, w

    def y4():
        W = ctx.space(Y)
        ok, w = _expect(ctx.report(Y), quasisober=True)
        chain = W.chains()[0]
        cut = W.lower_bounds(W.chain_upper_bounds(chain, None))
        w["naturals_cut_closure"] = W.label(cut)
        w["naturals_closure"] = W.label(W.chain_closure(chain, None))
        return ok and cut == W.all == W.chain_closure(chain, None), w

    def y5():
        return _expect(ctx.report(Y), dc=True, rudin=True, wd="yes")

    def y6():
        member = _member_of(ctx.report(Y), EXAMPLES["ex_coc_rd_wd_qsob_dc"])
        return all(member.values()), {"membership": member}

    return [
        ("a", "closed sets are the countable sets and the whole space; T1 with discrete order", a),
        ("b", "irreducible closed sets are the singletons and the whole space; not sober", b),
        ("c", "weakly sober and a cut space, but not quasisober", c),
        ("d", "compact sets are the finite sets, and the space is well-filtered", d),
        ("e", "not WD, hence neither Rudin nor DC", e),
        ("f", "not in any of the classes; the flat top extension is a sobrification", f),
        ("g", "the forced extension into Y has no upper bound to use", g),
        ("g.i", "Y is not a d-space, hence neither well-filtered nor sober", y1),
        ("g.ii", "closed and irreducible closed sets of Y", y2),
        ("g.iii", "the up-sets of the naturals witness that Y is not well-filtered", y3),
        ("g.iv", "Y is quasisober: the naturals have cut closure Y", y4),
        ("g.v", "Y is DC, Rudin and WD", y5),
        ("g.vi", "Y belongs to every class in question", y6),
        ("h", "no reflection into the classes exists", h),
    ]


ITEM_BUILDERS = {
    "ex_L_cut_wsob_qsob": _items_L,
    "ex_cof_dc_qsob": _items_cof,
    "ex_johnstone_dc_qsob": _items_johnstone,
    "ex_coc_rd_wd_qsob_dc": _items_coc,
}

NONEXISTENCE_ITEM = {"ex_L_cut_wsob_qsob": "h", "ex_cof_dc_qsob": "h", "ex_johnstone_dc_qsob": "d",
                     "ex_coc_rd_wd_qsob_dc": "h"}


def _json_safe(value):
    return json.loads(json.dumps(value, sort_keys=True, default=str))


def verify_nonreflective(example_name: str, spaces: Optional[dict] = None, cutoff: int = CUTOFF,
                         context: Optional[Context] = None) -> ExampleReport:
    """Run every item of one example; failures are report entries, never exceptions."""
    if example_name not in ITEM_BUILDERS:
        raise InputError(f"unknown example {example_name!r}; expected one of {sorted(ITEM_BUILDERS)}")
    ctx = context or Context(spaces, cutoff)
    items = []
    for item_id, claim, check in ITEM_BUILDERS[example_name](ctx):
        try:
            ok, witness = check()
            status = "pass" if ok else "fail"
        except Exception as exc:  # a failing check is a report entry
            status, witness = "fail", {"error": f"{type(exc).__name__}: {exc}"}
        items.append(Item(item_id, claim, status, _json_safe(witness)))
    categories = EXAMPLES[example_name]
    decisive = next(i for i in items if i.id == NONEXISTENCE_ITEM[example_name])
    refuted = sorted(categories) if decisive.status == "pass" else []
    return ExampleReport(example_name, items, categories, refuted)


def verify_all(spaces: Optional[dict] = None, cutoff: int = CUTOFF) -> list:
    ctx = Context(spaces, cutoff)
    return [verify_nonreflective(name, context=ctx) for name in ITEM_BUILDERS]


__all__ = ["EXAMPLES", "EXPECTED_ITEMS", "ExampleReport", "Item", "verify_all", "verify_nonreflective",
           "chain_into_two_tops", "discrete_into_upper", "johnstone_onto_naturals", "GALLERY_NAMES"]
