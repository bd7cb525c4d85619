"""
Acceptance criteria 1-10, one test each.

Every test records a "criterion N: PASS|FAIL ..." line that is printed in
the terminal summary. Running this file directly prints the same lines.
Criterion 4 asks for a four-way identity that is false for sets that are
not lower sets, so it is kept red (strict xfail) with its counterexample.
"""

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sobertool.cli import main as cli_main  # noqa: E402
from sobertool.finite import (all_t0_spaces, classify, directed_closures, irreducible_closed, is_sober,  # noqa: E402
                              point_closures, random_space, rudin_sets)
from sobertool.gallery import GALLERY_NAMES, make_gallery_space  # noqa: E402
from sobertool.gallery.classify import classify_symbolic  # noqa: E402
from sobertool.gallery.sampling import consistency_sample  # noqa: E402
from sobertool.order import cut_closure, random_poset, subsets  # noqa: E402
from sobertool.powerspace import closure_identity_terms, families, hoare_space  # noqa: E402
from sobertool.reflection import (FLAT, NATURAL, make_extension, refute_extension, revalidate,  # noqa: E402
                                  sobrification_iso_check)
from sobertool.verify import (EXPECTED_ITEMS, Context, _coincidence, chain_into_two_tops,  # noqa: E402
                              discrete_into_upper, johnstone_onto_naturals, verify_nonreflective)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script outside pytest
    ACCEPTANCE_LINES = []

SEED = 20240601
HOARE_POINT_CAP = 15


def record(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    return line


# -- the criteria -----------------------------------------------------------


def criterion_1():
    rng = random.Random(SEED)
    checked = 0
    for _ in range(200):
        P = random_poset(rng.randint(1, 6), rng, density=rng.choice([0.2, 0.35, 0.6]))
        sets = list(subsets(P.elements))
        closure = {A: cut_closure(P, A) for A in sets}
        for A in sets:
            c = closure[A]
            if not (A <= c and closure[c] == c):
                return False, f"extensive/idempotent fails at {sorted(A)}"
        for A in sets:
            for B in sets:
                if A <= B and not closure[A] <= closure[B]:
                    return False, f"monotone fails at {sorted(A)} <= {sorted(B)}"
        for x in P.elements:
            if closure[frozenset({x})] != P.down(x):
                return False, f"point cut differs from down-set at {x}"
        checked += len(sets)
    return True, f"200 posets, {checked} subsets"


def _collapse(X):
    r = classify(X)
    pcs, dcs = set(point_closures(X)), set(directed_closures(X))
    rd, irr = set(rudin_sets(X)), set(irreducible_closed(X))
    return r.sober and pcs == dcs == rd == irr and pcs <= dcs <= rd <= irr and not r.implication_violations()


def criterion_2():
    count = 0
    for n in range(1, 5):
        for X in all_t0_spaces(n):
            count += 1
            if not _collapse(X):
                return False, f"exhaustive failure on {X.to_json()}"
    rng = random.Random(SEED)
    for _ in range(100):
        X = random_space(rng.choice([5, 6]), rng, density=rng.choice([0.0, 0.2, 0.35, 0.6]))
        if not _collapse(X):
            return False, f"random failure on {X.to_json()}"
    return True, f"{count} exhaustive spaces on <= 4 points and 100 random 5-6 point spaces"


def criterion_3():
    rng = random.Random(SEED)
    sizes, done = [], 0
    while done < 100:
        X = random_space(rng.randint(1, 5), rng, density=rng.choice([0.2, 0.35, 0.6]))
        if len(X.closed_sets) - 1 > HOARE_POINT_CAP:
            continue
        H = hoare_space(X).space
        if not is_sober(H)[0]:
            return False, f"Hoare space of {X.to_json()} is not sober"
        sizes.append(len(H))
        done += 1
    return True, f"100 spaces, Hoare spaces of {min(sizes)}-{max(sizes)} points"


def criterion_4():
    rng = random.Random(SEED)
    cases = failures = lower_cases = 0
    example = None
    for _ in range(50):
        X = random_space(rng.randint(1, 5), rng)
        P = X.specialization()
        fams = families(X)
        for name in ("point_closures", "irreducible"):
            for A in subsets(X.points):
                terms = closure_identity_terms(X, fams[name], A)
                values = list(terms.values())
                cases += 1
                is_lower = P.down_set(A) == A
                lower_cases += is_lower
                if any(v != values[0] for v in values):
                    failures += 1
                    if is_lower:
                        return False, f"identity fails on a lower set {sorted(A)}"
                    if example is None:
                        example = (X.to_json(), sorted(A), name)
    detail = (f"{cases} cases, {failures} fail (none on the {lower_cases} lower sets); "
              f"first counterexample A={example[1] if example else None} over {example[2] if example else None}")
    return failures == 0, detail


CLASSIFICATION = {
    "L_top": dict(cut_space=False, weakly_sober=False, quasisober=False, dc=True, rudin=True, wd="yes",
                  d_space=False, well_filtered=False),
    "cofinite_nat": dict(weakly_sober=True, quasisober=False, dc=False, rudin=True, well_filtered=False, t1=True),
    "johnstone_scott": dict(cut_space=True, weakly_sober=True, quasisober=False, dc=False, rudin=True,
                            well_filtered=False, d_space=True),
    "cocountable": dict(weakly_sober=True, quasisober=False, well_filtered=True, wd="no", rudin=False, dc=False),
}


def criterion_5():
    for name, expected in CLASSIFICATION.items():
        r = classify_symbolic(make_gallery_space(name))
        got = {k: getattr(r, k) for k in expected}
        if got != expected:
            return False, f"{name}: {got}"
    return True, "4 spaces, " + str(sum(map(len, CLASSIFICATION.values()))) + " flags"


def criterion_6():
    notes = []
    for name, kind in [("L_top", NATURAL), ("cofinite_nat", FLAT), ("cocountable", FLAT), ("johnstone_scott", FLAT)]:
        X = make_gallery_space(name)
        cert = sobrification_iso_check(X, make_extension(X, kind))
        if not cert.ok:
            return False, f"{name}/{kind}: {cert.checks}"
        notes.append(f"{name}/{kind}")
    try:
        make_extension(make_gallery_space("johnstone_scott"), NATURAL)
        return False, "the Johnstone space unexpectedly has a natural extension"
    except Exception:
        notes.append("johnstone natural extension undefined (no top), flat used")
    return True, "; ".join(notes)


REFUTATIONS = [
    ("L_top", NATURAL, "N_two_tops", chain_into_two_tops, "B"),
    ("cofinite_nat", FLAT, "Y_upper", discrete_into_upper, "A"),
    ("johnstone_scott", FLAT, "nat_scott", johnstone_onto_naturals, "A"),
    ("cocountable", FLAT, "Y2_upper", discrete_into_upper, "A"),
]


def criterion_7():
    kinds = []
    for name, kind, witness, make_map, expected in REFUTATIONS:
        X, W = make_gallery_space(name), make_gallery_space(witness)
        cert = refute_extension(X, make_extension(X, kind), W, make_map(X, W))
        if cert.kind != expected or not revalidate(cert):
            return False, f"{name} -> {witness}: kind {cert.kind}"
        if expected == "B" and cert.contradiction["preimage_not_closed"] != "N":
            return False, "kind B certificate fails on the wrong closed set"
        kinds.append(f"{name}->{witness}:{cert.kind}")
    return True, ", ".join(kinds)


def criterion_8():
    import contextlib
    import io
    import json
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(["verify", "all"])
    summary = json.loads(buf.getvalue())["results"]["summary"]
    counts = {k: v["items"] for k, v in summary.items()}
    if code != 0 or counts != EXPECTED_ITEMS or any(v["passed"] != v["items"] for v in summary.values()):
        return False, f"exit {code}, counts {counts}"
    mutated = verify_nonreflective("ex_L_cut_wsob_qsob",
                                   spaces={"L_top": make_gallery_space("L_top", nat_closed=False)})
    flipped = sum(i.status == "fail" for i in mutated.items)
    if not flipped:
        return False, "mutation left every item passing"
    return True, f"exit 0, items {sorted(counts.values())}, mutation flips {flipped} items"


def criterion_9():
    ctx = Context()
    results = {"L_top": _coincidence(ctx, "L_top", with_d=True),
               "cofinite_nat": _coincidence(ctx, "cofinite_nat", with_d=False),
               "johnstone_scott": _coincidence(ctx, "johnstone_scott", with_d=False)}
    bad = [k for k, (ok, _) in results.items() if not ok]
    sob = all(sobrification_iso_check(ctx.space(n), make_extension(ctx.space(n), k)).ok
              for n, k in [("L_top", NATURAL), ("cofinite_nat", FLAT), ("johnstone_scott", FLAT)])
    return not bad and sob, "identity homeomorphisms for " + ", ".join(results) if not bad else f"failed: {bad}"


def criterion_10():
    runs = 0
    for name in GALLERY_NAMES:
        for cutoff in (4, 8, 16):
            sample = consistency_sample(make_gallery_space(name), cutoff)
            d = sample["disagreements"]
            if d["membership"] or d["order"]:
                return False, f"{name} at {cutoff}: {d}"
            runs += 1
    return True, f"{runs} runs over {len(GALLERY_NAMES)} spaces, zero disagreements"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


# -- pytest wrappers --------------------------------------------------------


def _run(number):
    ok, detail = CRITERIA[number - 1]()
    record(number, ok, detail)
    assert ok, detail


def test_criterion_1_cut_closure_laws():
    _run(1)


def test_criterion_2_finite_collapse():
    _run(2)


def test_criterion_3_hoare_sobriety():
    _run(3)


@pytest.mark.xfail(strict=True, reason="the box term is strictly smaller for some sets that are not lower sets")
def test_criterion_4_closure_identity_for_all_sets():
    _run(4)


def test_criterion_5_gallery_classification():
    _run(5)


def test_criterion_6_sobrification_certificates():
    _run(6)


def test_criterion_7_refutation_certificates():
    _run(7)


def test_criterion_8_verify_all():
    _run(8)


def test_criterion_9_coincidence():
    _run(9)


def test_criterion_10_truncation_consistency():
    _run(10)


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(record(n, ok, detail))
    sys.exit(1 if failed else 0)
