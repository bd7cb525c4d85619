import json
from pathlib import Path

import pytest

from sobertool.errors import InputError
from sobertool.gallery import make_gallery_space
from sobertool.verify import EXAMPLES, EXPECTED_ITEMS, verify_all, verify_nonreflective

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def reports():
    return {r.example: r for r in verify_all()}


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_every_item_passes(reports, name):
    r = reports[name]
    failed = [(i.id, i.witness) for i in r.items if i.status != "pass"]
    assert not failed
    assert len(r.items) == EXPECTED_ITEMS[name]
    assert r.categories_refuted == sorted(EXAMPLES[name])


def test_item_labels():
    ids = {name: [i.id for i in verify_nonreflective(name).items] for name in ("ex_johnstone_dc_qsob",)}
    assert ids["ex_johnstone_dc_qsob"] == ["i", "ii", "iii", "a", "b", "c", "d", "e"]


def test_sub_items_of_the_cocountable_example(reports):
    ids = [i.id for i in reports["ex_coc_rd_wd_qsob_dc"].items]
    assert ids == ["a", "b", "c", "d", "e", "f", "g", "g.i", "g.ii", "g.iii", "g.iv", "g.v", "g.vi", "h"]


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_reports_match_golden_files(reports, name):
    assert reports[name].to_json() + "\n" == (GOLDEN / f"{name}.json").read_text()


def test_report_json_shape(reports):
    data = json.loads(reports["ex_L_cut_wsob_qsob"].to_json())
    assert set(data) == {"example", "items", "categories_refuted"}
    assert set(data["items"][0]) == {"id", "claim", "status", "witness"}


def test_refutation_items_carry_revalidated_certificates(reports):
    g = next(i for i in reports["ex_L_cut_wsob_qsob"].items if i.id == "g")
    assert g.witness["kind"] == "B" and g.witness["revalidated"] is True


def test_mutated_grammar_flips_items_to_fail():
    mutated = make_gallery_space("L_top", nat_closed=False)
    r = verify_nonreflective("ex_L_cut_wsob_qsob", spaces={"L_top": mutated})
    assert any(i.status == "fail" for i in r.items)
    assert r.categories_refuted == []
    assert all("error" in i.witness or i.status == "pass" for i in r.items)


def test_swapped_witness_space_breaks_the_refutation():
    # the Scott naturals contain none of the discrete points, so the inclusion has nowhere to land
    r = verify_nonreflective("ex_cof_dc_qsob", spaces={"Y_upper": make_gallery_space("nat_scott")})
    g = next(i for i in r.items if i.id == "g")
    assert g.status == "fail"
    assert r.categories_refuted == []


def test_unknown_example():
    with pytest.raises(InputError):
        verify_nonreflective("ex_unknown")
