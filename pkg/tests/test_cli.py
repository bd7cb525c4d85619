import json

import pytest

from sobertool.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main


@pytest.fixture
def space_file(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_gallery_chain_with_top(capsys):
    code, report = run_json(capsys, "classify", "--gallery", "L_top")
    assert code == EXIT_OK
    c = report["results"]["classification"]
    assert c["cut_space"] is False
    assert c["witnesses"]["cut_space"]["closure"] == "N"
    assert report["warnings"] == ["representative-family verification only"]


def test_classify_sierpinski_file(capsys, space_file):
    path = space_file("sierpinski.json", {"points": ["0", "1"], "closed": [[], ["0"], ["0", "1"]]})
    code, report = run_json(capsys, "classify", "--file", path)
    c = report["results"]["classification"]
    assert code == EXIT_OK
    assert all(c[f] for f in ("sober", "d_space", "well_filtered", "cut_space", "weakly_sober", "quasisober",
                              "dc", "rudin"))


def test_classify_cocountable(capsys):
    _, report = run_json(capsys, "classify", "--gallery", "cocountable")
    c = report["results"]["classification"]
    assert c["well_filtered"] is True and c["wd"] == "no"


def test_reflect_without_top_is_an_input_error(capsys):
    code, report = run_json(capsys, "reflect", "--gallery", "cofinite_nat", "--kind", "natural")
    assert code == EXIT_INPUT
    assert report["error"]["type"] == "PreconditionError"
    assert "greatest" in report["error"]["message"]


def test_reflect_with_certificate(capsys):
    code, report = run_json(capsys, "reflect", "--gallery", "L_top", "--kind", "natural")
    assert code == EXIT_OK
    assert report["results"]["sobrification"]["ok"] is True
    assert report["results"]["negative_conditions"]["cut"]["is_K_neg"] is True


def test_reflect_finite_reports_witness(capsys, space_file):
    path = space_file("d.json", {"points": ["a", "b"], "closed": [[], ["a"], ["b"], ["a", "b"]]})
    code, report = run_json(capsys, "reflect", "--file", path, "--kind", "flat")
    assert code == EXIT_INPUT
    assert set(report["error"]["witness"]) == {"A", "B", "union"}


def test_hoare_power_space_of_two_point_discrete(capsys, space_file):
    path = space_file("two_point_discrete.json", {"points": ["a", "b"], "closed": [[], ["a"], ["b"], ["a", "b"]]})
    code, report = run_json(capsys, "powerspace", "--file", path, "--kind", "hoare", "--family", "all_closed")
    assert code == EXIT_OK
    assert len(report["results"]["space"]["points"]) == 3
    assert report["results"]["classification"]["sober"] is True


@pytest.mark.parametrize("kind", ["smyth", "sobrify"])
def test_other_power_spaces(capsys, space_file, kind):
    path = space_file("s.json", {"points": ["0", "1"], "closed": [[], ["0"], ["0", "1"]]})
    code, report = run_json(capsys, "powerspace", "--file", path, "--kind", kind)
    assert code == EXIT_OK and report["results"]["classification"]["sober"]


def test_power_space_needs_a_finite_space(capsys):
    code, report = run_json(capsys, "powerspace", "--gallery", "L_top")
    assert code == EXIT_INPUT


def test_verify_one_example(capsys):
    code, report = run_json(capsys, "verify", "ex_L_cut_wsob_qsob")
    assert code == EXIT_OK
    assert report["results"]["summary"] == {"ex_L_cut_wsob_qsob": {"items": 11, "passed": 11}}


def test_verify_all_text(capsys):
    code, out = run(capsys, "verify", "all", "--format", "text")
    assert code == EXIT_OK
    assert out.count(" pass ") == 11 + 9 + 8 + 14
    assert out.rstrip().endswith("status: ok")


def test_oracle_sample(capsys):
    code, report = run_json(capsys, "oracle-sample", "--gallery", "johnstone_scott", "--cutoff", "4")
    assert code == EXIT_OK
    assert report["results"]["sample"]["ok"] is True
    code, _ = run_json(capsys, "oracle-sample", "--gallery", "johnstone_scott", "--cutoff", "3")
    assert code == EXIT_INPUT


def test_failing_verification_exits_one(capsys, monkeypatch):
    from sobertool import cli, verify

    real = verify.verify_nonreflective

    def broken(name, spaces=None, cutoff=8, context=None):
        from sobertool.gallery import make_gallery_space
        return real(name, spaces={"L_top": make_gallery_space("L_top", nat_closed=False)}, cutoff=cutoff)

    monkeypatch.setattr(cli, "verify_nonreflective", broken)
    code, report = run_json(capsys, "verify", "ex_L_cut_wsob_qsob")
    assert code == EXIT_FAILED and report["status"] == "failed"


@pytest.mark.parametrize("argv", [
    ["classify"],
    ["classify", "--gallery", "nowhere"],
    ["classify", "--gallery", "L_top", "--file", "x.json"],
    ["classify", "--file", "/nonexistent/space.json"],
    ["verify", "ex_missing"],
    ["reflect", "--gallery", "L_top", "--kind", "sideways"],
    ["classify", "--gallery", "L_top", "--cutoff", "0"],
])
def test_input_errors_exit_two(capsys, argv):
    code, report = run_json(capsys, *argv)
    assert code == EXIT_INPUT and report["status"] == "input_error"


def test_malformed_files(capsys, space_file, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run_json(capsys, "classify", "--file", str(bad))
    assert code == EXIT_INPUT
    code, report = run_json(capsys, "classify", "--file", space_file("t0.json", {"points": ["a", "b"],
                                                                                  "closed": [[], ["a", "b"]]}))
    assert code == EXIT_INPUT and "T0" in report["error"]["message"]


def test_json_output_is_byte_identical(capsys):
    first = run(capsys, "classify", "--gallery", "johnstone_scott")[1]
    second = run(capsys, "classify", "--gallery", "johnstone_scott")[1]
    assert first == second
    assert "timing_seconds" not in first


def test_timing_is_opt_in(capsys):
    _, report = run_json(capsys, "classify", "--gallery", "nat_scott", "--timing")
    assert report["timing_seconds"] >= 0


def test_digest_tracks_the_input(capsys, space_file):
    a = space_file("a.json", {"points": ["0", "1"], "closed": [[], ["0"], ["0", "1"]]})
    b = space_file("b.json", {"points": ["0", "1"], "closed": [[], ["1"], ["0", "1"]]})
    da = run_json(capsys, "classify", "--file", a)[1]["input_digest"]
    db = run_json(capsys, "classify", "--file", b)[1]["input_digest"]
    assert da != db and len(da) == 64


def test_text_table(capsys):
    code, out = run(capsys, "classify", "--gallery", "L_top", "--format", "text")
    assert code == EXIT_OK
    assert any(line.startswith("results.classification.cut_space") and line.endswith("False")
               for line in out.splitlines())
