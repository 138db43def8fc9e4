import json
import os

import pytest

import ordlat as o
from ordlat import docio
from ordlat.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_valid_lattice(capsys):
    code, out, _ = run(capsys, "check", fx("chain4_lattice.json"))
    assert code == 0
    report = json.loads(out)
    assert report["result"]["verdict"] == "valid lattice"


def test_check_m3_not_distributive(capsys):
    code, out, _ = run(capsys, "check", fx("m3_lattice.json"))
    assert code == 1
    report = json.loads(out)
    assert report["result"]["verdict"] == "NotDistributive"
    assert len(report["result"]["witness"]) == 3


def test_check_malformed_json(capsys):
    code, _, err = run(capsys, "check", fx("malformed.json"))
    assert code == 2
    assert "error" in err


def test_usage_error_returns_2(capsys):
    assert main(["bogus-command"]) == 2


def test_phi_chain2(capsys):
    code, out, _ = run(capsys, "phi", fx("chain2_poset.json"))
    assert code == 0
    report = json.loads(out)
    assert report["result"]["size"] == 3
    assert report["result"]["pairs"] == [[0, 0], [0, 1], [1, 1]]


def test_phi_lattice_chain3(capsys):
    code, out, _ = run(
        capsys, "phi", fx("chain3_lattice.json"), "--as", "lattice"
    )
    assert code == 0
    assert json.loads(out)["result"]["size"] == 6


def test_phi_cap_exceeded(capsys):
    code, _, err = run(
        capsys, "--max-size", "2", "phi", fx("chain3_lattice.json")
    )
    assert code == 1
    assert "CapExceeded" in err


def test_primes_chain3(capsys):
    code, out, _ = run(capsys, "primes", fx("chain3_lattice.json"))
    assert code == 0
    assert json.loads(out)["result"]["prime_ideals"] == [[0], [0, 1]]


def test_spec_chain2(capsys):
    code, out, _ = run(capsys, "spec", fx("chain2_poset.json"))
    assert code == 0
    assert json.loads(out)["result"]["document"]["size"] == 1


def test_downsets_antichain2(capsys):
    code, out, _ = run(capsys, "downsets", fx("antichain2_poset.json"))
    assert code == 0
    assert json.loads(out)["result"]["document"]["size"] == 4


def test_image_yes_chain3(capsys):
    code, out, _ = run(capsys, "image", fx("chain3_lattice.json"))
    assert code == 0
    report = json.loads(out)
    assert report["result"]["in_image"] is True
    assert report["result"]["witness_for_K"]["size"] == 2
    assert len(report["result"]["iso"]) == 3


def test_image_no_chain4(capsys):
    code, out, _ = run(capsys, "image", fx("chain4_lattice.json"))
    assert code == 1
    report = json.loads(out)
    assert report["result"]["in_image"] is False
    assert "odd size 3" in report["result"]["reason"]


def test_image_yes_e_cube2(capsys):
    code, out, _ = run(capsys, "image", fx("e_cube2_lattice.json"))
    assert code == 0
    assert json.loads(out)["result"]["witness_for_K"]["size"] == 3


def test_dot_hasse_edge_counts(capsys):
    for fixture, edges in [
        ("chain3_lattice.json", 2),
        ("cube2_poset.json", 4),
        ("antichain2_poset.json", 0),
    ]:
        code, out, _ = run(capsys, "dot", fx(fixture))
        assert code == 0
        assert out.count("->") == edges


def test_dot_order_mode(capsys):
    code, out, _ = run(capsys, "dot", fx("chain3_lattice.json"), "--target", "order")
    assert code == 0
    assert out.count("->") == 3


def test_experiments_suites_run(capsys):
    for suite, n in [
        ("corollary", "4"),
        ("lemma51", "3"),
        ("fixedpoints", "4"),
        ("shift", "1"),
    ]:
        code, out, _ = run(capsys, "experiments", suite, "--n-max", n)
        assert code == 0, suite
        assert json.loads(out)["result"]["all_pass"] is True


def test_experiments_dimtable_csv(capsys):
    code, out, _ = run(capsys, "experiments", "dimtable", "--n-max", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "id,size,dim,dim_rel,width,width_rel"
    assert len(lines) == 1 + 1 + 2 + 5


def test_output_flag(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["--output", str(target), "spec", fx("chain3_lattice.json")])
    assert code == 0
    assert json.loads(target.read_text())["command"] == "spec"


def test_document_roundtrip_fixtures():
    for name in sorted(os.listdir(FIXTURES)):
        if name == "malformed.json":
            continue
        with open(fx(name), "r", encoding="utf-8") as fh:
            text = fh.read()
        kind, P = docio.parse_document(text)
        doc = docio.poset_to_document(P, kind=kind)
        kind2, P2 = docio.document_to_poset(doc)
        assert kind2 == kind and P2 == P


def test_roundtrip_on_generated_posets():
    for n in (1, 2, 3, 4):
        for P in o.enumerate_posets(n):
            doc = docio.poset_to_document(P)
            _, P2 = docio.document_to_poset(doc)
            assert P2 == P


def test_parse_rejects_bad_documents():
    bad = [
        {"schema_version": "2", "kind": "poset", "size": 1, "leq_pairs": []},
        {"schema_version": "1", "kind": "thing", "size": 1, "leq_pairs": []},
        {"schema_version": "1", "kind": "poset", "size": -1, "leq_pairs": []},
        {"schema_version": "1", "kind": "poset", "size": 2, "leq_pairs": [[0, 5]]},
        {"schema_version": "1", "kind": "poset", "size": 2, "leq_pairs": [[0]]},
    ]
    for doc in bad:
        with pytest.raises(o.ParseError):
            docio.document_to_poset(doc)
