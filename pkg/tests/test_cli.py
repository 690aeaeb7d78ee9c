import json
import subprocess
import sys
from pathlib import Path

import pytest

from infoalg.cli import exit_code, run
from infoalg.document import Document, dumps, loads
from infoalg.errors import MalformedInputError
from infoalg.instances import (
    bundled_df_instances,
    bundled_labeled_instances,
    constraint_algebra,
    truncated_min_plus,
)

FIX = Path(__file__).parent / "fixtures"


def invoke(*argv):
    out, err = [], []
    code = run([str(a) for a in argv], out.append, err.append)
    return code, "".join(out), "".join(err)


def test_exit_codes_for_the_four_fixtures():
    assert invoke("check", FIX / "powerset2.json")[0] == 0
    assert invoke("check", FIX / "broken_commutativity.json")[0] == 1
    assert invoke("check", FIX / "malformed.json")[0] == 2
    assert invoke("check", FIX / "chain13.json")[0] == 3


def test_exit_code_is_a_function_of_the_report():
    for name in ("powerset2", "broken_commutativity", "malformed", "chain13"):
        code, out, _ = invoke("check", FIX / f"{name}.json")
        assert exit_code(json.loads(out)) == code


def test_check_report_contents():
    code, out, err = invoke("check", FIX / "powerset2.json")
    r = json.loads(out)
    assert r["classification"]["s_compact"] is True
    assert r["axioms"]["semigroup"]["passed"] is True
    assert "check: pass" in err
    code, out, _ = invoke("check", FIX / "broken_commutativity.json")
    r = json.loads(out)
    assert r["axioms"]["semigroup"]["counterexample"] == ["{}", "{x0}"]
    assert "classification" not in r


def test_min_plus_document_fails_idempotency():
    code, out, _ = invoke("check", FIX / "minplus.json")
    assert code == 1
    assert json.loads(out)["axioms"]["idempotency"]["passed"] is False


def test_raising_the_cap_turns_a_limit_into_a_pass():
    assert invoke("--max-subsets", 2**13, "check", FIX / "chain13.json")[0] == 0


def test_env_cap_with_flag_precedence(monkeypatch):
    monkeypatch.setenv("INFOALG_MAX_SUBSETS", "8")
    assert invoke("check", FIX / "powerset2.json")[0] == 3
    assert invoke("--max-subsets", 4096, "check", FIX / "powerset2.json")[0] == 0


def test_bad_env_value_is_malformed(monkeypatch):
    monkeypatch.setenv("INFOALG_MAX_CARRIER", "lots")
    assert invoke("check", FIX / "powerset2.json")[0] == 2


def test_reports_are_byte_identical():
    assert invoke("check", FIX / "softset21.json")[1] == invoke("check", FIX / "softset21.json")[1]


def test_instance_documents():
    code, out, _ = invoke("instance", "powerset", "--size", 3)
    assert code == 0 and len(json.loads(out)["carrier"]) == 8
    code, out, _ = invoke("instance", "unit-interval", "--grid", 16)
    doc = json.loads(out)
    assert len(doc["carrier"]) == 17
    assert doc["analytic"]["classification"]["s_compact"] is False
    assert doc["focus"]["0"]["3/4"] == "1/2"


def test_constraint_instance_passes_check(tmp_path):
    code, out, _ = invoke("instance", "constraint", "--semiring", "boolean", "--vars", 1, "--dom", 2)
    p = tmp_path / "c.json"
    p.write_text(out)
    assert invoke("check", p)[0] == 0


def test_instance_bad_params():
    assert invoke("instance", "unit-interval", "--grid", 5)[0] == 2
    assert invoke("instance", "constraint", "--semiring", "tropical")[0] == 2
    assert invoke("instance", "nonsense")[0] == 2


def test_transform_commands(tmp_path):
    code, out, _ = invoke("transform", FIX / "softset21.json", "--to", "domain-free", "-o", tmp_path / "q.json")
    r = json.loads(out)
    assert code == 0 and r["carrier_size"] == 4 and r["theorems"]["passed"]
    assert invoke("check", tmp_path / "q.json")[0] == 0
    code, out, _ = invoke("transform", FIX / "powerset2.json", "--to", "labeled")
    assert code == 0 and json.loads(out)["theorems"]["checks"]["theorem5_s_compact"] is True
    assert invoke("transform", FIX / "powerset2.json", "--to", "domain-free")[0] == 2


def test_fnspace_commands():
    code, out, _ = invoke("fnspace", FIX / "chain2.json", FIX / "chain2.json")
    r = json.loads(out)
    assert code == 0 and r["functions"] == 3 and r["classification"]["s_continuous"]
    assert r["weak_hypothesis"] is False
    code, out, _ = invoke("fnspace", FIX / "weak_chain.json", FIX / "chain2.json")
    assert code == 1 and "s-continuous" in json.loads(out)["error"]
    code, out, _ = invoke("fnspace", "--allow-weak-hypothesis", FIX / "weak_chain.json", FIX / "chain2.json")
    assert json.loads(out)["weak_hypothesis"] is True
    assert invoke("--max-carrier", 3, "fnspace", FIX / "chain2.json", FIX / "chain2.json")[0] == 3


def test_search_command():
    code, out, _ = invoke("search-remark3", "--count", 3, FIX / "softset21.json")
    r = json.loads(out)
    assert code == 0 and r["counterexamples"] == [] and r["kind"] == "exploration"
    assert invoke("search-remark3", FIX / "powerset2.json")[0] == 2


def test_missing_file_is_malformed(tmp_path):
    assert invoke("check", tmp_path / "absent.json")[0] == 2
    (tmp_path / "bad.json").write_text("{not json")
    assert invoke("check", tmp_path / "bad.json")[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "infoalg.cli", "check", str(FIX / "powerset2.json")], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "pass"


# --- documents ------------------------------------------------------------


@pytest.mark.parametrize("alg", bundled_df_instances() + bundled_labeled_instances(), ids=lambda a: a.name)
def test_document_round_trip(alg):
    text = dumps(alg)
    doc = loads(text)
    assert doc.algebra == alg
    assert dumps(doc) == text


def test_fixture_documents_are_canonical():
    for name in ("powerset2", "chain2", "softset21", "minplus", "chain13"):
        text = (FIX / f"{name}.json").read_text()
        assert dumps(loads(text)) == text


def test_triples_form_is_accepted():
    alg = constraint_algebra(truncated_min_plus(), [], ["0", "1"])
    obj = json.loads(dumps(alg))
    obj["combine"] = {
        "triples": [[p, q, alg.combine(p, q)] for p in alg.carrier for q in alg.carrier]
    }
    assert loads(json.dumps(obj)).algebra == alg


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("kind"),
        lambda d: d.update(format_version=99),
        lambda d: d.update(kind="other"),
        lambda d: d["lattice"].update(top="nope"),
        lambda d: d["lattice"]["leq"].append(["1", "ghost"]),
        lambda d: d["combine"]["dense"].pop(),
        lambda d: d.update(combine={"dense": [], "triples": []}),
        lambda d: d["focus"]["1"].update({"ghost": "0"}),
        lambda d: d.update(neutral="ghost"),
    ],
)
def test_malformed_documents(mutate):
    d = json.loads((FIX / "chain2.json").read_text())
    mutate(d)
    with pytest.raises(MalformedInputError):
        loads(json.dumps(d))


def test_labeled_document_rejects_out_of_domain_marginal():
    d = json.loads((FIX / "softset21.json").read_text())
    d["marginalize"]["{e1}"]["()"] = "()"
    with pytest.raises(MalformedInputError):
        loads(json.dumps(d))


def test_document_keeps_bases_and_metadata():
    doc = loads((FIX / "powerset2.json").read_text())
    assert isinstance(doc, Document)
    assert doc.bases[0].name == "singletons"
    assert doc.metadata["instance"] == "powerset"
