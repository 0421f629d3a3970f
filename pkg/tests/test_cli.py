import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from zclass import cli

SCHEMA = json.loads(resources.files("zclass").joinpath("schema/report.schema.json").read_text())


def run(*argv):
    return cli.run(list(argv))


def as_json(*argv):
    doc = run(*argv, "--format", "json")
    assert doc.exit_code == 0, doc.body
    data = json.loads(doc.body)
    jsonschema.validate(data, SCHEMA)
    return data


def test_tables_text_rows():
    assert run("tables", "q_qtilde", "--max", "20").body.splitlines()[-1] == "20 7 4"
    assert run("tables", "p_tilde", "--max", "20", "--format", "csv").body.splitlines()[-1] == "20,49"
    eps = run("tables", "eps_delta", "--max", "51").body.splitlines()
    assert "47 0 3 3^1 11^1 33^1, 5^1 7^1 35^1, 5^1 15^1 27^1" in eps


@pytest.mark.parametrize("table", cli.TABLES)
def test_tables_csv_shape(table):
    rows = list(csv.reader(io.StringIO(run("tables", table, "--max", "60", "--format", "csv").body)))
    assert len(rows) == 61
    assert len({len(r) for r in rows}) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("tables", "eps_delta", "--max", "30"),
        ("classify", "--group", "an", "1^3", "5"),
        ("classify", "--group", "an", "9"),
        ("classify", "--group", "sn", "1^2 3"),
        ("count", "--group", "an", "--n", "20"),
        ("count", "--group", "sn", "--n", "5"),
        ("zclasses", "--group", "an", "--n", "12"),
        ("zclasses", "--group", "sn", "--n", "7"),
        ("rep", "1^3"),
        ("verify", "--max", "4", "--checks", "counts"),
    ],
)
def test_json_validates(argv):
    assert as_json(*argv)["command"] == argv[0]


def test_classify_examples():
    d = as_json("classify", "--group", "an", "1^3 5")
    assert (d["zpartner"], d["rational"], d["splits"]) == ("3 5", True, False)
    d = as_json("classify", "--group", "an", "9")
    assert d["splits"] and d["split_zclasses_distinct"] and d["rational"]
    assert as_json("classify", "--group", "sn", "1^2 3")["zpartner"] == "2 3"


def test_count_examples():
    d = as_json("count", "--group", "sn", "--n", "5")
    assert (d["conjugacy_classes"], d["z_classes"]) == (7, 6)
    assert "rational_classes" not in d


def test_zclasses_listing():
    body = run("zclasses", "--group", "an", "--n", "6").body
    assert "{1^3 3, 3^2}" in body.splitlines()
    groups = as_json("zclasses", "--group", "an", "--n", "9")["groups"]
    nines = [g for g in groups if any(lab["partition"] == "9" for lab in g)]
    assert nines == [[{"partition": "9", "tag": "split+"}], [{"partition": "9", "tag": "split-"}]]


def test_count_agrees_with_listing_to_40():
    for n in range(4, 41):
        count = cli.count_fields("an", n)["z_classes"]
        assert count == as_json("zclasses", "--group", "an", "--n", str(n))["z_classes"]
        assert count == len(as_json("zclasses", "--group", "an", "--n", str(n))["groups"]) if n <= 12 else True


@pytest.mark.parametrize("text,expected", [("2 3", "(1,2)(3,4,5)"), ("1^3", "()"), ("3^2", "(1,2,3)(4,5,6)")])
def test_rep(text, expected):
    assert run("rep", text).body == expected + "\n"


def test_verify_small():
    doc = run("verify", "--max", "4", "--checks", "counts")
    assert doc.exit_code == 0
    assert "cl(A_n)=4 z(A_n)=3" in doc.body


@pytest.mark.parametrize(
    "argv,code",
    [
        (("rep", "3 2"), 2),
        (("classify", "--group", "an", "1^0 4"), 2),
        (("classify", "--group", "an", "2 3"), 3),
        (("classify", "--group", "sn", "1 1"), 2),
        (("classify", "--group", "sn", "2"), 3),
        (("count", "--group", "an", "--n", "3"), 3),
        (("zclasses", "--group", "sn", "--n", "2"), 3),
        (("verify", "--max", "10"), 3),
        (("tables", "p_tilde", "--max", "0"), 3),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv).exit_code == code


def test_odd_partition_message_cites_parity():
    assert "must be even" in run("classify", "--group", "an", "2 3").body


@pytest.mark.parametrize("argv", [("tables", "nope"), ("verify", "--checks", "foo"), ("count", "--n", "x"), ()])
def test_argparse_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    assert exc.value.code == 2


def test_verify_mismatch_exit_code(monkeypatch):
    monkeypatch.setattr(cli.cf, "count_zclasses_alt", lambda n: -1)
    doc = run("verify", "--max", "4", "--checks", "counts")
    assert doc.exit_code == 1
    assert doc.body.startswith("PASS counts n=3") and "FAIL counts n=4" in doc.body


def test_main_writes_stdout(capsys):
    assert cli.main(["rep", "2", "3"]) == 0
    assert capsys.readouterr().out == "(1,2)(3,4,5)\n"
