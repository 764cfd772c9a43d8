import json
from pathlib import Path

import jsonschema
import pytest

from trisectkit.cli import main

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "record.schema.json").read_text())


def records(capsys, argv, code):
    assert main(argv + ["--json"]) == code
    lines = [ln for ln in capsys.readouterr().out.splitlines() if ln.startswith("{")]
    assert lines
    out = [json.loads(ln) for ln in lines]
    for rec in out:
        jsonschema.validate(rec, SCHEMA)
    return out


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


@pytest.mark.parametrize(
    "argv,code",
    [
        (["validate", "example:hopf-L"], 0),
        (["reduce", "example:hopf-L"], 0),
        (["canon", "example:trisection-000"], 0),
        (["intersect", "example:hopf-L", "--families", "L", "alpha"], 0),
        (["cut-check", "example:s1s2(2,1)"], 0),
        (["homology", "example:lens(3,1)"], 0),
        (["surgery", "example:hopf-L"], 0),
        (["search-dsp", "example:hopf-L", "--no-cert"], 0),
        (["search-dsp", "example:lens-L(2)", "--no-cert"], 1),
        (["search-dspp", "example:hopf-L", "--depth", "0", "--no-cert"], 2),
        (["trisection-check", "example:trisection-100", "--search"], 0),
        (["stabilize", "example:trisection-000", "--sector", "2"], 0),
        (["example", "unlink-L"], 0),
        (["validate", "example:no-such-thing"], 4),
    ],
)
def test_records_match_schema(capsys, argv, code):
    recs = records(capsys, argv, code)
    assert all(r["command"] == argv[0] for r in recs)


def test_replay_and_render_records(capsys, tmp_path):
    cert = tmp_path / "c.cert"
    records(capsys, ["search-dspp", "example:hopf-L", "--cert", str(cert)], 0)
    recs = records(capsys, ["replay", str(cert)], 0)
    assert [r["side"] for r in recs] == ["H1", "H2"]
    records(capsys, ["render", "example:hopf-L", "-o", str(tmp_path / "h.svg")], 0)


def test_schema_rejects_unknown_fields():
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"command": "validate", "status": "verified", "extra": 1}, SCHEMA)
