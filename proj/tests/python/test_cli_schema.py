"""Every CLI report over a seeded corpus validates against the published schema."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "hahnroot-json-1.schema.json").read_text())
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
CLI = os.environ.get("HAHNROOT_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="HAHNROOT_CLI not set")

VERBS = [["roots", "--depth", "25"], ["addpol"], ["intersections"], ["bounds"], ["bounds", "--mode", "paper"], ["order-bound"]]


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, json.loads(proc.stdout or proc.stderr)


@pytest.mark.parametrize("seed", range(50))
def test_corpus_reports_validate(seed):
    p = "3" if seed % 2 else "2"
    for verb in VERBS:
        code, report = run(verb[0], "--p", p, "--seed", str(seed), *verb[1:])
        assert code == 0, report
        VALIDATOR.validate(report)


def test_golden_reports():
    _, r = run("roots", "--p", "3", "--poly", "X^2-t", "--depth", "5")
    assert [b["status"] for b in r["branches"]] == ["exact_root", "exact_root"]
    assert [b["text"] for b in r["branches"]] == ["t^(1/2)", "2*t^(1/2)"]
    _, b = run("bounds", "--p", "3", "--poly", "X^2-t")
    assert (b["maxram"], b["order_bound"]) == (2, "ω^2")
    _, a = run("addpol", "--p", "3", "--poly", "X^2-t")
    assert a["addpol"] == "X^3 - t*X"


@pytest.mark.parametrize(
    "args, kind",
    [
        (["roots", "--p", "3", "--poly", "X^2+q"], "parse_error"),
        (["roots", "--p", "4", "--poly", "X"], "invalid_argument"),
        (["addpol", "--p", "3", "--poly", "t"], "invalid_argument"),
        (["roots", "--p", "3", "--poly", "X/(t-t)"], "parse_error"),
        (["roots", "--p", "3", "--poly", "X", "--depth", "0"], "usage"),
    ],
)
def test_errors_are_reported_as_json(args, kind):
    code, report = run(*args)
    assert code != 0
    VALIDATOR.validate(report)
    assert report["error"]["kind"] == kind
