import json
from types import SimpleNamespace

import pytest
from click.testing import CliRunner
from hamcrest import assert_that, equal_to, has_entries, has_entry

from sergeev_tools.common.config import CONFIG_ENV_VAR
from sergeev_tools.sergeev_admin.internal import verify
from sergeev_tools.sergeev_admin.internal.suites import Check
from sergeev_tools.sergeev_admin.sergeev_admin_cli import cli


@pytest.fixture(autouse=True)
def no_config_file(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "missing.yaml"))


def _run(*args):
    return CliRunner().invoke(cli, ["--quiet", *args])


def _json(result):
    assert_that(result.exit_code, equal_to(0))
    return json.loads(result.stdout)


def test_verify_passes():
    report = _json(_run("verify", "--d", "2", "--l", "3", "--suite", "signs"))
    assert_that(report, has_entries(schema=1, seed=0, **{"pass": True}))
    assert_that(report["instance"], has_entries(d=2, l=3))
    assert_that(list(report["suites"]), equal_to(["signs"]))


def test_verify_output_is_reproducible():
    args = ("verify", "--d", "2", "--l", "2", "--suite", "kernel", "--suite", "jm", "--seed", "3")
    first, second = _run(*args), _run(*args)
    assert_that(first.exit_code, equal_to(0))
    assert_that(first.stdout, equal_to(second.stdout))


def test_verify_table_format():
    result = _run("--format", "table", "verify", "--d", "2", "--l", "2", "--suite", "signs")
    assert_that(result.exit_code, equal_to(0))
    assert_that("suite" in result.stdout and "signs" in result.stdout, equal_to(True))


def test_verify_writes_output_file(tmp_path):
    path = tmp_path / "report.json"
    result = _run("verify", "--d", "2", "--l", "3", "--suite", "signs", "--output", str(path))
    assert_that(result.exit_code, equal_to(0))
    assert_that(json.loads(path.read_text()), has_entry("pass", True))


def test_verify_failed_check(monkeypatch):
    monkeypatch.setitem(
        verify.SUITES, "signs", SimpleNamespace(run=lambda context: [Check("broken", failures=["x"])])
    )
    result = _run("verify", "--d", "2", "--l", "3", "--suite", "signs")
    assert_that(result.exit_code, equal_to(1))


@pytest.mark.parametrize(
    "args",
    [
        pytest.param(("verify", "--d", "2", "--l", "3", "--suite", "unknown"), id="unknown suite"),
        pytest.param(("verify", "--d", "0", "--l", "3", "--suite", "signs"), id="zero strands"),
        pytest.param(("verify", "--d", "2", "--l", "3", "--f", "2,0,0,0"), id="non-monic f"),
        pytest.param(
            ("verify", "--d", "2", "--l", "3", "--suite", "zbasis", "--guard", "10"),
            id="guard exceeded",
        ),
        pytest.param(("center", "--d", "2", "--l", "3", "--guard", "10"), id="center guard"),
        pytest.param(("element", "z", "--d", "2", "--l", "3", "--lambda", "2/1"), id="bad lambda"),
        pytest.param(("element", "xcycle", "--d", "2", "--l", "3", "--A", "1,2"), id="missing r"),
        pytest.param(
            ("element", "p", "--d", "2", "--l", "3", "--mu", "2", "--algebra", "graded"),
            id="p in graded algebra",
        ),
    ],
)
def test_usage_errors(args):
    assert_that(_run(*args).exit_code, equal_to(2))


def test_element_jucys_murphy_of_first_strand():
    report = _json(_run("element", "jm", "--d", "2", "--l", "3", "--i", "1", "--k", "3"))
    assert_that(report["element"], equal_to({"algebra": "graded", "terms": []}))
    assert_that(report["params"], equal_to({"i": 1, "k": 3}))


def test_element_cxcycle():
    report = _json(_run("element", "cxcycle", "--d", "2", "--l", "2", "--A", "1,2", "--r", "0"))
    assert_that(report, has_entries(kind="cxcycle", params={"A": "(1 2)", "r": 0}))
    assert_that(len(report["element"]["terms"]), equal_to(4))


def test_element_symmetric_polynomial():
    report = _json(_run("element", "p", "--d", "2", "--l", "3", "--mu", "2"))
    assert_that(report["element"]["algebra"], equal_to("sergeev"))
    assert_that(report["params"], equal_to({"mu": "(2)"}))
    assert_that(len(report["element"]["terms"]) > 0, equal_to(True))


@pytest.mark.parametrize(
    "d,l,algebra,rank",
    [
        pytest.param(1, 3, "sergeev", 2, id="sergeev d=1,l=3"),
        pytest.param(2, 3, "sergeev", 4, id="sergeev d=2,l=3"),
        pytest.param(2, 3, "graded", 4, id="graded d=2,l=3"),
    ],
)
def test_center(d, l, algebra, rank):
    report = _json(_run("center", "--d", str(d), "--l", str(l), "--algebra", algebra))
    assert_that(report, has_entries(rank=rank, algebra=algebra, parity="even", basis=[]))
    for comparison in report["comparisons"].values():
        assert_that(comparison, has_entries(rank=rank, span_equal=True, strict=False))


def test_center_witnesses():
    report = _json(_run("center", "--d", "1", "--l", "3", "--algebra", "sergeev", "--witnesses"))
    assert_that(len(report["basis"]), equal_to(2))


def test_config():
    result = _run("config")
    assert_that(result.exit_code, equal_to(0))
    assert_that("dimension_guard: 5000" in result.stdout, equal_to(True))
