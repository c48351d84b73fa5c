import pytest
from hamcrest import assert_that, equal_to, has_entries

from sergeev_tools.algebra.element import AlgebraConfig
from sergeev_tools.algebra.error import DimensionGuardError
from sergeev_tools.sergeev_admin.internal.suites import Check, SuiteContext
from sergeev_tools.sergeev_admin.internal.verify import SUITES, resolve_suites, run_suites


def _context(d, l, f=None, **kwargs):
    return SuiteContext(
        config=AlgebraConfig.create(d, l, f), random_samples=20, kernel_samples=50, **kwargs
    )


def _failures(report):
    return {
        f"{suite}/{check['name']}": check.get("failed_instances")
        for suite, result in report["suites"].items()
        for check in result["checks"]
        if not check["pass"]
    }


def test_check_outcome():
    gated = Check("gated")
    gated.record(True, "first")
    gated.record(False, "second")
    assert_that(gated.passed, equal_to(False))
    assert_that(
        gated.to_dict(),
        equal_to(
            {
                "name": "gated",
                "gated": True,
                "instances": 2,
                "failures": 1,
                "pass": False,
                "failed_instances": ["second"],
            }
        ),
    )

    observed = Check("observed", gated=False)
    observed.record(False, "instance")
    assert_that(observed.passed, equal_to(True))


def test_resolve_suites():
    assert_that(resolve_suites(["all"]), equal_to(list(SUITES)))
    assert_that(resolve_suites(["jm", "signs", "jm"]), equal_to(["signs", "jm"]))
    with pytest.raises(KeyError):
        resolve_suites(["unknown"])


@pytest.mark.parametrize(
    "suite,d,l",
    [
        pytest.param("signs", 3, 3, id="signs d=3,l=3"),
        pytest.param("signs", 4, 2, id="signs d=4,l=2"),
        pytest.param("hpoly", 3, 2, id="hpoly d=3,l=2"),
        pytest.param("hpoly", 3, 3, id="hpoly d=3,l=3"),
        pytest.param("xcycles", 3, 2, id="xcycles d=3,l=2"),
        pytest.param("xcycles", 2, 3, id="xcycles d=2,l=3"),
        pytest.param("cxcycles", 3, 2, id="cxcycles d=3,l=2"),
        pytest.param("cxcycles", 4, 2, id="cxcycles d=4,l=2"),
        pytest.param("cxcycles", 4, 3, id="cxcycles d=4,l=3"),
        pytest.param("oddskew", 4, 3, id="oddskew d=4,l=3"),
        pytest.param("oddskew", 3, 2, id="oddskew d=3,l=2"),
        pytest.param("jm", 3, 2, id="jm d=3,l=2"),
        pytest.param("jm", 3, 3, id="jm d=3,l=3"),
        pytest.param("jm", 2, 1, id="jm d=2,l=1"),
        pytest.param("zbasis", 2, 3, id="zbasis d=2,l=3"),
        pytest.param("zbasis", 3, 2, id="zbasis d=3,l=2"),
        pytest.param("mbasis", 2, 3, id="mbasis d=2,l=3"),
        pytest.param("mbasis", 3, 1, id="mbasis d=3,l=1"),
        pytest.param("main-theorem", 2, 3, id="main-theorem d=2,l=3"),
        pytest.param("main-theorem", 2, 2, id="main-theorem d=2,l=2"),
        pytest.param("relations", 3, 2, id="relations d=3,l=2"),
        pytest.param("relations", 2, 3, id="relations d=2,l=3"),
        pytest.param("kernel", 3, 3, id="kernel d=3,l=3"),
    ],
)
def test_suite_passes(suite, d, l):
    report = run_suites(_context(d, l), [suite])
    assert_that(_failures(report), equal_to({}))
    assert_that(report["pass"], equal_to(True))


def test_suites_with_lower_terms_in_f():
    report = run_suites(_context(2, 3, ["1", "0", "1", "0"]), ["relations", "kernel", "main-theorem"])
    assert_that(_failures(report), equal_to({}))


def test_even_level_observations():
    report = run_suites(_context(3, 3), ["cxcycles"])
    checks = {check["name"]: check for check in report["suites"]["cxcycles"]["checks"]}
    assert_that(checks["cx-three-cycle-factorization"]["details"], equal_to({"factorizes": False}))
    assert_that(checks["cx-transposition-square"], has_entries(gated=False, **{"pass": True}))

    report = run_suites(_context(3, 2), ["cxcycles"])
    checks = {check["name"]: check for check in report["suites"]["cxcycles"]["checks"]}
    assert_that(checks["cx-three-cycle-factorization"]["details"], equal_to({"factorizes": True}))
    assert_that(checks["cx-transposition-square"], has_entries(gated=True, failures=0))


def test_main_theorem_reports_ranks():
    report = run_suites(_context(2, 3), ["main-theorem"])
    checks = {check["name"]: check for check in report["suites"]["main-theorem"]["checks"]}
    assert_that(checks["even-center-basis"]["details"]["ranks"], has_entries(even_center=4))
    assert_that(checks["odd-center-observed"]["gated"], equal_to(False))


def test_guard():
    with pytest.raises(DimensionGuardError):
        run_suites(_context(2, 3, guard=10), ["zbasis"])

    report = run_suites(_context(2, 3, guard=10, skip_guarded=True), ["zbasis"])
    checks = {check["name"]: check for check in report["suites"]["zbasis"]["checks"]}
    assert_that(checks["z-center-comparison"]["skipped"], equal_to("dimension 72 exceeds the guard 10"))


def test_report_is_reproducible():
    first = run_suites(_context(2, 2), ["kernel", "relations"])
    second = run_suites(_context(2, 2), ["relations", "kernel"])
    assert_that(first, equal_to(second))
    assert_that(list(first["suites"]), equal_to(["relations", "kernel"]))


def test_jm_square_excess_is_observed_at_odd_level():
    report = run_suites(_context(3, 3), ["jm"])
    assert_that(report["pass"], equal_to(True))
    checks = {check["name"]: check for check in report["suites"]["jm"]["checks"]}
    assert_that(checks["jm-top-degree-square-excess"], has_entries(gated=False, failures=2))
    assert_that(
        sorted(checks["jm-top-degree-square-excess"]["details"]["excess"]),
        equal_to(["i=2 k=6", "i=3 k=6"]),
    )
    assert_that(
        list(checks["symmetric-polynomial-square-excess"]["details"]["excess"]),
        equal_to(["μ=(6)"]),
    )

    report = run_suites(_context(3, 2), ["jm"])
    checks = {check["name"]: check for check in report["suites"]["jm"]["checks"]}
    assert_that(checks["jm-top-degree-square-excess"]["skipped"], equal_to("even level or no k ≥ 2l"))
