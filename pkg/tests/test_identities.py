import pytest

from umbral import MultiPoly, zeilberger_hermite
from umbral.identities import (
    PROFILES, REGISTRY, Bounds, IdentityId, IdentityReport, verify, verify_all,
)


@pytest.fixture(scope="module")
def quick():
    return verify_all("quick")


def test_registry_has_22_entries():
    assert len(REGISTRY) == len(IdentityId) == 22


def test_quick_profile_all_pass(quick):
    assert [r.id for r in quick] == list(REGISTRY)
    bad = [(r.id, r.counterexample) for r in quick if not r.passed]
    assert not bad


def test_reports_keep_the_status_invariant(quick):
    for r in quick:
        assert (r.status == "fail") == (r.counterexample is not None)
    with pytest.raises(ValueError):
        IdentityReport(IdentityId.KANEKO, {}, "fail")


def test_kaneko_to_20():
    r = verify(IdentityId.KANEKO, Bounds(index=20))
    assert r.passed and r.checked == 21


def test_gessel_mult_a2():
    assert verify("GESSEL_MULT", Bounds(index=15, gessel_a=(2,))).passed


def test_gessel_72_at_excluded_index_reports_counterexample():
    r = verify("GESSEL_72", Bounds(index=1, include_excluded=True))
    assert r.status == "fail"
    assert r.counterexample == {"params": {"n": 1}, "lhs": "1/2", "rhs": "-1/2"}


def test_zeil_gf_order_10():
    assert verify(IdentityId.ZEIL_GF, Bounds(order=10)).passed


def _witness(report):
    (w,) = report.witnesses
    return w


def test_proviso_witnesses_fail(quick):
    by_id = {r.id: r for r in quick}
    for key in ("GESSEL_72", "MOMIYAMA", "EULER_EVEN_SUM", "HERMITE_MASTER", "HERMITE_GF_EVEN"):
        w = _witness(by_id[IdentityId(key)])
        assert w.expect_fail and w.failed, key


def test_momiyama_needs_its_proviso():
    r = verify("MOMIYAMA", Bounds(two_index=2, include_excluded=True))
    assert r.counterexample["params"] == {"m": 0, "n": 0}


def test_hermite_master_squared_variant_fails_at_order_2():
    w = _witness(verify("HERMITE_MASTER", Bounds(order=2)))
    assert w.params["order"] == 2 and w.failed


def test_quintuple_diagonal():
    r = verify("QUINTUPLE", Bounds(order=6, quintuple_order=3))
    assert r.passed and r.subchecks == {"diagonal": "pass"}
    u = MultiPoly.var("u")
    assert zeilberger_hermite(2, 2, var="u") == 2 * u**2 + 4 * u + 1


def test_chen_subchecks(quick):
    chen = next(r for r in quick if r.id == IdentityId.CHEN)
    assert chen.subchecks == {"chen_1": "pass", "chen_2": "pass"}


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(index=0)
    with pytest.raises(ValueError):
        Bounds(order=-1)
    with pytest.raises(ValueError):
        Bounds(gessel_a=())
    with pytest.raises(ValueError):
        verify("NOT_AN_IDENTITY")


def test_parallel_run_matches_serial():
    small = Bounds(index=4, two_index=3, order=4, quintuple_order=2)
    ids = ["QUINTUPLE", "KANEKO", "ZEIL_GF"]
    a = [r.to_json()["status"] for r in verify_all(small, ids, jobs=2)]
    b = verify_all(small, ids)
    assert a == [r.status for r in b]
    assert [r.id.value for r in b] == ["KANEKO", "ZEIL_GF", "QUINTUPLE"]


def test_profiles():
    assert PROFILES["quick"].index == 10 and PROFILES["quick"].order == 8
    assert PROFILES["full"].index == 30 and PROFILES["full"].two_index == 12
    assert PROFILES["full"].order == 24 and PROFILES["full"].quintuple_order == 6
