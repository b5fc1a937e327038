"""The built-in verification sweeps must all pass on small parameters."""

import pytest

from ortholag.verify import (SUITES, bijection_suite, corank_suite,
                             exception_families, exceptions_suite,
                             parity_suite, run_suite, tables_suite,
                             two_to_one_suite, witt_suite)


def assert_all_ok(checks):
    assert checks, "a suite must report at least one check"
    failed = [c for c in checks if not c.ok]
    assert not failed, failed


def test_suite_registry():
    assert set(SUITES) == {"parity", "bijection", "two_to_one", "corank",
                           "witt", "tables", "exceptions"}
    for fn in SUITES.values():
        assert callable(fn)


def test_parity_suite():
    assert_all_ok(parity_suite(n=2, q=3))
    assert_all_ok(parity_suite(n=1, q=5))


def test_bijection_suite():
    assert_all_ok(bijection_suite(n=1, q=3, c=-1))
    assert_all_ok(bijection_suite(n=1, q=5, c=1))


def test_two_to_one_suite():
    assert_all_ok(two_to_one_suite(n=1, q=3, c=-1))
    assert_all_ok(two_to_one_suite(n=1, q=5, c=1))


def test_corank_suite():
    assert_all_ok(corank_suite(n=1, q=3))
    assert_all_ok(corank_suite(n=1, q=5))


def test_witt_suite_small():
    assert_all_ok(witt_suite(samples=25, seed=3))


def test_tables_suite():
    assert_all_ok(tables_suite())


def test_exceptions_suite():
    assert_all_ok(exceptions_suite(g_max=6, n_max=6))


def test_exception_families_content():
    fams = exception_families(4, 3)
    assert (2, 1, 2) in fams and (4, 3, 12) in fams
    assert (4, 1, 6) not in fams


def test_run_suite_dispatch():
    checks = run_suite("tables")
    assert_all_ok(checks)
    with pytest.raises(KeyError):
        run_suite("missing")


def test_check_fields_are_reportable():
    for c in tables_suite():
        assert isinstance(c.name, str) and c.name
        assert isinstance(c.ok, bool)
        assert isinstance(c.detail, str)
