"""Acceptance gate: every criterion runs at its exact (zero) tolerance.

Each test prints its own pass/fail line; `python -m glhecke.cli --command
verify` runs the same suite.  A shared registry accumulates the modules built
by the sweeps so the relation-integrity criterion can audit all of them.
"""

import pytest

from glhecke import acceptance


@pytest.fixture(scope="module")
def registry():
    return acceptance._Registry()


_RESULTS = {}


def _run(fn, registry):
    res = fn(registry)
    _RESULTS[res.number] = res
    print("%s  %2d. %s  (%s)" % ("PASS" if res.passed else "FAIL", res.number, res.name, res.detail))
    assert res.passed, "%s: %s" % (res.name, res.detail)


def test_criterion_02_dimension_formula(registry):
    _run(acceptance.criterion_2, registry)


def test_criterion_03_induction_dimension(registry):
    _run(acceptance.criterion_3, registry)


def test_criterion_04_two_segment_reducibility(registry):
    _run(acceptance.criterion_4, registry)


def test_criterion_05_transfer_irreducibility(registry):
    _run(acceptance.criterion_5, registry)


def test_criterion_06_hermitian_duality(registry):
    _run(acceptance.criterion_6, registry)


def test_criterion_07_speh_unitarity(registry):
    _run(acceptance.criterion_7, registry)


def test_criterion_08_bz_highest_derivative(registry):
    _run(acceptance.criterion_8, registry)


def test_criterion_09_im_conjugation(registry):
    _run(acceptance.criterion_9, registry)


def test_criterion_10_multiplicity_one(registry):
    _run(acceptance.criterion_10, registry)


def test_criterion_11_dirac_criteria(registry):
    _run(acceptance.criterion_11, registry)


def test_criterion_12_character_identity(registry):
    _run(acceptance.criterion_12, registry)


def test_criterion_13_schur_weyl(registry):
    _run(acceptance.criterion_13, registry)


def test_criterion_14_parabolic_compat(registry):
    _run(acceptance.criterion_14, registry)


def test_criterion_15_direct_model(registry):
    _run(acceptance.criterion_15, registry)


def test_criterion_01_relation_integrity(registry):
    # runs last: audits every module the other criteria constructed
    _run(acceptance.criterion_1, registry)
