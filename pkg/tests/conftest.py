"""Shared Cartan matrices and helpers.

Node indices are 0-based throughout the tests; node "1" of a diagram is
index 0.
"""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from weylfaces.cartan import validate_gcm
from weylfaces.faces import ModuleDescriptor

A1 = [[2]]
A1xA1 = [[2, 0], [0, 2]]
A2 = [[2, -1], [-1, 2]]
B2 = [[2, -1], [-2, 2]]
G2 = [[2, -1], [-3, 2]]
A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
AFF_A1 = [[2, -2], [-2, 2]]
AFF_A1_EXT = [[2, -2, -1], [-2, 2, 0], [-1, 0, 2]]

FINITE = {"A1": A1, "A1xA1": A1xA1, "A2": A2, "B2": B2, "G2": G2, "A3": A3}


@pytest.fixture
def a2():
    return validate_gcm(A2)


@pytest.fixture
def a3():
    return validate_gcm(A3)


@pytest.fixture
def aff():
    return validate_gcm(AFF_A1)


@pytest.fixture
def aff_ext():
    return validate_gcm(AFF_A1_EXT)


def module(matrix, pairings, integrability, integral=True):
    c = validate_gcm(matrix) if isinstance(matrix, list) else matrix
    return ModuleDescriptor.classical(c, pairings, integrability, integral)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonneg_rationals = st.fractions(min_value=0, max_value=5, max_denominator=6)
positive_rationals = st.fractions(min_value=Fraction(1, 6), max_value=5, max_denominator=6)


def node_subsets(n):
    return st.frozensets(st.integers(min_value=0, max_value=n - 1), max_size=n)


# ---------------------------------------------------------------- acceptance report

ACCEPTANCE = {}


def record_acceptance(number, title, ok, detail):
    ACCEPTANCE[number] = (title, ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
