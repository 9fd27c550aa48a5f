from __future__ import annotations

import pytest

from rootcover import lattice
from rootcover.cli import build_pipeline


@pytest.fixture(scope="session")
def a2_stack():
    return build_pipeline("A2", with_rep=True)


@pytest.fixture(scope="session")
def e6_stack():
    return build_pipeline("E6")


@pytest.fixture(scope="session")
def e7_stack():
    return build_pipeline("E7")


@pytest.fixture(scope="session")
def e6_weyl(e6_stack):
    return lattice.weyl_enumerate(e6_stack.datum)


@pytest.fixture(scope="session")
def e6_classes(e6_stack, e6_weyl):
    return lattice.classify_involutions(e6_stack.datum, e6_weyl)
