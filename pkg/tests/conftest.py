from __future__ import annotations

import pytest

from gravstark.constants import codata_defaults
from gravstark.masses import codata_model, derive_composites, model_with_asymmetry
from gravstark.separation import FieldSpec


def pytest_addoption(parser):
    parser.addoption(
        "--regen-goldens",
        action="store_true",
        default=False,
        help="rewrite the CLI golden files instead of comparing against them",
    )


@pytest.fixture(scope="session")
def consts():
    return codata_defaults()


@pytest.fixture(scope="session")
def equal_masses():
    return codata_model()


@pytest.fixture(scope="session")
def violating_model(consts):
    """Configuration whose mass asymmetry is 1.1 electron masses."""
    return model_with_asymmetry(1.1 * consts.m_e_ref, consts)


@pytest.fixture(scope="session")
def violating_composites(violating_model):
    return derive_composites(violating_model)


@pytest.fixture(scope="session")
def terrestrial_field():
    return FieldSpec(magnitude=9.8)
