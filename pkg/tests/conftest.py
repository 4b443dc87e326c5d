import pytest

from spets.chartables import char_table, feg_map
from spets.reflection import build_group
from spets.tabledata import construct_uch


@pytest.fixture(scope="session")
def g4():
    return build_group("G4")


@pytest.fixture(scope="session")
def g312():
    return build_group("G(3,1,2)")


@pytest.fixture(scope="session")
def g4_result():
    return construct_uch("G4")


@pytest.fixture(scope="session")
def g312_result():
    return construct_uch("G(3,1,2)")


@pytest.fixture(scope="session")
def g4_fegs(g4):
    return feg_map(char_table(g4))


@pytest.fixture(scope="session")
def g312_fegs(g312):
    return feg_map(char_table(g312))
