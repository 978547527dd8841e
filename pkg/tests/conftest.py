import pytest

from zbw_lab.constants import NATURAL, SI_CONSTANTS
from zbw_lab.dirac_packet import PacketSpec, Spin, build_packet
from zbw_lab.graphene import GrapheneConfig


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: runs the full verification suite")


@pytest.fixture
def natural():
    return NATURAL


@pytest.fixture
def si():
    return SI_CONSTANTS


@pytest.fixture
def graphene_config():
    return GrapheneConfig()


@pytest.fixture
def compact_config():
    """Wide packet without drift: quick, strictly decreasing series."""
    return GrapheneConfig(L_over_ell=1.5, k0x_ell=0.0)


@pytest.fixture(params=[Spin.UP, Spin.DOWN], ids=["up", "down"])
def packet(request):
    return build_packet(PacketSpec(r_o=10.0, spin=request.param))
