import mpmath
import pytest

from fiberface import presets
from fiberface.certify import certify_slice
from fiberface.conenorm import fibered_cone
from fiberface.dilatation import minimize_on_slice, segment_from_covector
from fiberface.penner import phi

PREC = 50


def mp(text: str):
    """High-precision constant independent of the ambient precision."""
    with mpmath.workdps(80):
        return mpmath.mpf(text)


@pytest.fixture(scope="session")
def theta():
    return presets.theta_example1()


@pytest.fixture(scope="session")
def cone1(theta):
    return fibered_cone(theta, (1, 0))


@pytest.fixture(scope="session")
def drilled(theta, cone1):
    return minimize_on_slice(theta, cone1, segment_from_covector(cone1, (3, 1)), PREC)


@pytest.fixture(scope="session")
def branched(theta, cone1):
    return minimize_on_slice(theta, cone1, segment_from_covector(cone1, (6, 2)), PREC)


@pytest.fixture(scope="session")
def base_min(theta, cone1):
    return minimize_on_slice(theta, cone1, segment_from_covector(cone1, (2, 0)), PREC)


@pytest.fixture(scope="session")
def cert1(theta, cone1, drilled):
    return certify_slice(theta, cone1, drilled.segment, PREC, minpoint=drilled)


@pytest.fixture(scope="session")
def spec62():
    return presets.penner_spec_62()


@pytest.fixture(scope="session")
def phi62(spec62):
    return phi(spec62)


@pytest.fixture(scope="session")
def cone62(phi62):
    return fibered_cone(phi62, (1, 0))


@pytest.fixture(scope="session")
def min62(phi62, cone62):
    return minimize_on_slice(phi62, cone62, segment_from_covector(cone62, (4, 0)), PREC)


@pytest.fixture(scope="session")
def cert62(phi62, cone62, min62):
    return certify_slice(phi62, cone62, min62.segment, PREC, minpoint=min62)


@pytest.fixture(scope="session")
def magic():
    return presets.magic_poly()


@pytest.fixture(scope="session")
def magic_cone(magic):
    return fibered_cone(magic, presets.MAGIC_REF)


@pytest.fixture(scope="session")
def magic_min(magic, magic_cone):
    return minimize_on_slice(magic, magic_cone, presets.MAGIC_SEGMENT, PREC)


@pytest.fixture(scope="session")
def magic_cert(magic, magic_cone, magic_min):
    return certify_slice(magic, magic_cone, presets.MAGIC_SEGMENT, PREC, minpoint=magic_min)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
