import pytest

from tau_atlas.context import workspace


@pytest.fixture(scope="session")
def ws2():
    return workspace(2, 2)


@pytest.fixture(scope="session")
def ws3():
    return workspace(3, 2)


@pytest.fixture(scope="session")
def ws4():
    return workspace(4, 2)


@pytest.fixture(scope="session")
def ws(request):
    return workspace(*request.param)
