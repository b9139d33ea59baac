import pytest


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20240815,
                     help="seed for randomized property tests")


@pytest.fixture
def rng_seed(request):
    return request.config.getoption("--seed")
