import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--deep",
        action="store_true",
        default=False,
        help="run the heavy exact tensor checks",
    )


@pytest.fixture
def deep(request):
    return request.config.getoption("--deep")
