import pytest

from divwalk import kernels


@pytest.fixture(scope="session")
def divisors_of():
    """Trial-division divisor oracle, deliberately independent of the package."""

    def _divisors(n: int) -> list[int]:
        small, large = [], []
        d = 1
        while d * d <= n:
            if n % d == 0:
                small.append(d)
                if d != n // d:
                    large.append(n // d)
            d += 1
        return small + large[::-1]

    return _divisors


@pytest.fixture
def backend_guard():
    """Restore the auto-selected backend after a test that switches it."""
    yield
    kernels.use_backend("auto")
