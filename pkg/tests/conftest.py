"""Shared test helpers: extended-precision oracles via mpmath."""

import mpmath as mp
import pytest


def _oracle_f11(alpha, gamma, z, dps=None):
    # working precision grows with |z| so the alternating tail stays exact
    mp.mp.dps = dps if dps is not None else int(60 + 0.9 * abs(complex(z)))
    return complex(mp.hyp1f1(alpha, gamma, z))


@pytest.fixture(scope="session")
def oracle():
    """Callable (alpha, gamma, z) -> high-precision reference value."""
    return _oracle_f11
