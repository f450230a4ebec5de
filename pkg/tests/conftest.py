"""
pytest configuration and shared fixtures for weilgroups tests.
"""
import sys
from pathlib import Path

import pytest

# Add src/ to path so we can import weilgroups without installing
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from weilgroups.polynomials import IntPoly  # noqa: E402


@pytest.fixture
def f_q9() -> IntPoly:
    """t^2 - 2t + 9 over F_9: f(1) = 8, f(1-t) = t^2 + 8."""
    return IntPoly(coeffs=(9, -2, 1))


@pytest.fixture
def double_root() -> IntPoly:
    """(t - 3)^2 over F_9."""
    return IntPoly(coeffs=(9, -6, 1))
