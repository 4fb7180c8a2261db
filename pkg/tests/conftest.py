import pytest

from isoshare.curves import CurveSpec
from isoshare.fields import fp2_from_int

P = 431


@pytest.fixture(scope="session")
def e0():
    """The default desk-scale curve y^2 = x^3 + x over GF(431^2)."""
    return CurveSpec(fp2_from_int(1, P), fp2_from_int(0, P), P)
