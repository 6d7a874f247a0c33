import pytest

from mwkit.gwring import PresentationKind, present

# Every ring here has at most 256 elements, so structural laws are checked
# exhaustively.  GR(4,3) is kept out of the presentation-heavy family: its
# 56 units make the unit-translated hopf lattice large and slow without
# adding coverage (it is still exercised by the sum-of-squares tests).
RING_SPECS = [
    "Z/4", "Z/8", "Z/9", "Z/12", "Z/16", "Z/25",
    "GF(2^1)", "Z/3", "GF(2^2)", "Z/5", "Z/7", "GF(3^2)", "Z/11", "Z/13",
    "GR(4,2)", "GR(4,3)",
]

GW_SPECS = [s for s in RING_SPECS if s != "GR(4,3)"]

ODD_FIELD_SPECS = ["Z/3", "Z/5", "Z/7", "GF(3^2)", "Z/11", "Z/13"]


def build_ring(spec):
    from mwkit.finring import parse_ring_spec

    return parse_ring_spec(spec)


@pytest.fixture(scope="session")
def ring_family():
    return [build_ring(s) for s in RING_SPECS]


@pytest.fixture(scope="session")
def gw_family():
    return [build_ring(s) for s in GW_SPECS]


@pytest.fixture(scope="session")
def odd_fields():
    return [build_ring(s) for s in ODD_FIELD_SPECS]


@pytest.fixture(scope="session")
def presented():
    """Memoized presentation factory shared across the suite."""
    cache = {}

    def get(ring, kind):
        kind = PresentationKind.coerce(kind)
        key = (ring.spec_string(), kind)
        if key not in cache:
            cache[key] = present(ring, kind)
        return cache[key]

    return get
