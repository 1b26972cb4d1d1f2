import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from helixforge.group_backend import CyclicGroup, WeierstrassCurve  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

CURVE_11 = WeierstrassCurve(11, 1, 6)
CURVES = [CURVE_11, WeierstrassCurve(29, 1, 7), WeierstrassCurve(31, 2, 4), WeierstrassCurve(37, 0, 2)]


@pytest.fixture
def z30():
    return CyclicGroup(30)


def groups():
    return st.one_of(
        st.integers(min_value=1, max_value=1000).map(CyclicGroup),
        st.sampled_from(CURVES),
    )


@st.composite
def group_and_elements(draw, k=3, group_strategy=None):
    group = draw(group_strategy if group_strategy is not None else groups())
    pts = list(group.elements())
    idx = draw(st.lists(st.integers(min_value=0, max_value=len(pts) - 1), min_size=k, max_size=k))
    return group, [pts[i] for i in idx]
