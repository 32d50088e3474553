"""Hypothesis strategies over the roster fields."""

from hypothesis import strategies as st

from formwitt.fields import roster_fields
from formwitt.forms import FormClass, roster_params

ROSTER = roster_fields()
PARAMS = [p for F in ROSTER for p in roster_params(F)]

fields = st.sampled_from(ROSTER)
params = st.sampled_from(PARAMS)


@st.composite
def field_and_elements(draw, count=2, nonzero=False):
    F = draw(fields)
    lo = 1 if nonzero else 0
    xs = [draw(st.integers(lo, F.order - 1)) for _ in range(count)]
    return F, xs


@st.composite
def vectors(draw, F, n):
    return tuple(draw(st.integers(0, F.order - 1)) for _ in range(n))


@st.composite
def raw_matrices(draw, F, n):
    return [[draw(st.integers(0, F.order - 1)) for _ in range(n)] for _ in range(n)]


@st.composite
def forms(draw, max_dim=3):
    p = draw(params)
    n = draw(st.integers(1, max_dim))
    M = draw(raw_matrices(p.field, n))
    return FormClass(p, M), M
