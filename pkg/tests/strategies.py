"""Shared hypothesis strategies for window-scope parameter triples."""

from hypothesis import strategies as st


@st.composite
def scope_params(draw, max_m=4, max_c=6, max_n=12):
    m = draw(st.integers(min_value=2, max_value=max_m))
    c = draw(st.integers(min_value=m, max_value=max_c))
    n = draw(st.integers(min_value=c, max_value=max_n))
    return m, c, n
