"""Shared strategies and small builders for the test suite."""

import hypothesis.strategies as st

from supersympoly import Poly, Ring


def build_poly(ring, pairs):
    terms = {}
    for exps, c in pairs:
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
    return Poly(ring, terms)


@st.composite
def ring_and_polys(
    draw,
    count=1,
    ps=(3, 5, 7),
    min_m=0,
    max_m=2,
    min_n=0,
    max_n=2,
    has_t=False,
    max_exp=3,
    max_terms=6,
):
    p = draw(st.sampled_from(ps))
    m = draw(st.integers(min_m, max_m))
    n = draw(st.integers(min_n, max_n))
    ring = Ring(m, n, has_t, p)
    exps = st.tuples(*([st.integers(0, max_exp)] * ring.nvars))
    pair = st.tuples(exps, st.integers(1, p - 1))
    polys = [
        build_poly(ring, draw(st.lists(pair, max_size=max_terms)))
        for _ in range(count)
    ]
    return (ring, *polys)
