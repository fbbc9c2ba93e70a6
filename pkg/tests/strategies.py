"""Hypothesis strategies shared across the property tests."""
import math

import numpy as np
from hypothesis import strategies as st

from varlp.exponent import Exponent
from varlp.specs import parse_group

GROUP_SPECS = ("cyclic:1", "cyclic:2", "cyclic:3", "cyclic:5", "cyclic:4:w=1/4", "circle:8",
               "klein", "symmetric:3", "dihedral:3", "cyclic:2:w=0.3")

_cache = {}


def group_for(spec):
    if spec not in _cache:
        _cache[spec] = parse_group(spec)
    return _cache[spec]


groups = st.sampled_from(GROUP_SPECS).map(group_for)

finite_exp = st.floats(min_value=1.0, max_value=6.0)
any_exp = st.one_of(finite_exp, st.just(math.inf), st.just(1.0))
values = st.floats(min_value=-50, max_value=50, allow_nan=False).filter(lambda v: v == 0 or abs(v) > 1e-6)


@st.composite
def group_exponent_function(draw, bounded=False, nonzero=True):
    G = draw(groups)
    n = G.n
    p = Exponent(np.array(draw(st.lists(finite_exp if bounded else any_exp, min_size=n, max_size=n))))
    f = np.array(draw(st.lists(values, min_size=n, max_size=n)))
    if nonzero and not f.any():
        f[0] = 1.0
    return G, p, f
