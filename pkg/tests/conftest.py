from fractions import Fraction

import hypothesis.strategies as st

from nilpotent.states import make_nilpotent
from nilpotent.verify import ON_SHELL_QUADRUPLES

# small exact rationals for coefficient sweeps
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
nonzero_rationals = rationals.filter(bool)


@st.composite
def on_shell_states(draw):
    """Exact on-shell (E^2 = p^2 + m^2) states from scaled integer quadruples."""
    px, py, pz, m, e = draw(st.sampled_from(ON_SHELL_QUADRUPLES))
    scale = Fraction(draw(st.integers(1, 12)), draw(st.integers(1, 12)))
    comps = [px * scale, py * scale, pz * scale]
    perm = draw(st.permutations([0, 1, 2]))
    comps = [comps[i] for i in perm]
    signs = draw(st.tuples(*[st.sampled_from((1, -1))] * 3))
    comps = [c * s for c, s in zip(comps, signs)]
    sign_e = draw(st.sampled_from((1, -1)))
    sign_p = draw(st.sampled_from((1, -1)))
    return make_nilpotent(e * scale, tuple(comps), m * scale, sign_e, sign_p)
