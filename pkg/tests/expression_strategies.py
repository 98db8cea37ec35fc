""" Hypothesis strategies for expression trees over x, t and one parameter a.

Functions only wrap leaves or scaled leaves and powers only raise atoms
to small integer exponents, so the trees stay smooth and moderately sized
on [-1.5, 1.5].
"""

import math

from hypothesis import strategies as st

from lib import expression as ex

NAMES = ('x', 't', 'a')

constants = st.sampled_from([-2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0]).map(ex.constant)
names = st.sampled_from(NAMES).map(ex.variable)
leaves = st.one_of(constants, names)

scaled = st.one_of(leaves, st.builds(ex.mul, constants, names))
applications = st.builds(ex.apply, st.sampled_from(['sin', 'cos', 'exp']), scaled)

atoms = st.one_of(leaves, applications, st.builds(ex.power, st.one_of(leaves, applications),
                                                   st.sampled_from([2, 3])))


def _extend(children):
    return st.one_of(
        st.builds(ex.add, children, children),
        st.builds(ex.mul, children, children),
        st.builds(ex.neg, children),
    )


expressions = st.recursive(atoms, _extend, max_leaves=6)

points = st.fixed_dictionaries({name: st.floats(-1.5, 1.5, allow_nan=False) for name in NAMES})


def magnitude(e, point):
    """ Upper bound of |e| and of every intermediate value when evaluating it
    or any expanded form of it; scales rounding-error tolerances.
    """
    kind = e.kind
    if kind == ex.CONSTANT:
        return abs(e.value)
    if kind in (ex.SYMBOL, ex.PARAMETER):
        return abs(point[e.name])
    parts = [magnitude(child, point) for child in e.children]
    if kind == ex.SUM:
        return math.fsum(parts)
    if kind == ex.PRODUCT:
        return math.prod(parts)
    if kind == ex.NEGATION:
        return parts[0]
    if kind == ex.POWER:
        return parts[0] ** e.children[1].value
    if e.name == 'exp':
        return math.exp(parts[0])
    return 1.0

# Shallower trees for finite differences: keeps third derivatives, and with
# them the truncation error of a central difference, moderate.
smooth_expressions = st.recursive(atoms, _extend, max_leaves=3)
