#####################################################################
#
# Numeric evaluation of expression trees.
#
# 1. `evaluate`: walks the tree in double precision, reporting the
#    offending subtree on domain errors (log of a non-positive number,
#    division by zero, ...).
# 2. `lambdify`: compiles a tree into a Python function over named
#    arguments, with a `math` backend for scalar time stepping and a
#    `numpy` backend for whole trajectories. Failures are re-diagnosed
#    with `evaluate` so the error still names the subtree.
# 3. `compare_numeric` / `equal_numeric`: seeded random sampling to
#    decide whether two expressions agree as functions, which is how
#    identities the simplifier cannot close are certified.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from dataclasses import dataclass, field
from functools import lru_cache
import logging
import math

import numpy as np

from lib import expression as ex
from lib.errors import EvaluationDomainError, UnboundNameError
from lib.simplify import simplify

logger = logging.getLogger(__name__)

# Defaults of the numeric comparison
DEFAULT_TOLERANCE = 1e-10
DEFAULT_SAMPLES = 100
DEFAULT_SEED = 42
SYMBOL_INTERVAL = (-3.0, 3.0)
PARAMETER_INTERVAL = (-2.0, 2.0)


def _check_bound(e, binding):
    missing = ex.free_names(e) - set(binding)
    if missing:
        raise UnboundNameError(sorted(missing)[0])


def evaluate(e, binding):
    """ Evaluate an expression in double precision.

    :param e: Expression
    :param binding: Map from every symbol/parameter name in `e` to a real value
    :return: float
    :raises UnboundNameError: When `e` mentions a name `binding` lacks
    :raises EvaluationDomainError: On domain errors, naming the subtree
    """
    _check_bound(e, binding)
    return _walk(e, binding)


def _fail(e, reason):
    raise EvaluationDomainError(ex.to_text(e), reason)


def _finite(e, value):
    if not math.isfinite(value):
        _fail(e, 'overflow')
    return value


def _walk(e, binding):
    kind = e.kind
    if kind == ex.CONSTANT:
        return e.value
    if kind in (ex.SYMBOL, ex.PARAMETER):
        return float(binding[e.name])
    values = [_walk(child, binding) for child in e.children]
    if kind == ex.SUM:
        return _finite(e, math.fsum(values))
    if kind == ex.PRODUCT:
        return _finite(e, math.prod(values))
    if kind == ex.NEGATION:
        return -values[0]
    if kind == ex.QUOTIENT:
        if values[1] == 0:
            _fail(e, 'division by zero')
        return _finite(e, values[0] / values[1])
    if kind == ex.POWER:
        base, exponent = values
        if base == 0 and exponent < 0:
            _fail(e, 'division by zero')
        if base < 0 and exponent != int(exponent):
            _fail(e, 'negative base raised to a non-integer power')
        try:
            return _finite(e, math.pow(base, exponent))
        except OverflowError:
            _fail(e, 'overflow')
    argument = values[0]
    name = e.name
    if name == 'ln' and argument <= 0:
        _fail(e, 'log of a non-positive number')
    if name == 'sqrt' and argument < 0:
        _fail(e, 'square root of a negative number')
    try:
        return _finite(e, _MATH[name](argument))
    except OverflowError:
        _fail(e, 'overflow')


_MATH = {
    'sin': math.sin, 'cos': math.cos, 'tan': math.tan, 'exp': math.exp,
    'ln': math.log, 'sinh': math.sinh, 'cosh': math.cosh, 'tanh': math.tanh,
    'sqrt': math.sqrt,
}

_NUMPY = {
    'sin': np.sin, 'cos': np.cos, 'tan': np.tan, 'exp': np.exp,
    'ln': np.log, 'sinh': np.sinh, 'cosh': np.cosh, 'tanh': np.tanh,
    'sqrt': np.sqrt,
}

_BACKENDS = {
    'math': dict({'_' + name: function for name, function in _MATH.items()}, _pow=math.pow),
    'numpy': dict({'_' + name: function for name, function in _NUMPY.items()}, _pow=np.power),
}

_ERRORS = (ValueError, ZeroDivisionError, OverflowError, FloatingPointError)


def _source(e):
    kind = e.kind
    if kind == ex.CONSTANT:
        return repr(e.value)
    if kind in (ex.SYMBOL, ex.PARAMETER):
        return '_v_' + e.name
    if kind == ex.SUM:
        return '(' + ' + '.join(_source(child) for child in e.children) + ')'
    if kind == ex.PRODUCT:
        return '(' + ' * '.join(_source(child) for child in e.children) + ')'
    if kind == ex.NEGATION:
        return '(-' + _source(e.children[0]) + ')'
    if kind == ex.QUOTIENT:
        return '(' + _source(e.children[0]) + ' / ' + _source(e.children[1]) + ')'
    if kind == ex.POWER:
        return '_pow(' + _source(e.children[0]) + ', ' + _source(e.children[1]) + ')'
    return '_' + e.name + '(' + _source(e.children[0]) + ')'


class CompiledExpression:
    """ An expression compiled to a Python function of positional arguments.

    :param e: Expression
    :param names: Argument names, in call order
    :param backend: 'math' for floats, 'numpy' for arrays
    """

    def __init__(self, e, names, backend):
        missing = ex.free_names(e) - set(names)
        if missing:
            raise UnboundNameError(sorted(missing)[0])
        self.expression = e
        self.names = tuple(names)
        self.backend = backend
        arguments = ', '.join('_v_' + name for name in self.names)
        code = compile(f"lambda {arguments}: {_source(e)}", '<gaugeforge>', 'eval')
        self._function = eval(code, dict(_BACKENDS[backend]))

    def __call__(self, *args):
        if self.backend == 'math':
            try:
                value = self._function(*args)
            except _ERRORS as exc:
                self._diagnose(args, exc)
            if not math.isfinite(value):
                self._diagnose(args, OverflowError('non-finite result'))
            return value
        with np.errstate(divide='raise', invalid='raise', over='raise'):
            try:
                value = self._function(*args)
            except _ERRORS as exc:
                self._diagnose_arrays(args, exc)
        shape = np.broadcast(*args).shape if args else ()
        value = np.broadcast_to(np.asarray(value, dtype=float), shape).copy()
        if not np.all(np.isfinite(value)):
            self._diagnose_arrays(args, OverflowError('non-finite result'))
        return value

    def _diagnose(self, args, exc):
        evaluate(self.expression, dict(zip(self.names, args)))
        raise EvaluationDomainError(ex.to_text(self.expression), str(exc))

    def _diagnose_arrays(self, args, exc):
        columns = np.broadcast_arrays(*(np.asarray(arg, dtype=float) for arg in args))
        for point in zip(*(column.ravel() for column in columns)):
            evaluate(self.expression, dict(zip(self.names, point)))
        raise EvaluationDomainError(ex.to_text(self.expression), str(exc))


@lru_cache(maxsize=4096)
def lambdify(e, names, backend='math'):
    """ Compile an expression into a callable.

    :param e: Expression
    :param names: Tuple of argument names; must cover every name in `e`
    :param backend: 'math' (scalars) or 'numpy' (arrays)
    :return: CompiledExpression
    """
    if backend not in _BACKENDS:
        raise ValueError(f"unknown backend '{backend}'")
    return CompiledExpression(e, tuple(names), backend)


def bind(e, binding):
    """ Substitute parameter values, leaving the reserved symbols free.
    """
    values = {name: value for name, value in binding.items() if name not in ex.SYMBOLS}
    return simplify(ex.substitute(e, values))


def default_domains(*expressions, overrides=None):
    """ Sampling intervals for every name in `expressions`.

    Reserved symbols get SYMBOL_INTERVAL, parameters PARAMETER_INTERVAL,
    unless `overrides` names them.
    """
    domains = {}
    for e in expressions:
        for name in ex.free_names(e):
            domains[name] = SYMBOL_INTERVAL if name in ex.SYMBOLS else PARAMETER_INTERVAL
    domains.update(overrides or {})
    return domains


def fixed_domains(binding):
    """ Degenerate intervals pinning each bound name to its value.
    """
    return {name: (float(value), float(value)) for name, value in binding.items()}


@dataclass(frozen=True)
class NumericComparison:
    equal: bool
    max_deviation: float
    worst_point: dict = field(default_factory=dict)
    samples: int = 0
    diagnostic: str = ''

    def __bool__(self):
        return self.equal


def compare_numeric(e1, e2, domains=None, samples=DEFAULT_SAMPLES,
                    tol=DEFAULT_TOLERANCE, seed=DEFAULT_SEED):
    """ Compare two expressions at seeded pseudo-random points.

    The expressions agree at a point when
    |e1 - e2| <= tol * (1 + max(|e1|, |e2|)).

    :param e1: Expression
    :param e2: Expression
    :param domains: Map name -> (low, high); defaults to default_domains
    :param samples: Number of sample points (>= 1)
    :param tol: Relative tolerance
    :param seed: Seed of the sampler; equal seeds give equal verdicts
    :return: NumericComparison
    """
    e1 = ex.as_expression(e1)
    e2 = ex.as_expression(e2)
    if samples < 1:
        raise ValueError('samples must be at least 1')
    if domains is None:
        domains = default_domains(e1, e2)
    names = tuple(sorted(ex.free_names(e1) | ex.free_names(e2)))
    missing = [name for name in names if name not in domains]
    if missing:
        raise UnboundNameError(missing[0])

    rng = np.random.default_rng(seed)
    columns = [rng.uniform(domains[name][0], domains[name][1], samples) for name in names]
    first = lambdify(e1, names, 'math')
    second = lambdify(e2, names, 'math')

    worst, worst_point = 0.0, {}
    for index in range(samples):
        point = tuple(float(column[index]) for column in columns)
        try:
            a = first(*point)
            b = second(*point)
        except EvaluationDomainError as err:
            diagnostic = f"sample {index} at {dict(zip(names, point))}: {err}"
            logger.info('numeric comparison hit a singularity: %s', diagnostic)
            return NumericComparison(False, math.inf, dict(zip(names, point)), index + 1, diagnostic)
        deviation = abs(a - b) / (1.0 + max(abs(a), abs(b)))
        if deviation > worst:
            worst, worst_point = deviation, dict(zip(names, point))
    return NumericComparison(worst <= tol, worst, worst_point, samples)


def equal_numeric(e1, e2, domains=None, samples=DEFAULT_SAMPLES,
                  tol=DEFAULT_TOLERANCE, seed=DEFAULT_SEED):
    """ Boolean form of `compare_numeric`.
    """
    return compare_numeric(e1, e2, domains, samples, tol, seed).equal
