#####################################################################
#
# Shared pytest fixtures. Puts the repository root on the import path
# so tests import the `lib` modules the way gaugeforge.py does.
#
#####################################################################

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from lib.families import PowerSeriesSpec, PowerTimeSpec, SeparatedSpec  # noqa: E402
from lib.mechanics import standard_oscillator  # noqa: E402

# Seed and size of the random gauge family suite
FAMILY_SEED = 20261019
FAMILY_COUNT = 200

_F_POOL = ('t^{k}', 'sin({k}*t)', 'cos({k}*t)', 'exp(t/4)')
_G_POOL = ('x^{k}', 'sin(x)')


def _coefficient(rng):
    return round(float(rng.uniform(-2.0, 2.0)), 3)


def _pick(rng, pool):
    return pool[int(rng.integers(len(pool)))].format(k=int(rng.integers(1, 5)))


def random_family_spec(rng):
    """ One random g1, g2 or g3 spec: coefficients in [-2, 2], exponents up to 4.
    """
    family = ('g1', 'g2', 'g3')[int(rng.integers(3))]
    count = int(rng.integers(1, 4))
    if family == 'g1':
        return PowerSeriesSpec({(int(rng.integers(1, 5)), int(rng.integers(1, 5))): _coefficient(rng)
                                for _ in range(count)})
    if family == 'g2':
        return PowerTimeSpec([(int(rng.integers(1, 5)), _coefficient(rng), _pick(rng, _F_POOL))
                              for _ in range(count)])
    return SeparatedSpec([(_coefficient(rng), _pick(rng, _F_POOL), _pick(rng, _G_POOL))
                          for _ in range(count)])


@pytest.fixture(scope='session')
def family_specs():
    rng = np.random.default_rng(FAMILY_SEED)
    return [random_family_spec(rng) for _ in range(FAMILY_COUNT)]


@pytest.fixture
def sho():
    return standard_oscillator()


@pytest.fixture(autouse=True)
def _no_seed_override(monkeypatch):
    monkeypatch.delenv('GAUGEFORGE_SEED', raising=False)
