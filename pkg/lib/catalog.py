#####################################################################
#
# Catalog of driven oscillators and nonlinear oscillators generated
# by gauge functions.
#
# Every entry pairs a gauge function Phi (kept as the sum of its
# printed terms) with the force F(t) or nonlinearity H(x) it is
# declared to produce, and the default parameter values it is checked
# with. `verify_entry` re-derives the force with force_from_gauge,
# compares it with the declared one numerically and reports which
# gauge family reproduces Phi.
#
# Forces:         driven-cos, driven-cos2, driven-cos3,
#                 driven-two-tone, rlc
# Nonlinearities: quadratic, duffing, quad-cubic, quartic, quintic,
#                 higher-order, altered-sho
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

from dataclasses import dataclass, field
import logging

from lib import expression as ex
from lib.dynamics import DynamicalSystem
from lib.errors import UnknownEntryError
from lib.evaluate import DEFAULT_SEED, NumericComparison, compare_numeric, fixed_domains
from lib.families import describe, family_result, identify_family
from lib.mechanics import GaugeFunction, force_from_gauge

logger = logging.getLogger(__name__)

FORCE = 'force'
NONLINEARITY = 'nonlinearity'

DEFAULT_PARAMETERS = {'F0': 1, 'F1': 1, 'F2': 1, 'E0': 1, 'eps': 0.1, 'n': 1}

# Settings of verify_entry
VERIFY_TOLERANCE = 1e-10
VERIFY_SAMPLES = 200
VERIFY_DOMAINS = {'t': (0.0, 10.0), 'x': (-2.0, 2.0)}


def _join(terms):
    text = terms[0]
    for term in terms[1:]:
        text += ' - ' + term[1:] if term.startswith('-') else ' + ' + term
    return text


@dataclass(frozen=True)
class CatalogEntry:
    """ A gauge function and the force or nonlinearity it generates.

    :param id: Entry id
    :param kind: FORCE or NONLINEARITY
    :param title: Short description
    :param phi_terms: Printed terms Phi_1, Phi_2, ... of the gauge function
    :param declared_text: Printed force F(t) or nonlinearity H(x)
    :param overrides: Parameter values replacing DEFAULT_PARAMETERS
    """
    id: str
    kind: str
    title: str
    phi_terms: tuple
    declared_text: str
    overrides: tuple = ()
    phi: GaugeFunction = field(init=False, compare=False, repr=False)
    declared: ex.Expression = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'phi', GaugeFunction(self.phi_text))
        object.__setattr__(self, 'declared', ex.as_expression(self.declared_text))

    @property
    def phi_text(self):
        return _join(self.phi_terms)

    @property
    def parameters(self):
        """ Default binding of the parameters the entry mentions.
        """
        values = dict(DEFAULT_PARAMETERS, **dict(self.overrides))
        names = ex.parameters(self.phi.body) | ex.parameters(self.declared)
        return {name: values[name] for name in sorted(names)}

    def with_parameters(self, **values):
        """ Copy of the entry with some default parameter values replaced.
        """
        merged = dict(self.overrides)
        merged.update(values)
        return CatalogEntry(self.id, self.kind, self.title, self.phi_terms,
                            self.declared_text, tuple(sorted(merged.items())))

    def system(self, sign=1, binding=None):
        """ DynamicalSystem of the unit oscillator driven by this entry.
        """
        values = self.parameters
        values.update(binding or {})
        return DynamicalSystem(gauge=self.phi, sign=sign, binding=values)


_ENTRIES = (
    CatalogEntry('driven-cos', FORCE, 'driven oscillator, F(t) = F0 cos t',
                 ('x*F0*sin(t)',), 'F0*cos(t)'),
    CatalogEntry('driven-cos2', FORCE, 'driven oscillator, F(t) = F0 cos^2 t',
                 ('1/2*x*t*F0', '1/4*x*F0*sin(2*t)'), 'F0*cos(t)^2'),
    CatalogEntry('driven-cos3', FORCE, 'driven oscillator, F(t) = F0 cos^3 t',
                 ('3/4*x*F0*sin(t)', '1/12*x*F0*sin(3*t)'), 'F0*cos(t)^3'),
    CatalogEntry('driven-two-tone', FORCE, 'driven oscillator, F(t) = F1 cos t + F2 sin t',
                 ('x*F1*sin(t)', '-x*F2*cos(t)'), 'F1*cos(t) + F2*sin(t)'),
    CatalogEntry('rlc', FORCE, 'RLC circuit, E(t) = E0 sin t',
                 ('-x*E0*cos(t)',), 'E0*sin(t)'),
    CatalogEntry('quadratic', NONLINEARITY, 'quadratic nonlinearity',
                 ('-1/3*eps*x^3*t',), '-eps*x^2'),
    CatalogEntry('duffing', NONLINEARITY, 'Duffing oscillator',
                 ('-1/4*eps*x^4*t',), '-eps*x^3'),
    CatalogEntry('quad-cubic', NONLINEARITY, 'quadratic and cubic nonlinearity',
                 ('-1/3*eps*x^3*t', '-1/4*eps*x^4*t'), '-eps*(x^2 + x^3)'),
    CatalogEntry('quartic', NONLINEARITY, 'quartic nonlinearity',
                 ('-1/5*eps*x^5*t',), '-eps*x^4'),
    CatalogEntry('quintic', NONLINEARITY, 'quintic nonlinearity',
                 ('-1/6*eps*x^6*t',), '-eps*x^5'),
    CatalogEntry('higher-order', NONLINEARITY, 'odd nonlinearity of order 2n+1',
                 ('-eps/(2*n+2)*x^(2*n+2)*t',), '-eps*x^(2*n+1)'),
    CatalogEntry('altered-sho', NONLINEARITY, 'altered simple harmonic oscillator',
                 ('-eps/2*F0*x^2*t',), '-eps*F0*x'),
)


def list_entries():
    """ All catalog entries, forces first, in a fixed order.
    """
    return list(_ENTRIES)


def entry_ids():
    return [entry.id for entry in _ENTRIES]


def lookup(entry_id):
    """ Catalog entry by id.

    :raises UnknownEntryError: Listing the valid ids
    """
    for entry in _ENTRIES:
        if entry.id == entry_id:
            return entry
    raise UnknownEntryError(entry_id, entry_ids())


@dataclass(frozen=True)
class VerificationReport:
    """ Outcome of verify_entry; `passed` is the overall verdict.
    """
    entry: CatalogEntry
    binding: dict
    force: ex.Expression
    comparison: NumericComparison
    families: dict
    preferred: str
    family_comparison: NumericComparison

    @property
    def passed(self):
        return self.comparison.equal and self.family_comparison.equal

    @property
    def identification(self):
        return describe(self.families[self.preferred]) if self.preferred else 'not separable'


def _preferred(kind, families):
    if not families:
        return None
    if kind == FORCE:
        return 'g3'
    return next(iter(families))


def verify_entry(entry, binding=None, seed=DEFAULT_SEED):
    """ Re-derive an entry's force and identify the family of its gauge function.

    :param entry: CatalogEntry (or id)
    :param binding: Parameter values overriding the entry defaults
    :param seed: Sampler seed of the numeric comparisons
    :return: VerificationReport; a failed check is reported, never raised
    """
    if isinstance(entry, str):
        entry = lookup(entry)
    values = entry.parameters
    values.update(binding or {})
    domains = dict(VERIFY_DOMAINS, **fixed_domains(values))

    force = force_from_gauge(entry.phi, +1)
    comparison = compare_numeric(force, entry.declared, domains,
                                 samples=VERIFY_SAMPLES, tol=VERIFY_TOLERANCE, seed=seed)
    families = identify_family(entry.phi)
    preferred = _preferred(entry.kind, families)
    if preferred is None:
        family_comparison = NumericComparison(False, float('inf'), diagnostic='gauge function does not separate')
    else:
        rebuilt = family_result(families[preferred]).phi.body
        family_comparison = compare_numeric(rebuilt, entry.phi.body, domains,
                                            samples=VERIFY_SAMPLES, tol=VERIFY_TOLERANCE, seed=seed)
    logger.info('verified %s: force %s, %s', entry.id, 'ok' if comparison.equal else 'MISMATCH',
                preferred or 'no family')
    return VerificationReport(entry, values, force, comparison, families, preferred,
                              family_comparison)


def export_entries(entries=None):
    """ Entries as structured text, one `[id]` record each.

    :param entries: Entries to export, all by default
    :return: str
    """
    records = []
    for entry in entries if entries is not None else _ENTRIES:
        params = ', '.join(f"{name}={ex.format_number(value)}"
                           for name, value in entry.parameters.items())
        records.append('\n'.join([
            f"[{entry.id}]",
            f"kind = {entry.kind}",
            f"phi = {entry.phi_text}",
            f"declared = {entry.declared_text}",
            f"params = {params}",
        ]))
    return '\n\n'.join(records) + '\n'
