#####################################################################
#
# Run configuration of the gaugeforge command line.
#
# Values come from, in increasing precedence:
#   1. the defaults below
#   2. the GAUGEFORGE_SEED environment variable (seed only)
#   3. an INI file given with --config, plain `key = value` lines
#      with an optional [run] section header
#   4. command line flags
#
# Parameter bindings are written `name=value`, comma separated in the
# INI file (`params = F0=2, eps=0.05`) and as repeated --param flags
# on the command line.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################

import configparser
from dataclasses import dataclass, field, replace
import logging
import os

from lib import expression as ex
from lib.catalog import lookup
from lib.dynamics import DynamicalSystem
from lib.errors import ConfigError
from lib.mechanics import standard_oscillator

logger = logging.getLogger(__name__)

SEED_VARIABLE = 'GAUGEFORGE_SEED'
SECTION = 'run'

CONFIG_KEYS = ('system', 'gauge', 'drive', 'lagrangian', 'sign', 'x0', 'v0',
               't0', 't1', 'dt', 'out', 'seed', 'params')


def _number(key, value):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be a number: {value}") from None


def _integer(key, value):
    try:
        return int(str(value).strip())
    except ValueError:
        raise ConfigError(f"{key} must be an integer: {value}") from None


def parse_sign(value):
    text = str(value).strip()
    if text in ('1', '+1', '+'):
        return 1
    if text in ('-1', '-'):
        return -1
    raise ConfigError(f"sign must be +1 or -1: {value}")


def parse_params(items):
    """ Parse `name=value` parameter assignments.

    :param items: Iterable of 'name=value' strings, or one comma separated string
    :return: dict name -> float
    """
    if isinstance(items, str):
        items = [item for item in items.split(',') if item.strip()]
    params = {}
    for item in items:
        name, sep, value = item.partition('=')
        name = name.strip()
        if not sep or not name:
            raise ConfigError(f"parameter must be written NAME=VALUE: {item}")
        try:
            ex.parameter(name)
        except ValueError as err:
            raise ConfigError(f"{err}: {item}") from None
        params[name] = _number(name, value.strip())
    return params


@dataclass(frozen=True)
class RunConfig:
    """ Everything a simulate or action-check run needs.

    :param system: Catalog entry id
    :param gauge: Gauge function text (driving gauge of simulate, checked gauge of action-check)
    :param drive: Inline driving gauge of action-check
    :param lagrangian: Standard Lagrangian text, the unit oscillator when omitted
    :param sign: Driving sign, +1 or -1
    :param params: Parameter values overriding catalog defaults
    """
    system: str = None
    gauge: str = None
    drive: str = None
    lagrangian: str = None
    sign: int = 1
    x0: float = 1.0
    v0: float = 0.0
    t0: float = 0.0
    t1: float = 10.0
    dt: float = 1e-3
    out: str = None
    seed: int = 42
    params: dict = field(default_factory=dict)

    def updated(self, values):
        """ Copy with the given (raw or typed) values applied; None values are skipped.
        """
        changes = {}
        for key, value in values.items():
            if value is None:
                continue
            if key not in CONFIG_KEYS:
                raise ConfigError(f"unknown configuration key: {key}")
            if key == 'params':
                merged = dict(self.params)
                merged.update(value if isinstance(value, dict) else parse_params(value))
                value = merged
            elif key == 'sign':
                value = parse_sign(value)
            elif key == 'seed':
                value = _integer(key, value)
            elif key in ('x0', 'v0', 't0', 't1', 'dt'):
                value = _number(key, value)
            else:
                value = str(value).strip()
            changes[key] = value
        return replace(self, **changes)

    def check_system(self, inline=('gauge', 'lagrangian')):
        """ Require exactly one of a catalog id or inline expressions.
        """
        given = [key for key in inline if getattr(self, key)]
        if self.system and given:
            raise ConfigError('give either a catalog system or inline expressions, not both: '
                              f"--system {self.system} with --{given[0]}")
        if not self.system and not given:
            raise ConfigError('no system given: use --system ID or --' + ' / --'.join(inline))
        return self


def read_config_file(path):
    """ Raw `key = value` pairs of an INI file.

    :param path: File path
    :return: dict of strings
    :raises ConfigError: On unreadable files, syntax errors and unknown keys
    """
    try:
        with open(path, 'r') as file:
            text = file.read()
    except OSError as err:
        raise ConfigError(f"cannot read configuration file: {path} ({err.strerror})") from None

    if not text.lstrip().startswith('['):
        text = f"[{SECTION}]\n" + text
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#', ';'))
    try:
        parser.read_string(text, source=path)
    except configparser.Error as err:
        raise ConfigError(f"malformed configuration file: {path} ({err.message})") from None

    if not parser.has_section(SECTION):
        raise ConfigError(f"configuration file has no [{SECTION}] section: {path}")
    extra = [name for name in parser.sections() if name != SECTION]
    if extra:
        raise ConfigError(f"unknown configuration section: [{extra[0]}] in {path}")
    values = dict(parser.items(SECTION))
    for key in values:
        if key not in CONFIG_KEYS:
            raise ConfigError(f"unknown configuration key: {key} in {path}")
    logger.info('read %d settings from %s', len(values), path)
    return values


def resolve_config(flags=None, config_path=None, environ=None):
    """ Merge defaults, environment, configuration file and flags.

    :param flags: dict of command line values; None entries are not given
    :param config_path: Optional INI path
    :param environ: Environment mapping, os.environ by default
    :return: RunConfig
    """
    environ = os.environ if environ is None else environ
    config = RunConfig()
    if environ.get(SEED_VARIABLE):
        config = config.updated({'seed': environ[SEED_VARIABLE]})
    if config_path:
        config = config.updated(read_config_file(config_path))
    return config.updated(flags or {})


def build_system(config, inline_gauge='gauge'):
    """ DynamicalSystem described by a configuration.

    :param config: RunConfig
    :param inline_gauge: Field holding the inline driving gauge ('gauge' or 'drive')
    :return: DynamicalSystem
    """
    if config.system:
        return lookup(config.system).system(config.sign, config.params)
    gauge = getattr(config, inline_gauge)
    standard = config.lagrangian if config.lagrangian else standard_oscillator()
    return DynamicalSystem(standard=standard, gauge=gauge, sign=config.sign,
                           binding=config.params)
