# -*- coding: utf-8 -*-
#
# The flat ``section.name = value`` benchmark configuration

from __future__ import absolute_import, division

from collections import OrderedDict
import logging
import warnings

import numpy as np
from sklearn.base import clone

from ..background import GaussianMixtureBackground
from ..detectors import DETECTORS, METHODS
from ..exceptions import ConfigError
from ..tracking import BlobTracker

__all__ = [
    'BenchConfig',
    'read_config'
]

logger = logging.getLogger(__name__)

# harness options that do not belong to an estimator
_OPTIONS = OrderedDict([
    ('eval', OrderedDict([
        ('lambda_grid', (0.,)),
        ('sweep_grid', (0., 0.25, 0.5, 0.75, 1.)),
        ('desaturation_mode', 'blend'),
        ('sanity_band', 0.75),
        ('n_jobs', 1)])),
    ('timing', OrderedDict([
        ('warmup_frames', 5),
        ('min_frames', 10)])),
    ('output', OrderedDict([
        ('write_overlays', False)])),
])

# the value type of parameters whose default is None
_OPTIONAL_TYPES = {
    'gate': float,
    'mot_gate': float,
    'model_file': str,
    'n_keep': int,
}

_TRUE = ('true', 'yes', 'on', '1')
_FALSE = ('false', 'no', 'off', '0')


def _format(value):
    if value is None:
        return 'none'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, tuple):
        return ', '.join(_format(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _coerce(value, default, name):
    # parse a config string into the type of the default
    if not isinstance(value, str):
        return value
    text = value.strip()
    if text.lower() == 'none' and (default is None or
                                   name in _OPTIONAL_TYPES):
        return None

    if default is None:
        kind = _OPTIONAL_TYPES.get(name, str)
        return kind(text)
    if isinstance(default, bool):
        if text.lower() in _TRUE:
            return True
        if text.lower() in _FALSE:
            return False
        raise ValueError("expected a boolean, got %r" % text)
    if isinstance(default, (int, np.integer)):
        return int(text)
    if isinstance(default, float):
        return float(text)
    if isinstance(default, tuple):
        return tuple(float(v) for v in text.split(',') if v.strip())
    return text


def _check_grid(grid, name):
    if not len(grid):
        raise ValueError("%s must not be empty" % name)
    for lam in grid:
        if not 0. <= lam <= 1.:
            raise ValueError("%s values must be in [0, 1], but got %r"
                             % (name, lam))


class BenchConfig(object):
    """Everything a benchmark run is parametrised by.

    The configuration is a flat mapping of ``section.name`` keys:

    * ``background.<param>``: the :class:`GaussianMixtureBackground`
      parameters
    * ``<method>.<param>``: the parameters of every detector in
      ``METHODS``
    * ``tracking.<param>``: the :class:`BlobTracker` parameters and
      ``tracking.mot_gate``, the MOT matching gate in pixels (None means
      10% of the frame diagonal)
    * ``eval.*``, ``timing.*`` and ``output.*``: harness options
    * ``sequence.<name>.<section>.<param>``: an override of a background or
      detector parameter for one sequence

    Defaults are taken from the estimators' constructors, so a fresh
    config is the untuned setting shared by all sequences. Values set from
    text are coerced to the type of the default; every value is validated
    when it is set.

    Examples
    --------
    >>> config = BenchConfig()
    >>> config.set('chromacity.window', '3')
    >>> config.get('chromacity.window')
    3
    >>> config.detector('chromacity')
    ChromacityDetector(window=3)
    """
    def __init__(self):
        self._estimators = OrderedDict()
        self._estimators['background'] = GaussianMixtureBackground()
        for method in METHODS:
            self._estimators[method] = DETECTORS[method]()
        self._estimators['tracking'] = BlobTracker()

        self._values = OrderedDict()
        for section, est in self._estimators.items():
            self._values[section] = OrderedDict(
                sorted(est.get_params(deep=False).items()))
        self._values['tracking']['mot_gate'] = None
        for section, options in _OPTIONS.items():
            self._values[section] = OrderedDict(options)

        self._overrides = OrderedDict()

    def _default(self, section, name):
        try:
            return self._values[section][name]
        except KeyError:
            raise ConfigError("Unknown configuration key %r"
                              % ('%s.%s' % (section, name)))

    def _split(self, key):
        parts = key.strip().split('.')
        if parts[0] == 'sequence':
            if len(parts) < 4:
                raise ConfigError("Sequence overrides take the form "
                                  "sequence.<name>.<section>.<param>, but "
                                  "got %r" % key)
            return '.'.join(parts[1:-2]), parts[-2], parts[-1]
        if len(parts) != 2:
            raise ConfigError("Unknown configuration key %r" % key)
        return None, parts[0], parts[1]

    def _validate(self, section, values):
        if section in self._estimators:
            est = clone(self._estimators[section])
            est.set_params(**dict((k, v) for k, v in values.items()
                                  if k != 'mot_gate'))
            est._check_params()
            if section == 'tracking' and values.get('mot_gate') is not None \
                    and values['mot_gate'] <= 0:
                raise ValueError("mot_gate must be positive")
        elif section == 'eval':
            _check_grid(values['lambda_grid'], 'lambda_grid')
            _check_grid(values['sweep_grid'], 'sweep_grid')
            if values['desaturation_mode'] not in ('blend', 'hsv'):
                raise ValueError("desaturation_mode must be 'blend' or "
                                 "'hsv', but got %r"
                                 % values['desaturation_mode'])
            if not 0. <= values['sanity_band'] <= 1.:
                raise ValueError("sanity_band must be in [0, 1]")
            if values['n_jobs'] == 0:
                raise ValueError("n_jobs must not be 0")
        elif section == 'timing':
            if values['warmup_frames'] < 0 or values['min_frames'] < 1:
                raise ValueError("warmup_frames must be >= 0 and min_frames "
                                 ">= 1")

    def set(self, key, value):
        """Set one key, coercing text values and validating the result.

        Raises
        ------
        ConfigError
            If the key is unknown or the value cannot be parsed or is out
            of range.
        """
        sequence, section, name = self._split(key)
        if sequence is not None and (section not in self._estimators or
                                     section == 'tracking'):
            raise ConfigError("Only background and detector parameters can "
                              "be overridden per sequence, but got %r" % key)
        default = self._default(section, name)
        try:
            value = _coerce(value, default, name)
            if sequence is None:
                values = OrderedDict(self._values[section])
            else:
                values = self.section(section, sequence)
            values[name] = value
            self._validate(section, values)
        except (TypeError, ValueError) as e:
            raise ConfigError("Invalid value for %s: %s" % (key, e))

        if sequence is None:
            self._values[section][name] = value
        else:
            self._overrides.setdefault(sequence, OrderedDict()) \
                .setdefault(section, OrderedDict())[name] = value
            msg = "Sequence %r uses its own %s.%s = %r" % (
                sequence, section, name, value)
            logger.warning(msg)
            warnings.warn(msg, UserWarning)

    def get(self, key):
        """Get the value of a global key."""
        sequence, section, name = self._split(key)
        if sequence is not None:
            return self.section(section, sequence)[name]
        return self._default(section, name)

    def section(self, section, sequence=None):
        """Get a copy of a section's values, with a sequence's overrides."""
        if section not in self._values:
            raise ConfigError("Unknown configuration section %r" % section)
        values = OrderedDict(self._values[section])
        if sequence is not None:
            values.update(self._overrides.get(sequence, {}).get(section, {}))
        return values

    def is_tuned(self, sequence, section):
        """Whether a sequence overrides any parameter of a section."""
        return bool(self._overrides.get(sequence, {}).get(section))

    def _build(self, section, sequence):
        values = self.section(section, sequence)
        values.pop('mot_gate', None)
        return clone(self._estimators[section]).set_params(**values)

    def detector(self, method, sequence=None):
        """A new, unfitted detector for a method.

        The 'none' baseline has no parameters and is always available.
        """
        if method == 'none':
            return DETECTORS['none']()
        if method not in METHODS:
            raise ConfigError("Unknown method %r; expected one of %r"
                              % (method, list(METHODS)))
        return self._build(method, sequence)

    def background(self, sequence=None):
        """A new background model."""
        return self._build('background', sequence)

    def tracker(self):
        """A new blob tracker."""
        return self._build('tracking', None)

    def items(self):
        """All keys and values, section by section, overrides last."""
        for section, values in self._values.items():
            for name, value in values.items():
                yield '%s.%s' % (section, name), value
        for sequence, sections in self._overrides.items():
            for section, values in sections.items():
                for name, value in values.items():
                    yield ('sequence.%s.%s.%s' % (sequence, section, name),
                           value)

    def write(self, path):
        """Write the effective configuration in the format it is read in.

        Reading the file back with :func:`read_config` gives an equal
        configuration.
        """
        with open(path, 'w') as f:
            f.write('# shadowbench effective configuration\n')
            for key, value in self.items():
                f.write('%s = %s\n' % (key, _format(value)))
        logger.info("Wrote the effective configuration to %s", path)


def read_config(path, config=None):
    """Read a ``key = value`` configuration file.

    ``#`` starts a comment; blank lines are ignored.

    Parameters
    ----------
    path : str
        The configuration file.

    config : BenchConfig or None, optional (default=None)
        The configuration to update. A default one is created if None.

    Returns
    -------
    config : BenchConfig
    """
    if config is None:
        config = BenchConfig()
    try:
        with open(path) as f:
            lines = f.readlines()
    except (IOError, OSError) as e:
        raise ConfigError("Cannot read configuration %r: %s" % (path, e))

    for lineno, line in enumerate(lines, 1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError("%s:%i: expected 'key = value', but got %r"
                              % (path, lineno, line))
        key, value = line.split('=', 1)
        try:
            config.set(key.strip(), value.strip())
        except ConfigError as e:
            raise ConfigError("%s:%i: %s" % (path, lineno, e))
    return config
