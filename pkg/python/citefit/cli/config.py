# Copyright (c) 2026 The citefit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You may obtain a copy of the License at
#     https://www.gnu.org/licenses/gpl-3.0.txt

r"""
Run configuration.

Values come, by increasing precedence, from the defaults, a JSON configuration file
and the command line flags. The resolved configuration is echoed into every artifact.
"""

import json
from dataclasses import dataclass, fields, asdict, replace

from ..errors import ConfigurationError
from ..metrics import Conventions, TAU_CONVENTIONS

__all__ = ['RunConfig']


@dataclass(frozen=True)
class RunConfig:
    """
    All the conventions of a run. Output locations are not part of it.

    ``attachment`` left to None means ``degree_times_fitness`` for a non constant
    fitness and ``degree`` otherwise.
    """
    input: str = None
    format: str = None
    tau_convention: str = 'age_plus_one'
    shift: float = 1.0
    strict_years: bool = False
    min_year: int = None
    collection_year: int = None
    name_overrides: str = None
    benchmark: str = None
    model: str = 'paper'
    by: str = 'k_t'
    top_n: int = 20
    normalize: str = 'none'
    kind: str = 'cumulative'
    binning: str = 'unit'
    output_format: str = 'csv'
    seed: int = 7
    n_final: int = 10000
    m: int = 3
    fitness: str = 'uniform'
    attachment: str = None
    years_per_step: float = 0.01
    n_threads: int = None

    def __post_init__(self):
        if self.tau_convention not in TAU_CONVENTIONS:
            raise ConfigurationError("unknown tau convention %r" % (self.tau_convention,))
        if self.model not in ('paper', 'scholar'):
            raise ConfigurationError("model must be paper or scholar, got %r" % (self.model,))
        if self.output_format not in ('csv', 'json'):
            raise ConfigurationError("output format must be csv or json, got %r" % (self.output_format,))
        if self.top_n is not None and self.top_n < 1:
            raise ConfigurationError("top_n must be positive")

    @classmethod
    def names(cls):
        return [f.name for f in fields(cls)]

    @classmethod
    def from_file(cls, path):
        """The defaults updated by a JSON object file."""
        try:
            with open(path, encoding='utf-8') as f:
                d = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError("cannot read configuration %s: %s" % (path, e)) from None
        if not isinstance(d, dict):
            raise ConfigurationError("configuration %s must hold a JSON object" % path)
        return cls().updated(d)

    def updated(self, values):
        """A copy with the not-None entries of ``values``; unknown keys are an error."""
        unknown = sorted(set(values) - set(self.names()))
        if unknown: raise ConfigurationError("unknown configuration keys %s" % unknown)
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    @classmethod
    def resolve(cls, flags, config_file = None):
        """flags > config file > defaults."""
        base = cls.from_file(config_file) if config_file else cls()
        return base.updated({k: v for k, v in flags.items() if k in cls.names()})

    @property
    def conventions(self):
        return Conventions(self.tau_convention, self.shift)

    def to_dict(self):
        return asdict(self)
