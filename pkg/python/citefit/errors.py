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

"""
Exceptions and warning categories shared by all citefit modules.
"""

__all__ = ['CitefitError', 'CorpusParseError', 'TemporalOrderError', 'ConfigurationError',
           'DomainError', 'RankDeficiencyError', 'InsufficientDataError', 'CorrelationError',
           'CorpusWarning', 'BenchmarkWarning']


class CitefitError(RuntimeError):
    """Base class of every error raised on purpose by citefit."""


class CorpusParseError(CitefitError):
    """
    A corpus file does not parse under its declared format.

    The locus is kept in ``path``, ``line`` (1-based, when known) and ``element``
    (XML tag or CSV/JSONL field name, when known).
    """
    def __init__(self, message, path=None, line=None, element=None):
        self.path, self.line, self.element = path, line, element
        locus = [str(x) for x in (path, "line %s" % line if line is not None else None, element) if x is not None]
        super().__init__("%s (%s)" % (message, ", ".join(locus)) if locus else message)


class TemporalOrderError(CitefitError):
    """A paper cites a paper published after it and strict years are requested."""


class ConfigurationError(CitefitError, ValueError):
    """Inconsistent configuration, e.g. conflicting name overrides."""


class DomainError(CitefitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RankDeficiencyError(CitefitError):
    """
    The design matrix is singular or too badly conditioned to be solved.

    ``columns`` names the predictors found to be (nearly) linearly dependent.
    """
    def __init__(self, message, columns=()):
        self.columns = list(columns)
        super().__init__(message)


class InsufficientDataError(CitefitError, ValueError):
    """Not enough observations for the requested estimate."""


class CorrelationError(CitefitError):
    """A correlation is requested on fewer than three paired values."""


class CorpusWarning(UserWarning):
    """Non fatal data-quality problem met while building or analysing a corpus."""


class BenchmarkWarning(UserWarning):
    """Benchmark entries that could not be joined to any scored entity."""
