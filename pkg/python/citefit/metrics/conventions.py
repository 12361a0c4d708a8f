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

from dataclasses import dataclass, asdict

from ..errors import ConfigurationError

__all__ = ['Conventions', 'TAU_CONVENTIONS']

TAU_CONVENTIONS = ('age_plus_one', 'age', 'ratio')


@dataclass(frozen=True)
class Conventions:
    r"""
    Choices that the variable definitions leave open.

    tau_convention : {'age_plus_one', 'age', 'ratio'}
        :math:`\tau = t - t_i + 1`, :math:`t - t_i` or :math:`t / t_i` for a paper of year
        :math:`t_i` and collection year :math:`t`.
    shift : float
        Added to k and to every :math:`\phi` before a logarithm is taken.
    """
    tau_convention: str = 'age_plus_one'
    shift: float = 1.0

    def __post_init__(self):
        if self.tau_convention not in TAU_CONVENTIONS:
            raise ConfigurationError("unknown tau convention %r, expected one of %s" % (self.tau_convention, TAU_CONVENTIONS))
        if not self.shift >= 0:
            raise ConfigurationError("the zero shift must be >= 0, got %r" % (self.shift,))
        object.__setattr__(self, 'shift', float(self.shift))

    def __reduce_to_dict__(self):
        return asdict(self)

    @classmethod
    def __factory_from_dict__(cls, name, d):
        return cls(d.get('tau_convention', 'age_plus_one'), d.get('shift', 1.0))
