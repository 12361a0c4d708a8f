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
#     https:#www.gnu.org/licenses/gpl-3.0.txt

from spack import *

class Citefit(CMakePackage):
    """citefit: fitness analysis of citation networks"""

    version('1.0.0')

    variant('mpi', default=False, description='Allow the network simulator to report through mpi4py.')

    # citefit Dependencies
    depends_on('cmake', type='build')
    depends_on('python@3.9:', type=('build', 'run'))
    depends_on('py-scipy', type=('run'))
    depends_on('py-numpy', type=('run'))
    depends_on('py-pandas', type=('run'))
    depends_on('py-mpi4py', type=('run'), when='+mpi')

    extends('python')
