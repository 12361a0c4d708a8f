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
Rank bookkeeping and reporting.

When the interpreter was started by an MPI launcher the module binds to ``mpi4py``,
otherwise it provides the serial equivalents with the same API, so callers never
test for MPI themselves::

    import citefit.utility.mpi as mpi
    for i in mpi.slice_array(numpy.arange(n)): ...
    total = mpi.all_reduce(partial)
    mpi.report("done")
"""

import os, sys

__all__ = ['check_for_mpi', 'world', 'rank', 'size', 'master', 'verbosity', 'report',
           'is_master_node', 'bcast', 'barrier', 'all_reduce', 'slice_inf', 'slice_sup', 'slice_array']

myprint_err = lambda x : sys.stderr.write("%s\n"%x)
myprint_out = lambda x : sys.stdout.write("%s\n"%x)

# variables set by the various MPI launchers
_mpi_env_vars = ('OMPI_COMM_WORLD_RANK', 'PMI_RANK', 'PMIX_RANK', 'MPI_LOCALRANKID',
                 'MV2_COMM_WORLD_RANK', 'SLURM_PROCID_MPI')

def check_for_mpi():
    """Whether the process runs under an MPI launcher (and may import mpi4py)."""
    if os.environ.get('CITEFIT_NO_MPI'): return False
    return any(v in os.environ for v in _mpi_env_vars)

world = None
rank = 0
size = 1
master = 0

if check_for_mpi():
    try:
        from mpi4py import MPI
        world = MPI.COMM_WORLD
        rank = world.Get_rank()
        size = world.Get_size()
    except ImportError:
        myprint_err("mpi4py not available, running serially")
        world = None

# report() prints messages whose level is <= verbosity
verbosity = 1

def report(*x, **opt):
    """Print on the master, do nothing on the other nodes.

    Keyword ``level`` (default 1) is compared to the module ``verbosity``;
    ``stderr=True`` sends the lines to stderr.
    """
    if opt.get('level', 1) > verbosity: return
    if rank != master: return
    myprint, myflush = (myprint_err, sys.stderr.flush) if opt.get('stderr') else (myprint_out, sys.stdout.flush)
    for y in x:
        myprint(y)
    myflush()

def is_master_node(): return rank == master

def bcast(x, root = 0):
    return world.bcast(x, root = root) if world is not None else x

def barrier():
    if world is not None: world.barrier()

def all_reduce(x, op = None):
    """Sum (or reduce with ``op``) x over all nodes. Identity in a serial run."""
    if world is None: return x
    return world.allreduce(x, op = op if op is not None else MPI.SUM)

def slice_inf(imin, imax):
    j = (imax - imin + 1)//size
    i = imax - imin + 1 - size*j
    return imin + rank*(j+1) if rank <= i-1 else imin + rank*j + i

def slice_sup(imin, imax):
    j = (imax - imin + 1)//size
    i = imax - imin + 1 - size*j
    return imin + (rank+1)*(j+1) - 1 if rank <= i-1 else imin + (rank+1)*j + i - 1

def slice_array(A):
    """Given an array A, it returns a VIEW of a slice over the first dim on the node"""
    if size == 1: return A
    imax = A.shape[0] - 1
    return A[slice_inf(0, imax):slice_sup(0, imax)+1] # +1 due to the slice convention
