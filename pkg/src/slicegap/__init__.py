"""slicegap: exact computations around the Kervaire invariant one problem.

Arf invariants, formal group laws and formal A-modules, cyclic group
cohomology, equivariant cell structures with Bredon homology, slice-cell
combinatorics and RO(G)-graded degree bookkeeping.
"""

__version__ = "0.1.0"
