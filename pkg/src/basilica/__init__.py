"""Edge-replacement rewriting and rearrangement diagrams for the Basilica system.

The package is organised around three layers:

* :mod:`basilica.graphs` implements finite directed graphs carrying a
  rotation system, the Basilica edge-replacement rule (each edge expands
  into a path-with-loop), its inverse contraction, and the combinatorial
  invariants (occurrences, outer boundary walk, special circuits,
  collapsible vertices, defect) used by the rank bounds.

* :mod:`basilica.diagrams` and :mod:`basilica.cubes` implement
  rearrangement diagrams (pairs of expansions with a leaf bijection),
  their groupoid structure, reduction to normal form, and the cube
  complex whose vertices are reduced diagrams and whose moves are
  elementary expansions and contractions.  Wall trackers certify on
  which side of a wall a path ends and how often it crosses.

* :mod:`basilica.certificates`, :mod:`basilica.homology` and
  :mod:`basilica.cli` run the verification campaigns (sublevel
  emptiness, quarter-space witnesses, detour paths, nerve and
  descending-link homology) and write machine-readable reports.
"""

from basilica.graphs import (
    AddressedGraph,
    GraphError,
    ContractionError,
    ExpansionError,
    make_g0,
    make_j,
    make_o,
)
from basilica.diagrams import (
    GraphPairDiagram,
    DiagramError,
    compose,
    reduce_diagram,
    range_equivalent,
)
from basilica.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "AddressedGraph",
    "GraphError",
    "ContractionError",
    "ExpansionError",
    "GraphPairDiagram",
    "DiagramError",
    "compose",
    "reduce_diagram",
    "range_equivalent",
    "make_g0",
    "make_j",
    "make_o",
    "BACKEND",
    "__version__",
]
