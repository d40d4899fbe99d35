"""Singly connected orientations of undirected graphs."""
from .check import (ScWitness, Verdict, check_singly_connected, eliminate_long_cycles,
                    is_singly_connected, oracle_singly_connected_flow, oracle_singly_connected_paths)
from .core import biconnected_blocks, bipartition, chromatic_number, contract, girth
from .gadgets import (CouplingGadget, glue_coupling_cycle, perfectify, verify_coupling_gadget)
from .graph import Coloring, DirectedGraph, Orientation, UndirectedGraph
from .io import parse_graph, serialize_graph
from .named import make_named_graph
from .patterns import PatternKind, find_pattern
from .poly import (NearBipartitePartition, build_sdh, classify_dh, find_independent_fvs,
                   orient_by_coloring, orient_near_bipartite, orient_strongly_dh)
from .reduction import (CnfFormula, ReductionArtifacts, ReductionParams, decode_assignment,
                        orient_from_assignment, reduce_3sat)
from .solve import (count_sc_orientations, decide_sc_orientable, lift_orientation,
                    naive_sc_orientable, preprocess)

__version__ = "0.1.0"
