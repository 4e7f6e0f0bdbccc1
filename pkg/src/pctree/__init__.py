"""Large properly colored and rainbow trees in edge-colored graphs."""
from .errors import (BoundExceeded, GraphFormatError, InternalGuaranteeViolation, InvalidParameters,
                     NonStarComponent, NoValidRepair, NotConnected, NotStarColored, PreconditionViolated)
from .extremal import FamilyInstance, generate, recognize, verify_membership
from .formats import format_graph, format_tree, parse_graph, read_cnf, read_graph, read_tree, write_graph
from .graph import (EdgeColoredGraph, color_degree, cut_edges, is_star_colored, min_color_degree,
                    monochromatic_components)
from .matroid import GraphicMatroid, PartitionMatroid, has_rainbow_spanning_tree, max_common_independent
from .oracle import brute_matroid_intersection, max_colored_tree, max_sat_brute, naive_cut_edges
from .pipeline import (RecolorMap, SolveOutcome, bridge_certificate, build_pc_tree, exhaustive_threshold_search,
                       preprocess_removable_edges, recolor_stars, repair_extremal, restore_colors)
from .rainbow import build_rainbow_tree
from .sat import CnfFormula, ReductionMap, build_tree_from_assignment, extract_assignment, reduce
from .trees import ColoredTree, Mode, tree_defect, verify_tree

__version__ = "0.1.0"
