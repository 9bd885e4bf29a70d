"""Graph burning on k+-branching trees and graph powers.

Exact burning numbers, constructive schedules with certified round
bounds, high-branching spanning trees of tree powers, and the closed-form
bounds that go with them.
"""
from .bounds import (
    BoundReport,
    beats_leafstrip,
    bound_branching,
    bound_leafstrip,
    bound_power,
    bound_report,
    caterpillar_lower_bound,
    table1,
    threshold_n,
)
from .burning import (
    BurnSchedule,
    BurnTrace,
    exact_burning_number,
    exact_modified_burning_number,
    is_valid,
    simulate,
)
from .decomp import SplitCertificate, find_split_vertex, min_leaf_count, strip_leaves
from .errors import BudgetExceeded, BurnkitError, DomainError, InputError
from .graph import Graph, Tree, diameter, graph_power, is_k_branching
from .io import read_edge_list, write_edge_list
from .powers import PeelingLog, burn_graph_power, extract_branching_spanning_tree
from .schedule import ScheduleCertificate, burn_branching_modified, burn_branching_tree, leafstrip_schedule
from .spanning import branch_number, find_branching_spanning_tree, verify_no_branching_spanning_tree

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "BudgetExceeded", "BurnSchedule", "BurnTrace", "BurnkitError", "DomainError",
    "Graph", "InputError", "PeelingLog", "ScheduleCertificate", "SplitCertificate", "Tree",
    "beats_leafstrip", "bound_branching", "bound_leafstrip", "bound_power", "bound_report",
    "branch_number", "burn_branching_modified", "burn_branching_tree", "burn_graph_power",
    "caterpillar_lower_bound", "diameter", "exact_burning_number", "exact_modified_burning_number",
    "extract_branching_spanning_tree", "find_branching_spanning_tree", "find_split_vertex",
    "graph_power", "is_k_branching", "is_valid", "leafstrip_schedule", "min_leaf_count",
    "read_edge_list", "simulate", "strip_leaves", "table1", "threshold_n",
    "verify_no_branching_spanning_tree", "write_edge_list",
]
