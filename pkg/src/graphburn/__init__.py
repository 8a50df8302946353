"""Constructive burning schedules for trees and connected graphs."""

from .burnsim import simulate, verify_schedule
from .decompose import (
    BurnSchedule,
    Decomposition,
    Extraction,
    RadiusSet,
    burn_graph,
    burn_tree,
    burning_bound,
    decompose_tree,
    elementary_decompose,
    extract_step,
    reference_bounds,
    schedule_from,
    select_radius,
)
from .exact import exact_burning_number, tree_cover_check
from .graph import Graph, RootedTree, load_edge_list, metrics, spanning_tree

__all__ = [
    "BurnSchedule",
    "Decomposition",
    "Extraction",
    "Graph",
    "RadiusSet",
    "RootedTree",
    "burn_graph",
    "burn_tree",
    "burning_bound",
    "decompose_tree",
    "elementary_decompose",
    "exact_burning_number",
    "extract_step",
    "load_edge_list",
    "metrics",
    "reference_bounds",
    "schedule_from",
    "select_radius",
    "simulate",
    "spanning_tree",
    "tree_cover_check",
    "verify_schedule",
]
