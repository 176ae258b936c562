"""Conditional graph patterns: matching, containment and answering from views."""
from .constraints import equivalent, implies, is_satisfiable, satisfies
from .containment import (Candidates, Containment, ContainmentMapping, candidates, equivalent_cgp,
                          focus_equivalent, t_contained)
from .dsl import (ParseError, parse_graph, parse_match_result, parse_pattern, serialize_graph,
                  serialize_match_result, serialize_pattern)
from .model import (Atom, Cgp, DataEdge, DataGraph, DataNode, FocusedQgp, PatternEdge, PatternNode, Qgp,
                    Size, ValidationError, Violation, check, is_rooted_tree, positive_version, size, validate)
from .pom import pom, pom_seeded
from .scmatch import InconsistentInputs, ViewGraph, build_view_graph, sc_match
from .simulation import EMPTY, MatchResult, cond_sim, graph_sim, match_result, qgp_eval, qgp_sim
from .strongc import RefElimRelations, StrongContainment, extract_rels, s_contained, strong_report

__all__ = [name for name in dir() if not name.startswith("_")]
