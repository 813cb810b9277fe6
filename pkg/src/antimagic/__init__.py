"""Antimagic edge labellings of (k,2)-biregular bipartite graphs."""

from .errors import AntimagicError, GraphFormatError, InternalInvariantError, ValidationFailed
from .graph import (BiregularGraph, Subgraph, ValidationReport, VertexRef, connected_components,
                    disjoint_union, induced_subgraph, is_complete_k2, is_connected, validate, xv, yv)
from .labelling import Labelling
from .fileformats import parse_graph, parse_labelling, serialize_graph, serialize_labelling
from .generators import GenConfig, gen_connected, gen_kk2, gen_multi, has_c4, subdivided_k4
from .layering import FPins, FSet, Layering, TypeTable, build_F, build_layering, classify_types
from .labeller_odd import LabelTrace, StartOverride, label_connected_odd, label_kk2
from .labeller_even import label_connected_even
from .multi import (CaseTag, ComponentPlan, ConflictRecord, MultiTrace, detect_conflict,
                    label_disconnected_odd, relabel_component_with_pins, repair_conflict)
from .pipeline import choose_pipeline, label_graph
from .verify import check_antimagic, check_structural_invariants, vertex_sums
from .oracle import brute_force_search, is_antimagic_assignment
from .dot import export_dot

import types as _types

__all__ = [name for name, obj in sorted(globals().items())
           if not name.startswith("_") and not isinstance(obj, _types.ModuleType)]
