"""Knots and links in spatial complete graphs K_n.

Exact rational geometry for straight-line embeddings, crossing diagrams,
the a2 and linking-number kernels, aggregate sums over Hamiltonian cycles,
and the twist and delta constructions that realize every admissible sum.
"""
from .closed_forms import c_n, r_n, residue_modulus, sigma, tau, twist_sum
from .constructions import (InadmissibleTargetError, RealizationPlan, TwistParams, delta_gadget,
                            plan_realization, realize, twist_embedding)
from .diagram import (Crossing, Diagram, DiagramError, DiagramParseError, KnotDiagram, LinkDiagram,
                      Passage, deserialize, extract_knot, extract_link, serialize, validate)
from .geometry import (DegenerateConfigurationError, PointSet, diagram_from_points, random_embedding,
                       standard_diagram, standard_points, validate_generic)
from .invariants import (InvariantReport, Verdict, invariant_report, sum_a2, verify_congruence,
                         verify_identity, verify_sachs)
from .knots import a2, a2_gauss_diagram, lk

__all__ = [
    "c_n", "r_n", "residue_modulus", "sigma", "tau", "twist_sum",
    "InadmissibleTargetError", "RealizationPlan", "TwistParams", "delta_gadget",
    "plan_realization", "realize", "twist_embedding",
    "Crossing", "Diagram", "DiagramError", "DiagramParseError", "KnotDiagram", "LinkDiagram",
    "Passage", "deserialize", "extract_knot", "extract_link", "serialize", "validate",
    "DegenerateConfigurationError", "PointSet", "diagram_from_points", "random_embedding",
    "standard_diagram", "standard_points", "validate_generic",
    "InvariantReport", "Verdict", "invariant_report", "sum_a2", "verify_congruence",
    "verify_identity", "verify_sachs", "a2", "a2_gauss_diagram", "lk",
]
