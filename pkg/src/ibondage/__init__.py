"""Independent domination and independent bondage on planar graphs.

Exact solvers, configuration detectors, discharging checks and bondage
certificates for the four girth / minimum-degree classes.
"""

from __future__ import annotations

from .bondage import BondageResult, b_i_exact, bound_report, priddy_wei_bound
from .certify import BondageCertificate, build_bondage_set, certify_graph, verify_certificate
from .configs import (
    ConfigWitness,
    detect_girth4_mindeg3,
    detect_girth5,
    detect_girth7,
    detect_girth10,
    validate_witness,
)
from .discharge import Scheme, apply_rules, initial_charges, verify_nonnegative
from .domination import DominationResult, gamma_i
from .embedding import PlanarEmbedding, check_planar_embedding, compute_embedding, faces_of
from .generate import ClassSpec, generate
from .graph import Graph, build_graph, girth

__version__ = "0.1.0"

__all__ = [
    "BondageCertificate", "BondageResult", "ClassSpec", "ConfigWitness", "DominationResult",
    "Graph", "PlanarEmbedding", "Scheme",
    "apply_rules", "b_i_exact", "bound_report", "build_bondage_set", "build_graph",
    "certify_graph", "check_planar_embedding", "compute_embedding",
    "detect_girth10", "detect_girth4_mindeg3", "detect_girth5", "detect_girth7",
    "faces_of", "gamma_i", "generate", "girth", "initial_charges", "priddy_wei_bound",
    "validate_witness", "verify_certificate", "verify_nonnegative",
]
