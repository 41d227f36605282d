"""Spectral radius conditions for Hamiltonian cycles and paths, with certified bounds."""

from .certifier import (
    ExtremalMatch,
    SoundnessError,
    Verdict,
    VerdictKind,
    certify_chvatal,
    certify_cycle,
    certify_li_ning,
    certify_ore,
    certify_path,
    match_extremal,
)
from .graph import ExtremalSpec, Family, Graph, build_extremal, extremal_graph
from .io import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .oracle import OracleOutOfRange, ham_cycle, ham_path, is_ham_connected
from .quotient import quotient_lambda
from .spectral import SpectralEstimate, hsf_upper_bound, spectral_radius
from .tightness import prop1_verify, prop2_verify, threshold_scan

__all__ = [
    "ExtremalMatch",
    "ExtremalSpec",
    "Family",
    "Graph",
    "OracleOutOfRange",
    "SoundnessError",
    "SpectralEstimate",
    "Verdict",
    "VerdictKind",
    "build_extremal",
    "certify_chvatal",
    "certify_cycle",
    "certify_li_ning",
    "certify_ore",
    "certify_path",
    "extremal_graph",
    "ham_cycle",
    "ham_path",
    "hsf_upper_bound",
    "is_ham_connected",
    "match_extremal",
    "parse_edge_list",
    "parse_graph6",
    "prop1_verify",
    "prop2_verify",
    "quotient_lambda",
    "spectral_radius",
    "threshold_scan",
    "write_edge_list",
    "write_graph6",
]
