"""Exact enumeration of plane forests by degree type, hook length
polynomial identities, and bijections on colored labelled forests."""

from .algebra import Polynomial, closed_hookp, closed_hookp2, multinomial
from .bijections import CodeSequence, PsiCase, decode, encode, psi, psi_transport
from .colored import (
    Color,
    ColoredLabelledForest,
    Edge,
    Partition,
    Special,
    Vertex,
    adjacent,
    count_colorings,
    enumerate_colored,
    is_proper,
    lemma_ccf_lhs,
    partition_path,
    partitions,
    prop_cf_count,
    thm_cfs_count,
)
from .forest import (
    DegreeSequence,
    VertexRef,
    count_forests,
    degree_sequence_of,
    enumerate_forests,
    hook_length,
    parse_forest,
    serialize_forest,
)
from .hookpoly import (
    brute_hookp,
    brute_hookp2,
    lascoux_check,
    postnikov_check,
    verify_hookp,
    verify_hookp2,
    vertex_hook_poly,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSequence",
    "Color",
    "ColoredLabelledForest",
    "DegreeSequence",
    "Edge",
    "Partition",
    "Polynomial",
    "PsiCase",
    "Special",
    "Vertex",
    "VertexRef",
    "adjacent",
    "brute_hookp",
    "brute_hookp2",
    "closed_hookp",
    "closed_hookp2",
    "count_colorings",
    "count_forests",
    "decode",
    "degree_sequence_of",
    "encode",
    "enumerate_colored",
    "enumerate_forests",
    "hook_length",
    "is_proper",
    "lascoux_check",
    "lemma_ccf_lhs",
    "multinomial",
    "parse_forest",
    "partition_path",
    "partitions",
    "postnikov_check",
    "prop_cf_count",
    "psi",
    "psi_transport",
    "serialize_forest",
    "thm_cfs_count",
    "verify_hookp",
    "verify_hookp2",
    "vertex_hook_poly",
]
