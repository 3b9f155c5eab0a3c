"""Exact genus machinery for graphs with two terminals and the cascade census."""
from .graph import (
    LabeledGraph,
    MinorOp,
    OpKind,
    apply_minor_op,
    augment,
    blocks,
    identify_terminals,
    minor_ops,
)
from .canon import canonical_form, is_isomorphic
from .embed import Embedding, euler_genus, euler_genus_plus, is_planar, trace_faces

__all__ = [
    "LabeledGraph",
    "MinorOp",
    "OpKind",
    "apply_minor_op",
    "augment",
    "blocks",
    "identify_terminals",
    "minor_ops",
    "canonical_form",
    "is_isomorphic",
    "Embedding",
    "euler_genus",
    "euler_genus_plus",
    "is_planar",
    "trace_faces",
]
