"""Brute-force ground truth: graph enumeration, planar embedding, extremal search."""

from .canonical import canonical_form, canonical_labeling, from_edges, graph6, parse_graph6
from .embed import all_embeddings, embed_planar, is_planar
from .generate import GraphClass, GuardExceeded, enumerate_abstract_graphs
from .search import (
    LevelStore,
    SearchResult,
    corpus_P_n,
    default_store,
    ex_planar,
    plane_corpus,
    two_connected_planar,
)

__all__ = [
    "GraphClass",
    "GuardExceeded",
    "LevelStore",
    "SearchResult",
    "all_embeddings",
    "canonical_form",
    "canonical_labeling",
    "corpus_P_n",
    "default_store",
    "embed_planar",
    "enumerate_abstract_graphs",
    "ex_planar",
    "from_edges",
    "graph6",
    "is_planar",
    "parse_graph6",
    "plane_corpus",
    "two_connected_planar",
]
