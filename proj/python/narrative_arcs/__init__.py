"""Emotion arcs and gender co-occurrence structure in narrative text.

Thin Python surface over the C++ core: text primitives (tokenize,
split_segments, tag_pos), the statistics used throughout (pearson,
ols_simple, ols_multi, welch_t), embedding/axis handling, word-network
community detection, and the whole-corpus JSON entry points that back the
``narrative-arcs`` command line tool.
"""

from narrative_arcs._core import (
    EmbeddingTable,
    SentimentAxis,
    __version__,
    build_axis,
    cli_main,
    detect_communities,
    load_embeddings,
    merge_clusters,
    modularity,
    ols_multi,
    ols_simple,
    pearson,
    report_json,
    split_segments,
    student_t_two_sided,
    tag_pos,
    tokenize,
    validate_axis,
    validate_axis_json,
    welch_t,
    word_happiness,
)

__all__ = [
    "EmbeddingTable",
    "SentimentAxis",
    "__version__",
    "build_axis",
    "cli_main",
    "detect_communities",
    "load_embeddings",
    "merge_clusters",
    "modularity",
    "ols_multi",
    "ols_simple",
    "pearson",
    "report_json",
    "split_segments",
    "student_t_two_sided",
    "tag_pos",
    "tokenize",
    "validate_axis",
    "validate_axis_json",
    "welch_t",
    "word_happiness",
]
