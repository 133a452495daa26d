"""Golay complementary pairs, complementary sets and binary complete
complementary codes of non-power-of-two length, built from truncated
generalized Boolean functions."""

from .construct import (
    PRESETS,
    REPAIRED,
    TEN,
    THIRTEEN,
    VERBATIM,
    ConstructionError,
    ConstructionSpec,
    build_f,
    build_f_10,
    build_f_13,
    ccc,
    gcp_pair,
    mate_family,
    mate_set,
    mocs_family,
    mocs_set,
    offset_family,
    pmepr_offset,
    reversed_gbf,
    construct_pair,
)
from .corr import (
    CodeFamily,
    CodeSet,
    CorrelationReport,
    aacf,
    aacs,
    accf,
    accs,
    full_accf,
    naive_full_accf,
    verify_ccc,
    verify_cs,
    verify_gcp,
    verify_mocs,
)
from .gbf import Domain, Gbf, RestrictedVector, Term, ZqSequence, add_linear, evaluate, generate_sequence, restrict
from .pmepr import EnvelopeProfile, column_pmepr, envelope, row_pmepr
from .quadgraph import NotAPathError, PathWitness, QuadGraph, delete_vertices, graph_of, path_witness

__version__ = "0.1.0"
