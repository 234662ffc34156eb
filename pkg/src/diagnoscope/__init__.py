"""Fault diagnosability analysis of interconnection networks.

Computes the traditional diagnosability and the edge-fault tolerable
diagnosability of graphs under the PMC and MM* test models, constructs
and recognizes the exceptional graph family excluded from the MM*
results, and verifies the supported theorems against brute-force oracles
on desk-scale graphs.
"""

from .connectivity import (
    CommonNeighbors,
    ConnectivityReport,
    DisjointPaths,
    internally_disjoint_paths,
    is_connected,
    is_maximally_connected,
    max_common_neighbors,
    vertex_connectivity,
)
from .diagnosis import (
    DiagModel,
    DiagnosisDecision,
    IndistinguishableWitness,
    MmCheck,
    diagnosability,
    diagnosability_cap,
    distinguishable_mm,
    distinguishable_pmc,
    is_t_diagnosable,
)
from .families import (
    GammaSpec,
    RecognitionResult,
    RecognizedDecomposition,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    generate_standard,
    hypercube,
    make_gamma,
    path,
    petersen,
    prism,
    random_gamma,
    random_t_connected,
    rebuild_from_witness,
    recognize_exceptional,
    wheel,
)
from .formats import (
    FormatError,
    emit_edge_list,
    emit_graph6,
    gamma_spec_from_json,
    gamma_spec_to_json,
    parse_edge_list,
    parse_graph6,
)
from .graphs import (
    CapExceededError,
    DegreeProfile,
    Graph,
    GraphError,
    build_graph,
    complement,
    degree_profile,
    delete_edges,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
    join,
    relabel,
    star_1,
    star_r,
)
from .syndrome import (
    ALL_ONE,
    ALL_ZERO,
    EXHAUSTIVE,
    AdversaryPolicy,
    MmSyndrome,
    PmcSyndrome,
    SyndromeError,
    confusing_syndrome,
    consistent_with,
    decode,
    generate_syndrome,
    seeded_random,
    syndromes_compatible,
    unique_decoding_everywhere,
)
from .tolerance import (
    BoundCondition,
    BoundReport,
    ToleranceResult,
    edge_tolerable_by_definition,
    edge_tolerable_diagnosability,
    theoretical_bounds,
)
from .verification import (
    ALL_CLAIMS,
    Budget,
    ClaimRow,
    CorpusEntry,
    VerificationReport,
    default_corpus,
    run_suite,
)

__version__ = "0.1.0"
