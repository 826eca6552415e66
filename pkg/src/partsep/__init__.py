"""Reduction of N-qubit density matrices to two-qubit states along a
bipartition, and the PPT test on the reduced state as a partial-separability
criterion."""

from .criteria import (
    SeparabilityReport,
    Verdict,
    VerdictKind,
    analyze_all,
    check_partial_separability,
    partial_transpose,
    ppt_min_eigenvalue,
)
from .linalg import dagger, hermitian_eigenvalues, is_hermitian, jacobi_eigh, kron
from .partition import (
    Partition,
    SubSplit,
    enumerate_canonical_splits,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .qdm import load_matrix, save_matrix, write_report
from .reduction import (
    extract_submatrix,
    index_vector,
    permutation_matrix,
    reduce,
    reduce_pure_oracle,
    reorder_qubits,
)
from .states import (
    DensityMatrix,
    PureState,
    construct_inseparable,
    ghz,
    maximally_mixed,
    paper_example,
    pure_to_density,
    random_density,
    random_pure,
    singlet_projector,
    validate_density,
    werner,
)

__version__ = "0.1.0"
