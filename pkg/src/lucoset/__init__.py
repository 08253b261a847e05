"""Local unitary equivalence of multipartite density matrices.

States of a fixed eigenvalue multiplicity structure correspond, up to
local unitaries, to double cosets of the unitary group by a tensor-product
subgroup on the left and a block-diagonal subgroup on the right.  This
package provides the numerical machinery around that correspondence:
spectral typing, canonical forms and coset representatives, stabilizer
subgroups, fingerprint screens, a certificate-producing optimizer, integer
partition bookkeeping, and the two-qubit Werner family as a worked
stratification.
"""

from .equivalence import (
    EquivalenceVerdict,
    Fingerprint,
    FingerprintMismatch,
    OptimizerConfig,
    TAG_EQUIVALENT,
    TAG_INCONCLUSIVE,
    TAG_INEQUIVALENT,
    certify_lu_equivalence,
    compare_fingerprints,
    directional_derivative,
    global_equivalent,
    lu_fingerprint,
    objective,
    objective_gradient,
    probe_state,
    probe_values,
    same_double_coset,
    spectral_remap,
)
from .errors import (
    DimensionMismatchError,
    InvalidDensityError,
    LucosetError,
    MatrixFileError,
    NotADistributionError,
    NotAPartitionError,
    NotHermitianError,
    NotSquareError,
    NotUnitaryError,
    OutOfRangeError,
    OutOfTriangleError,
    ValueCountMismatchError,
)
from .linalg import (
    HermitianEig,
    conjugate,
    expm_antihermitian,
    frobenius_distance,
    haar_unitary,
    haar_unitary_from_rng,
    hermitian_eig,
    is_hermitian,
    is_unitary,
    kron,
    kron_all,
    partial_trace,
    validate_density,
)
from .partitions import (
    enumerate_partitions,
    format_partition,
    orbit_dimension,
    parse_partition,
    partition_count,
)
from .spectral import (
    CanonicalForm,
    SpectralType,
    canonical_form,
    coset_representative,
    spectral_projectors,
    spectral_type,
)
from .werner import (
    StratumRecord,
    werner_scan,
    werner_spectrum,
    werner_state,
    werner_stratum,
)
from .young import (
    embed_additive,
    embed_multiplicative,
    random_stabilizer_element,
    stabilizer_contains,
    validate_local_structure,
    validate_partition,
)

__version__ = "0.1.0"
