"""Constants and enumerations for the nonresultant package."""

from enum import Enum, IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the ``nrt`` command line tool."""

    OK = 0
    BATCH_FAILURE = 1
    USAGE = 2
    VERIFICATION_MISMATCH = 3


class InvariantKind(str, Enum):
    """Component-separating invariants used by the sampling census."""

    WINDING = "winding"
    PARITY = "parity"
    SIGN = "sign"


class PageKind(str, Enum):
    """Which spectral sequence a page belongs to."""

    REAL = "real"
    COMPLEX = "complex"
    MDISC = "mdisc"


class EntryOrigin(str, Enum):
    """Provenance labels for spectral page entries."""

    EVEN_COLUMN = "even-column"
    ODD_COLUMN = "odd-column"
    LAST_COLUMN = "last-column"
    COMPLEX_CONFIG = "complex-config"
    SURVIVOR = "survivor"


class CascadeRule(str, Enum):
    """Differential rules applied by the real cascade."""

    # Z -> Z/2 on the row q = d1 - 1, leaf 1
    EPIMORPHISM = "d1-epimorphism"
    # Z -> Z from row d1 - 1 to row d1, leaf 2
    ISOMORPHISM = "d2-isomorphism"
    # Z at (d2 + 2, d1 - 1) -> Z/2 along the diagonal p + q = d1 + d2, leaves r >= 1
    DIAGONAL_EPIMORPHISM = "diagonal-epimorphism"


class CoefficientField(str, Enum):
    """Coefficient ring of a reported cohomology."""

    INTEGERS = "Z"
    RATIONALS = "Q"


# Sampling defaults
DEFAULT_SAMPLES = 2000
DEFAULT_BOUND = 12
DEFAULT_SEED = 42
DEFAULT_WORKERS = 4

# Environment variable overriding the default seed
SEED_ENV_VAR = "NRT_SEED"

# Version of the JSON documents emitted by the CLI
SCHEMA_VERSION = 1

# Marker returned instead of a component count when the complement is empty
EMPTY = "empty"

# Rank of the Borel-Moore homology H_i(B(CP^1, p); sign local system) over Q,
# keyed by configuration size p, then by dimension i. Every other group vanishes.
SIGN_LOCAL_SYSTEM_HOMOLOGY = {
    1: {0: 1, 2: 1},
    2: {2: 1},
}

# A sampler gives up after this many draws per requested sample
MAX_DRAWS_PER_SAMPLE = 50
