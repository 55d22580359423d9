"""
Cohomology of spaces of non-resultant systems of binary forms.

Closed formulas, a spectral sequence recomputation and an exact sampling
oracle for real systems of one or two forms.
"""

__version__ = "0.1.0"

from nonresultant.algebra import mdisc_new, profile_new
from nonresultant.client import HomologyClient
from nonresultant.exceptions import ResultantError, ValidationError
from nonresultant.models import (
    BinaryForm,
    DegreeProfile,
    FinAbGroup,
    GradedGroup,
    MDiscParams,
    PolySystem,
    RealCohomologyResult,
    SpectralPage,
)
from nonresultant.utils.constants import InvariantKind

__all__ = [
    "HomologyClient",
    "profile_new",
    "mdisc_new",
    "DegreeProfile",
    "MDiscParams",
    "FinAbGroup",
    "GradedGroup",
    "RealCohomologyResult",
    "SpectralPage",
    "BinaryForm",
    "PolySystem",
    "InvariantKind",
    "ResultantError",
    "ValidationError",
]
