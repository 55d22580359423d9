"""Value types of the nonresultant package; JSON documents live in ``models.documents``."""

from nonresultant.models.base import BaseDocument, BaseModel
from nonresultant.models.forms import BinaryForm, PolySystem
from nonresultant.models.groups import FinAbGroup, GradedGroup
from nonresultant.models.page import CascadeReport, KilledEntry, SpectralPage
from nonresultant.models.profile import DegreeProfile, MDiscParams
from nonresultant.models.report import ComponentReport
from nonresultant.models.results import RealCohomologyResult

__all__ = [
    "BaseDocument",
    "BaseModel",
    "BinaryForm",
    "CascadeReport",
    "ComponentReport",
    "DegreeProfile",
    "FinAbGroup",
    "GradedGroup",
    "KilledEntry",
    "MDiscParams",
    "PolySystem",
    "RealCohomologyResult",
    "SpectralPage",
]
