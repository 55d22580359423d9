"""Exact-arithmetic oracle for real non-resultant systems of one or two forms."""

from nonresultant.oracle.forms import (
    form_add,
    form_eval,
    form_mul,
    form_scale,
    in_resultant_variety,
    radius_power,
    sylvester_resultant,
)
from nonresultant.oracle.invariants import (
    census_witnesses,
    classify,
    invariant_kind_for,
    legal_values,
    parity_invariant,
    parity_witness,
    sign_invariant,
    sign_witness,
)
from nonresultant.oracle.roots import dehomogenize, real_root_count, sturm_root_count
from nonresultant.oracle.sampling import ComplementSampler, component_census, sample_complement
from nonresultant.oracle.winding import winding_index, witness_system

__all__ = [
    "ComplementSampler",
    "census_witnesses",
    "classify",
    "component_census",
    "dehomogenize",
    "form_add",
    "form_eval",
    "form_mul",
    "form_scale",
    "in_resultant_variety",
    "invariant_kind_for",
    "legal_values",
    "parity_invariant",
    "parity_witness",
    "radius_power",
    "real_root_count",
    "sample_complement",
    "sign_invariant",
    "sign_witness",
    "sturm_root_count",
    "sylvester_resultant",
    "winding_index",
    "witness_system",
]
