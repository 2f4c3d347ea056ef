from .enumeration import (
    SymmetryClass, enumerate_betas, grids_with_prefix, is_complement_canonical, prefixes,
    symmetry_classes,
)
from .coincidences import CoincidenceGroup, coincidences, group_partition, merge_partials
from .nki import (
    CensusRow, NkiRecord, default_i_max, divisor_census, family_rows, is_admissible, l_ki,
    n_ki, nki_record, nki_scan,
)
from .ratios import (
    IDENTITIES, IdentitySummary, RatioCheck, RatioIdentity, RatioIdentityReport,
    get_identity, ratio_identities,
)

__all__ = [
    "SymmetryClass", "enumerate_betas", "grids_with_prefix", "is_complement_canonical",
    "prefixes", "symmetry_classes", "CoincidenceGroup", "coincidences", "group_partition",
    "merge_partials", "CensusRow", "NkiRecord", "default_i_max", "divisor_census",
    "family_rows", "is_admissible", "l_ki", "n_ki", "nki_record", "nki_scan",
    "IDENTITIES", "IdentitySummary", "RatioCheck", "RatioIdentity", "RatioIdentityReport",
    "get_identity", "ratio_identities",
]
