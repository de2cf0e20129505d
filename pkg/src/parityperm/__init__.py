"""Parity-restricted permutation families, Genocchi numbers and the regions of K_2n."""

from .errors import (
    BruteForceBoundExceeded,
    NotRealizable,
    Overflow,
    ParityPermError,
)
from .families import FamilyId, count, enumerate_family, is_member, refined_count_first_letter
from .sequences import genocchi, median_genocchi, seidel
from .arrangement import Region, enumerate_regions, parse_region, region_of, resolve_region
from .labelings import label, label_all

__version__ = "0.1.0"

__all__ = [
    "BruteForceBoundExceeded",
    "FamilyId",
    "NotRealizable",
    "Overflow",
    "ParityPermError",
    "Region",
    "count",
    "enumerate_family",
    "enumerate_regions",
    "genocchi",
    "is_member",
    "label",
    "label_all",
    "median_genocchi",
    "parse_region",
    "refined_count_first_letter",
    "region_of",
    "resolve_region",
    "seidel",
]
