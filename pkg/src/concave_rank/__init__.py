"""Ranks of strongly concave compositions: exact counts and asymptotics."""

from .asymptotics import (
    LogScaled,
    empirical_rank_cdf,
    gaussian_ratio,
    normal_cdf,
    profile_F,
    theorem1_estimate,
    vd_leading,
)
from .concave import (
    RankTable,
    SCComposition,
    enumerate_scc,
    rank_table_oracle,
    v_concave,
    vd_andrews,
    vd_fast,
    vd_product,
    vdm_genfunc,
    vdm_prop1,
    vdm_region,
    vdm_telescoped,
)
from .number_theory import (
    PartitionCache,
    chi_minus3_at_odd,
    chi_minus12,
    kronecker,
    partition_count,
    partition_enumerate,
)
from .qseries import RankSeries, TruncatedSeries, jacobi_triple_check

__version__ = "0.1.0"
