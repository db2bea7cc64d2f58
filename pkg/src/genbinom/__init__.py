"""Exact arithmetic for generalized binomial coefficients of partitions,
and machine checks of the identities they satisfy."""

from .combinat import (
    binom_int,
    falling_factorial,
    rising_factorial,
    stirling_signed,
    stirling_unsigned,
)
from .identities import conj_P, gen_binom, gen_binom_oracle
from .partitions import (
    Partition,
    add_part,
    cells,
    enumerate_partitions,
    enumerate_with_length,
    multiplicity,
    zeta,
)
from .polyalg import MultiPoly, TruncatedSeries, UniPoly, series_exp

__version__ = "0.1.0"
