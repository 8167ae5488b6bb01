"""Runs, Lyndon roots and critical factorizations of finite words."""

from .critical import (
    LocalPeriodReport,
    check_square_lemma,
    critical_from_orderings,
    critical_positions,
    local_period,
    local_periods,
)
from .density import (
    DensityReport,
    count_lroots_in,
    count_nonunary_oroots_in,
    count_oroots_same_order_in,
    count_unary_oroots_in,
    lroot_context,
    max_lroot_density,
    witness_word,
)
from .errors import DomainError, InvariantViolation, UsageError
from .harness import SweepConfig, SweepReport, cross_validate, run_sweep
from .index import SuffixIndex, build
from .runs import (
    Assignment,
    RootKind,
    RootOccurrence,
    Run,
    assign_all,
    assign_position,
    enumerate_runs,
    enumerate_runs_naive,
    lroot,
    oroot,
)
from .words import (
    FORWARD,
    REVERSE,
    Cmp,
    Interval,
    Ordering,
    Word,
    compare,
    greatest_proper_suffix,
    is_lyndon,
    lyndon_factorization,
    smallest_period,
)

__version__ = "0.1.0"
