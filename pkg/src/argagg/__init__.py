"""Abstract argumentation semantics and labeling aggregation."""

from .algebra import NotAdmissibleInput, compatible, down_admissible, leq_committed, up_complete
from .core import (
    IN,
    OUT,
    UNDEC,
    ArgumentationError,
    ArgumentationFramework,
    FrameworkMismatch,
    Label,
    Labeling,
    SizeLimitExceeded,
    enumerate_admissible,
    enumerate_complete,
    grounded,
    is_admissible,
    is_complete,
)
from .rules import (
    AggregationOutcome,
    Counts,
    IndividualRationalityError,
    InvalidThreshold,
    LabelingProfile,
    RuleUndefined,
    TieFailure,
    awpr,
    co,
    credulous_initial,
    plurality_preference_threshold,
    sceptical_initial,
    sco,
    so,
    supermajority,
    tally,
)

__version__ = "0.1.0"
