"""fahp: fuzzy-AHP decision engine.

Triangular fuzzy pairwise judgments, Chang extent analysis, crisp
consistency checking, geometric-mean expert aggregation, hierarchical
global ranking, and the survey statistics used alongside them.
"""

from .aggregation import ExpertResponseSet, aggregate_matrices, geometric_mean
from .consistency import (
    PAPER_RI_TABLE,
    ConsistencyReport,
    check,
    check_crisp,
    colnorm_priority,
    consistency_ratio,
    crisp_matrix,
    lambda_max,
)
from .errors import FahpError, ParseError, ValidationError
from .extent import (
    ExtentResult,
    degree_of_possibility,
    extent_weights,
    extent_weights_from_row_sums,
    synthetic_extents,
)
from .hierarchy import (
    DecisionHierarchy,
    Node,
    RankedReport,
    evaluate,
    local_weights,
    rank_report,
)
from .matrix import JudgmentMatrix, ReciprocityWarning
from .project import ProjectFile, load_project, render_project
from .report import render_report
from .survey import (
    KendallResult,
    LikertTally,
    RankPanel,
    kendalls_w,
    likert_percentages,
)
from .tfn import TFN, LinguisticScale, default_scale, from_linguistic

__version__ = "0.1.0"

__all__ = [
    "TFN",
    "LinguisticScale",
    "default_scale",
    "from_linguistic",
    "JudgmentMatrix",
    "ReciprocityWarning",
    "ExtentResult",
    "synthetic_extents",
    "degree_of_possibility",
    "extent_weights",
    "extent_weights_from_row_sums",
    "ConsistencyReport",
    "crisp_matrix",
    "colnorm_priority",
    "lambda_max",
    "consistency_ratio",
    "check",
    "check_crisp",
    "PAPER_RI_TABLE",
    "ExpertResponseSet",
    "geometric_mean",
    "aggregate_matrices",
    "DecisionHierarchy",
    "Node",
    "RankedReport",
    "local_weights",
    "evaluate",
    "rank_report",
    "LikertTally",
    "likert_percentages",
    "RankPanel",
    "kendalls_w",
    "KendallResult",
    "ProjectFile",
    "load_project",
    "render_project",
    "render_report",
    "FahpError",
    "ValidationError",
    "ParseError",
]


def data_path(name: str):
    """Path to a bundled fixture file."""
    from importlib.resources import files

    return files("fahp.data").joinpath(name)
