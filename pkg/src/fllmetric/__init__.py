"""Fixed Length Levenshtein (FLL) metric: distances, balls, extremes, anticodes and codes."""

from types import ModuleType as _ModuleType

from .anticodes import (
    AnticodeSet,
    FLLGraph,
    enumerate_maximal_anticodes,
    fll_graph,
    is_anticode,
    is_maximal_anticode,
    max_min_maximal_anticode_sizes,
    maximal_cliques,
    weight_le_one_anticode,
)
from .average import ExpectationReport, exact_average_oracle, expectation_report
from .balls import BallResult, fll_ball, fll_ball1_size_closed_form, hamming_ball, hamming_ball_size
from .codes import (
    Codebook,
    is_del_ins_correcting,
    is_t_deletion_correcting,
    is_t_insertion_correcting,
    min_fll_distance,
)
from .errors import (
    AlphabetError,
    CapacityError,
    DomainError,
    FLLError,
    LengthError,
    ParseError,
    RangeError,
    SingletonError,
    UsageError,
)
from .extremal import (
    balanced_ball_size,
    balanced_words,
    crossover_predicate,
    is_alpha_balanced,
    max_ball_size_binary,
    max_ball_size_nonbinary,
    min_ball_size,
    t_selector,
)
from .lcs import DistanceResult, compare, fll_distance, llcs
from .report import Check, VerificationReport, emit_report, parse_report
from .spheres import SphereSpec, WordSet, del_ins_sphere, deletion_sphere, insertion_sphere
from .suites import SUITES, run_suite
from .words import SegmentProfile, Word, alternating_segments, parse_word, runs

__version__ = "0.1.0"

__all__ = sorted(
    name for name, value in globals().items()
    if not name.startswith("_") and not isinstance(value, _ModuleType)
)
