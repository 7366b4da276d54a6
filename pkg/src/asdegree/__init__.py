"""Bounded discrete power-law model of AS-level Internet topology."""
from .errors import (
    ConsistencyError,
    DomainError,
    InfeasibleError,
    NoBracketError,
    NoValidPairError,
    ParseError,
    UnidentifiableError,
)
from .powerlaw import BoundedPowerLaw, make_distribution, truncated_zeta
from .metrics import (
    RichPoint,
    SweepTable,
    degrees_at_top_fraction,
    newman_mean_degree,
    newman_rich_fraction,
    ratio_max_degree,
    ratio_min_degree,
    rich_curve,
    rich_fractions,
    sweep,
    xpp_min_ratio_reference,
)
from .ingest import (
    DegreeSequence,
    EdgeList,
    GraphSummary,
    clean,
    degree_histogram,
    degree_sequence,
    parse_edge_list,
    read_edge_list,
    summarize,
    write_edge_list,
)
from .fit import FitConfig, FitResult, fit, ks_statistic, log_likelihood, mle_lambda, select_cutoffs
from .synth import configuration_model, make_rng, sample_degrees
from .analysis import AnalysisConfig, analyze_edges, renormalize_low_degree_ratio

__version__ = "0.1.0"
