"""Construct, verify and search totally antimagic total (TAT) labelings."""

__version__ = "0.1.0"

from .chain import chain_compose, chain_paths
from .errors import FormatError, IncompleteLabelingError, InvalidParameterError, NotFoundError, TatError
from .graph import (
    Graph,
    VertexId,
    build_cycle,
    build_ladder,
    build_path,
    build_petersen,
    build_prism,
    degree,
    parse_edge_list,
)
from .labeling import TotalLabeling, WeightProfile, edge_weight, vertex_weight, weight_profile
from .schemes import SchemeResult, ladder_labeling, petersen_labeling, prism_labeling
from .search import SearchOptions, SearchOutcome, Status, find_tat
from .trees import conjecture_harness, enumerate_trees
from .verifier import VerificationReport, full_report
