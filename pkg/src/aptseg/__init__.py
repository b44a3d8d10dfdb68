"""Model-free multivariate time-series segmentation by a-posteriori optimal trading."""
from .consensus import ConsensusTrace, align_signs, consensus, crossings
from .core import (
    AptsConfig,
    MultiSeries,
    Segmentation,
    SegmentationError,
    SwitchSignal,
    validate_series,
)
from .generators import gen_example1, gen_example2, gen_noisy_replicas
from .merge import merge
from .normalize import normalize_channel, plateau_filter, plateau_reinsert
from .pipeline import AptsResult, apts, reverse_index_map
from .trading import channel_search, epsilon_schedule, terminate, trade

__all__ = [
    "AptsConfig", "AptsResult", "ConsensusTrace", "MultiSeries", "Segmentation",
    "SegmentationError", "SwitchSignal", "align_signs", "apts", "channel_search",
    "consensus", "crossings", "epsilon_schedule", "gen_example1", "gen_example2",
    "gen_noisy_replicas", "merge", "normalize_channel", "plateau_filter",
    "plateau_reinsert", "reverse_index_map", "terminate", "trade", "validate_series",
]
