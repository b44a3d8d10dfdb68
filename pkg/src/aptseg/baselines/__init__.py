from .bu import TooShort, affine_fit_sse, bu_segment
from .ggs import DEFAULT_LAMBDA, GgsModel, SingularModel, ggs_objective, ggs_segment
from .linalg import NotPositiveDefinite, cholesky, inverse_trace_spd, logdet_spd

__all__ = [
    "TooShort", "affine_fit_sse", "bu_segment",
    "DEFAULT_LAMBDA", "GgsModel", "SingularModel", "ggs_objective", "ggs_segment",
    "NotPositiveDefinite", "cholesky", "inverse_trace_spd", "logdet_spd",
]
