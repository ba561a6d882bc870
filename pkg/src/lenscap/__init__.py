"""Minimum crosscap numbers of lens spaces via the distance-2 tree of even slopes."""
from .contfrac import ContFrac, UniModMatrix, apply_mobius, evaluate, mobius_of, std_expand
from .crosscap import BWTrace, NewTrace, crosscap, crosscap_bw, crosscap_new
from .d2tree import (
    PathResult,
    Territory,
    children,
    generation,
    is_edge,
    is_vertex,
    mother,
    slope_path,
    territory,
)
from .errors import DomainError
from .exactfrac import INF, ONE, ZERO, ExtRational, LensParams, distance, normalize_lens, reduce, size

__version__ = "0.1.0"

__all__ = [
    "BWTrace", "ContFrac", "DomainError", "ExtRational", "INF", "LensParams", "NewTrace", "ONE",
    "PathResult", "Territory", "UniModMatrix", "ZERO", "apply_mobius", "children", "crosscap",
    "crosscap_bw", "crosscap_new", "distance", "evaluate", "generation", "is_edge", "is_vertex",
    "mobius_of", "mother", "normalize_lens", "reduce", "size", "slope_path", "std_expand", "territory",
]
