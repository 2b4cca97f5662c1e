"""Exact coloring invariants of ribbon diagrams with perfect matchings."""

_NAMES = [
    "CapExceeded",
    "Diagram",
    "bigraded_homology",
    "catalog_diagram",
    "catalog_list",
    "edge_coloring_count",
    "filtered_homology",
    "n_color_number",
    "n_color_polynomial",
    "penrose_polynomial",
    "spectral_invariant",
    "total_face_color",
]

try:
    from rch import _rch as _ext
except ImportError:  # in-tree builds put the bare extension on sys.path
    import _rch as _ext

globals().update({name: getattr(_ext, name) for name in _NAMES})
__all__ = list(_NAMES)
