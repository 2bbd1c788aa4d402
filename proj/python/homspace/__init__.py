"""Geometry of homogeneous spaces with rotation-type signatures."""

from ._core import (
    GeometryError,
    Signature,
    canonical_point,
    connectable,
    decompose,
    dual_transform,
    gtrig,
    inverse,
    is_motion,
    lineal_signature,
    main_rotation,
    measure_between,
    meta_product,
    normalize,
    operations,
    product_i,
    request,
    right_triangle_area,
    rotation,
    set_tolerance,
    solve_triangle,
    tiling_orbit,
    tolerance,
    vector_index,
)

__all__ = [
    "GeometryError",
    "Signature",
    "canonical_point",
    "connectable",
    "decompose",
    "dual_transform",
    "gtrig",
    "inverse",
    "is_motion",
    "lineal_signature",
    "main_rotation",
    "measure_between",
    "meta_product",
    "normalize",
    "operations",
    "product_i",
    "request",
    "right_triangle_area",
    "rotation",
    "set_tolerance",
    "solve_triangle",
    "tiling_orbit",
    "tolerance",
    "vector_index",
]
