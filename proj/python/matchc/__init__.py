"""Thin Python surface over the exact-arithmetic matching-complex engine."""

from ._core import (
    betti,
    dim_gl,
    dim_sn,
    dump_faces,
    equivariant,
    koszul_dim,
    partitions,
)

__all__ = [
    "betti",
    "dim_gl",
    "dim_sn",
    "dump_faces",
    "equivariant",
    "koszul_dim",
    "partitions",
]
