"""tcslat: exact lattice arithmetic for twisted connected sum 7-manifolds.

Submodules: exactalg (integer linear algebra), lattice (lattices and
sublattices), glue (pushouts and overlattices), embed (embeddings into the
rank-22 ambient), blocks (the building-block catalog), tcs (7-manifold
invariants), match (certificates and census), g2alg (pointwise form algebra),
cli (command line).
"""

__version__ = "0.1.0"

__all__ = [
    "exactalg",
    "lattice",
    "glue",
    "embed",
    "blocks",
    "tcs",
    "match",
    "g2alg",
    "cli",
]
