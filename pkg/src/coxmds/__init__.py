"""Exact computation of Cox rings of Mori dream spaces.

The package models a finitely generated Cox ring as an embedded space with
toric ambient data (ray matrix, fan, defining relations) and provides the
ambient modifications — blow-ups via saturated Rees algebras, stretches,
compressions, contractions and cyclic covers — together with the exact
linear algebra and Groebner machinery they need.
"""

__version__ = "0.1.0"
