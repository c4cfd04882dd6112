"""punclab: exact desk-scale laboratory for list-decodability of punctured codes.

Subpackages by topic: gf (finite fields), codes (generic codes and
puncturing), rs (Reed-Solomon construction), listdec (exact decodability
deciders), badtuples (bad-tuple counting machinery), bounds (parameter
validators), harness (Monte-Carlo experiments), kernels (compiled /
pure-Python backend selection).
"""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
