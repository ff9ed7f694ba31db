"""LWE over the dihedral quotient ring.

Python face of the C++ core: parameter presets, non-commutative ring
arithmetic (NTT-accelerated), spectral analysis, error sampling, the
public-key scheme and the exact lattice checks.
"""

try:
    from ._grlwe import *  # noqa: F401,F403  (installed wheel layout)
    from ._grlwe import __version__  # noqa: F401
except ImportError:  # in-tree build: module sits on sys.path next to the package
    from _grlwe import *  # noqa: F401,F403
    from _grlwe import __version__  # noqa: F401
