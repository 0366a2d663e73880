"""Hot-loop backend, chosen once at import.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same functions takes over. ``BACKEND`` names the one in use.
"""

try:
    from ._ckernels import MAX_TALLY_D, colored_tally, lattice_count

    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import MAX_TALLY_D, colored_tally, lattice_count

    BACKEND = "python"

__all__ = ["BACKEND", "MAX_TALLY_D", "colored_tally", "lattice_count"]
