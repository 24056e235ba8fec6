"""Pick the compiled kernels when built, else the pure-Python ones.

Set ``QUASICOUNT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("QUASICOUNT_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import count_tau2, pair_orbit_count, roots_x2_plus_2x, triple_orbits, triples

    BACKEND = "python"
else:
    try:
        from ._ckernels import count_tau2, pair_orbit_count, roots_x2_plus_2x, triple_orbits, triples

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import count_tau2, pair_orbit_count, roots_x2_plus_2x, triple_orbits, triples

        BACKEND = "python"

__all__ = ["BACKEND", "count_tau2", "pair_orbit_count", "roots_x2_plus_2x", "triple_orbits", "triples"]
