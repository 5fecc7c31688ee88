"""Backend selection for the canonical-labeling hot kernel.

Canonical codes are computed for every state visited by the
breadth-first campaigns, so the package ships a compiled (Cython)
implementation next to the pure-Python reference.  Both expose the same
``canon_code(n, edges)`` function and produce byte-identical codes; the
compiled one is picked automatically when the extension built.  Set the
environment variable ``BASILICA_PURE=1`` to force the pure kernel, for
example when benchmarking one against the other.
"""

import os

__all__ = ["canon_code", "BACKEND"]

BACKEND = "pure"

if os.environ.get("BASILICA_PURE"):
    from basilica._canon_py import canon_code
else:
    try:
        from basilica._canon import canon_code

        BACKEND = "compiled"
    except ImportError:
        from basilica._canon_py import canon_code
