"""Exact Frobenius-Schur indicator computations for semisimple Hopf algebras.

The heavy lifting lives in the C++ extension ``hopfind._core``; this package
re-exports it and adds a couple of JSON conveniences.
"""

import json as _json

try:
    from ._core import (  # type: ignore[attr-defined]
        FiniteGroup,
        HopfAlgebra,
        ScalarParseError,
        SpecError,
        builtin_census,
        cyc_eval,
        known_checks,
        run_check,
        verify_census,
    )
except ImportError:  # build-tree layout: _core.so sits next to the build dir
    import os
    import sys

    _core_dir = os.environ.get("HOPFIND_CORE_DIR")
    if _core_dir:
        sys.path.insert(0, _core_dir)
    from _core import (  # type: ignore[no-redef]
        FiniteGroup,
        HopfAlgebra,
        ScalarParseError,
        SpecError,
        builtin_census,
        cyc_eval,
        known_checks,
        run_check,
        verify_census,
    )

__all__ = [
    "FiniteGroup",
    "HopfAlgebra",
    "ScalarParseError",
    "SpecError",
    "builtin_census",
    "census",
    "cyc_eval",
    "known_checks",
    "run_check",
    "verify",
    "verify_census",
]


def census():
    """The bundled census as a python object."""
    return _json.loads(builtin_census())


def verify(check="all", jobs=1):
    """Run a named check suite over the bundled census; returns report rows."""
    return _json.loads(verify_census(check, jobs))
