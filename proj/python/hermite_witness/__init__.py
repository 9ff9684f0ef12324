"""Exact verification of the algebraic constructions behind a
characteristic-2 counterexample to the Hermite ring conjecture.

The heavy lifting happens in the `_core` extension module; this package
re-exports its surface:

    >>> import hermite_witness as hv
    >>> hv.normal_form("R", "f2-rational", "a^2")
    'x*y'
    >>> all(c["status"] == "pass" for c in hv.run("lemma-4.1-words"))
    True
"""

try:
    from ._core import (
        VerifyError,
        certificate_length,
        check_ids,
        distinctness,
        is_square,
        normal_form,
        report_json,
        run,
        __version__,
    )
except ImportError:  # running against a build tree without installation
    from _core import (
        VerifyError,
        certificate_length,
        check_ids,
        distinctness,
        is_square,
        normal_form,
        report_json,
        run,
        __version__,
    )

__all__ = [
    "VerifyError",
    "certificate_length",
    "check_ids",
    "distinctness",
    "is_square",
    "normal_form",
    "report_json",
    "run",
    "__version__",
]
