"""Certified alternating negative-momentum gradient descent-ascent.

Thin wrapper over the compiled core. ``verify_certificate`` replays the
exact-arithmetic proof of the convergence certificate; ``run`` integrates a
trajectory; ``fig1`` regenerates both trajectory pairs of the headline
comparison.
"""

import json

from ._core import check_cc_bound, fig1, run, verify_certificate_json

__all__ = ["verify_certificate", "check_cc_bound", "fig1", "run"]


def verify_certificate():
    """Run every verification stage and return the report as a dict."""
    return json.loads(verify_certificate_json())
