"""Exact dimension and basis of W(f) = {p : deg p <= deg f - 2, f | f''p - f'p'}."""

import json

from ._wfdim import WfdimError, kernel_basis, suite_names, table, verify
from . import _wfdim


def dim(spec):
    """Report for an input spec given as a dict or JSON text."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return json.loads(_wfdim.dim_report(text))


def zdim(eta, omega, k, d=1):
    """Z(eta, omega; s, k) report. eta/omega are lists or comma-separated strings."""
    join = lambda v: v if isinstance(v, str) else ",".join(str(x) for x in v)
    return json.loads(_wfdim.zdim_report(join(eta), join(omega), k, d))


__all__ = ["WfdimError", "dim", "zdim", "kernel_basis", "table", "verify", "suite_names"]
