"""Exact checks for quantum symmetric pair points of classical type."""

import json
from fractions import Fraction

from . import _qsymclass
from ._qsymclass import QscError

__all__ = ["QscError", "verify", "point", "satake", "poisson", "sweep", "desk_cases"]


def _config(series, N, **kw):
    cfg = {"series": series, "N": N}
    cfg.update({k: v for k, v in kw.items() if v is not None})
    return json.dumps(cfg)


def verify(series, N, family="t2", m=1, sign=1, unit=0, params=None, checks=None, timings=False):
    """Full report for one case as a dict."""
    cfg = _config(series, N, family=family, m=m, sign=sign, unit=unit, params=params, checks=checks)
    return json.loads(_qsymclass.verify(cfg, timings))


def point(series, N, family="t2", m=1, sign=1, unit=0, params=None):
    """Parameters, A and its classical limit, as strings."""
    return json.loads(_qsymclass.point(_config(series, N, family=family, m=m, sign=sign, unit=unit, params=params)))


def satake(series, N, family="t2", m=1, sign=1, unit=0, params=None):
    """Satake data and the mixed stabilizer generators."""
    return json.loads(_qsymclass.satake(_config(series, N, family=family, m=m, sign=sign, unit=unit, params=params)))


def poisson(series, matrix):
    """Bivector at an explicit point; entries are numbers or scalar literals."""
    rows = [[x if isinstance(x, str) else str(Fraction(x)) for x in row] for row in matrix]
    return json.loads(_qsymclass.poisson(series, json.dumps(rows)))


def sweep(Nmax, series=(), threads=0):
    return json.loads(_qsymclass.sweep(Nmax, list(series), threads))


def desk_cases():
    return list(_qsymclass.desk_cases())
