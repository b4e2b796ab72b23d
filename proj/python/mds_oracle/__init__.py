"""Python front end to the mds-oracle core.

Rationals may be given as int, str ("p/q") or fractions.Fraction. Reports come
back as plain dicts in the same layout as the CLI JSON output; rational values
stay "p/q" strings, use ``fraction`` to convert.
"""
import json
from fractions import Fraction

from . import _core

SCHEMA = _core.SCHEMA
ParseError = _core.ParseError
InvalidPolytope = _core.InvalidPolytope
NotSizeOne = _core.NotSizeOne


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _qs(xs):
    return [_q(x) for x in xs]


def fraction(s):
    return Fraction(s)


def check_2d(left, right, m_factor=1):
    return json.loads(_core.check_2d(_qs(left), _qs(right), m_factor))


def check_3d(left, right, m_factor=1, n1=False):
    return json.loads(_core.check_3d(_qs(left), _qs(right), m_factor, n1))


def check_tetra(t):
    return json.loads(_core.check_tetra(_qs(t)))


def check_wps(weights):
    return json.loads(_core.check_wps([int(w) for w in weights]))


def tetra_fan(t):
    return json.loads(_core.tetra_fan(_qs(t)))


def search(dim, bound, jobs=1):
    return json.loads(_core.search(dim, bound, jobs))


def closed_form_2d(A, B, beta, n):
    return Fraction(_core.closed_form_2d(A, B, beta, n))


def closed_form_3d(A, B, C, beta, gamma, n, d):
    return Fraction(_core.closed_form_3d(A, B, C, beta, gamma, n, d))


def run_campaign(samples_2d, samples_3d, seed=20240101):
    return json.loads(_core.run_campaign(samples_2d, samples_3d, seed))


def run_cli(*args):
    """Runs the command line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
