"""Exact analysis of Penney's game on words and group-action patterns.

Groups are given as spec strings such as ``"S:4"``, ``"Z:3"``, ``"T:2"``.
Exact values come back as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import PenneyError

__all__ = [
    "PenneyError",
    "orbit",
    "canonical",
    "patterns",
    "correlation",
    "cln",
    "wait_time",
    "odds",
    "best_beater",
    "beater_graph",
    "generating_functions",
    "series",
    "brute_counts",
    "simulate_game",
    "simulate_wait",
    "signature",
    "min_cln",
]

orbit = _core.orbit
canonical = _core.canonical
patterns = _core.patterns
correlation = _core.correlation
brute_counts = _core.brute_counts
simulate_game = _core.simulate_game
simulate_wait = _core.simulate_wait
signature = _core.signature


def _fractions(values):
    return [Fraction(v) for v in values]


def _rational_function(d):
    return {"num": _fractions(d["num"]), "den": _fractions(d["den"])}


def cln(group, p1, p2=None, alphabet=""):
    return Fraction(_core.cln(group, p1, p1 if p2 is None else p2, alphabet))


def wait_time(group, pattern, alphabet=""):
    return Fraction(_core.wait_time(group, pattern, alphabet))


def odds(group, p1, p2, verify=True, alphabet=""):
    r = _core.odds(group, p1, p2, verify, alphabet)
    for key in ("alice_win_probability", "bob_odds", "expected_length", "wait1", "wait2"):
        r[key] = Fraction(r[key])
    return r


def best_beater(group, pattern, alphabet=""):
    r = _core.best_beater(group, pattern, alphabet)
    if r is not None:
        r["bob_odds"] = Fraction(r["bob_odds"])
    return r


def beater_graph(group, length, threads=0, alphabet=""):
    g = _core.beater_graph(group, length, threads, alphabet)
    g["edges"] = [(a, b, Fraction(o)) for a, b, o in g["edges"]]
    if g["cycle"] is not None:
        g["cycle_odds"] = _fractions(g["cycle_odds"])
    return g


def generating_functions(group, patterns, alphabet=""):
    """Avoiding and first-occurrence functions as coefficient lists, lowest degree first."""
    r = _core.generating_functions(group, list(patterns), alphabet)
    return {
        "avoiding": _rational_function(r["avoiding"]),
        "first": [_rational_function(f) for f in r["first"]],
    }


def series(group, patterns, n, alphabet=""):
    r = _core.series(group, list(patterns), n, alphabet)
    return {"avoiding": _fractions(r["avoiding"]), "first": [_fractions(f) for f in r["first"]]}


def min_cln(group, length, alphabet=""):
    value, witnesses = _core.min_cln(group, length, alphabet)
    return Fraction(value), witnesses
