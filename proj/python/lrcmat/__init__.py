"""Python interface to the lrc matroid library.

Structured results (covers, reports, statistics) are returned as dicts.
Matroids are ``Matroid`` objects; subsets are lists of element indices.
"""

import json

from . import _lrcmat
from ._lrcmat import (
    LrcError,
    Matroid,
    achieves_bound,
    code_min_distance,
    induce_matroid,
    old_lower_bound,
    oracle_d,
    oracle_locality,
    singleton_bound,
    validate_params,
)

__all__ = [
    "LrcError",
    "Matroid",
    "achieves_bound",
    "check_structure",
    "classify",
    "code_min_distance",
    "construction1",
    "construction1_violations",
    "has_locality",
    "induce_matroid",
    "load_matroid",
    "monte_carlo",
    "old_lower_bound",
    "oracle_d",
    "oracle_locality",
    "run_cli",
    "singleton_bound",
    "theorem11_construction",
    "theorem14_construction",
    "theorem14_lower_bound",
    "validate_params",
]


def _atom_result(text):
    doc = json.loads(text)
    matroid = Matroid.from_json(json.dumps({key: doc[key] for key in ("n", "repr", "data")}))
    return matroid, doc["atoms"], doc["k"]


def load_matroid(doc):
    """Builds a Matroid from a matroid document (dict or JSON text)."""
    return Matroid.from_json(doc if isinstance(doc, str) else json.dumps(doc))


def has_locality(m, r, delta):
    """The locality cover as a dict, or None when m has no (r, delta)-locality."""
    text = _lrcmat.has_locality(m, r, delta)
    return None if text is None else json.loads(text)


def check_structure(m, r, delta):
    return json.loads(_lrcmat.check_structure(m, r, delta))


def theorem14_lower_bound(n, k, r, delta):
    return json.loads(_lrcmat.theorem14_lower_bound(n, k, r, delta))


def classify(n, k, r, delta, witness=False):
    return json.loads(_lrcmat.classify(n, k, r, delta, witness))


def construction1(n, atoms, k):
    """Returns (matroid, atoms, k); `atoms` is a list of {"set", "rank"} dicts."""
    return _atom_result(_lrcmat.construction1(json.dumps({"n": n, "k": k, "atoms": atoms})))


def construction1_violations(n, atoms, k):
    return json.loads(_lrcmat.construction1_violations(json.dumps({"n": n, "k": k, "atoms": atoms})))


def theorem11_construction(n, k, r, delta):
    return _atom_result(_lrcmat.theorem11_construction(n, k, r, delta))


def theorem14_construction(n, k, r, delta):
    return _atom_result(_lrcmat.theorem14_construction(n, k, r, delta))


def monte_carlo(m, r, delta, p, trials, seed, threads=1):
    return json.loads(_lrcmat.monte_carlo(m, r, delta, p, trials, seed, threads))


def run_cli(args, stdin=""):
    """Runs the command-line tool in-process; returns (status, stdout, stderr)."""
    return _lrcmat.run_cli(list(args), stdin)
