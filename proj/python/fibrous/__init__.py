"""Fibrous preorders, finite topologies and neighbourhood oracles.

Structures are plain dicts in the same JSON layout the command line tool reads
and writes.
"""

import json

try:
    from . import _fibrous as _ext
except ImportError:  # running against a build tree
    import _fibrous as _ext

StructureError = _ext.StructureError


def _enc(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def check(doc, verbose=False):
    """F1-F3 report, F1-F6 when the document carries s and m."""
    return json.loads(_ext.check(_enc(doc), verbose))


def from_top(topology):
    return json.loads(_ext.from_top(_enc(topology)))


def to_top(doc, algorithm="union-closure", brute_limit=20):
    return json.loads(_ext.to_top(_enc(doc), algorithm, brute_limit))


def equivalence(x, y):
    """{"phi", "gamma"} or None."""
    return json.loads(_ext.equivalence(_enc(x), _enc(y)))


def umap(x):
    """{"u", "R0"} or None."""
    return json.loads(_ext.umap(_enc(x)))


def roundtrip_fg(topology):
    return json.loads(_ext.roundtrip_fg(_enc(topology)))


def roundtrip_gf(doc):
    return json.loads(_ext.roundtrip_gf(_enc(doc)))


def topologies(n):
    return json.loads(_ext.topologies(n))


def sample(instance, samples=10000, seed=0, verbose=False):
    return json.loads(_ext.sample(instance, samples, seed, verbose))


def modulus(case, samples=10000, seed=0):
    return json.loads(_ext.modulus(case, samples, seed))


def standard_instances():
    return list(_ext.standard_instances())


def run_cli(args, stdin=""):
    """(exit status, stdout, stderr) of one command line invocation."""
    return _ext.run_cli([str(a) for a in args], stdin)


__all__ = [
    "StructureError",
    "check",
    "equivalence",
    "from_top",
    "modulus",
    "roundtrip_fg",
    "roundtrip_gf",
    "run_cli",
    "sample",
    "standard_instances",
    "to_top",
    "topologies",
    "umap",
]
