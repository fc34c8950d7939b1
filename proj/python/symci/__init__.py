"""Graded characters of symmetric-group-stable complete intersections."""

import json

from . import _core
from ._core import ParseError, partitions, run_cli, schema_version

__all__ = [
    "ParseError",
    "character",
    "character_table",
    "classify",
    "kostka_foulkes_tilde",
    "oracle_character",
    "partitions",
    "regularity",
    "run_cli",
    "schema_version",
]


def _cli_json(args):
    code, out, err = run_cli(args + ["--json"])
    if code != 0:
        raise ValueError(err.strip().removeprefix("error: "))
    return json.loads(out)


def character_table(n):
    return _cli_json(["tables", "--n", str(n)])


def kostka_foulkes_tilde(lam, mu):
    """Coefficients keyed by exponent."""
    return {int(e): int(c) for e, c in json.loads(_core.kostka_foulkes_tilde_json(lam, mu)).items()}


def character(n, case, d=None, c=(), bound=10):
    args = ["character", "--n", str(n), "--case", case, "--bound", str(bound)]
    if d is not None:
        args += ["--d", str(d)]
    if c:
        args += ["--c", ",".join(map(str, c))]
    return _cli_json(args)


def classify(multiset):
    text = multiset if isinstance(multiset, str) else json.dumps(multiset)
    return json.loads(_core.classify_json(text))


def oracle_character(gens, bound):
    return json.loads(_core.oracle_json(gens, bound))


def regularity(gens):
    return json.loads(_core.regularity_json(gens))
