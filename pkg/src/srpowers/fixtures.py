"""Named example complexes and the input grammar of the command line.

The fixture names are part of the CLI contract.  ``five-cycle`` is the
5-cycle graph; ``example-4-10`` is the boundary of a tetrahedron with an
extra triangle glued along an edge (the square of its ideal separates
the symbolic from the ordinary power); ``example-5-4`` is the
three-4-sets complex on six vertices whose dual complex is a matroid
even though the complex is no union of 3-uniform matroids.
"""

from __future__ import annotations

import json
import os

from .complexes import (
    SimplicialComplex,
    complete_graph,
    complex_from_json,
    cycle,
    embed,
    from_facets,
    path,
    simplex,
    uniform_matroid,
)


def _five_cycle() -> SimplicialComplex:
    return cycle(5)


def _example_4_10() -> SimplicialComplex:
    return from_facets(5, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (3, 4, 5)])


def _example_5_4() -> SimplicialComplex:
    return from_facets(6, [(1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6)])


NAMED = {
    "five-cycle": _five_cycle,
    "example-4-10": _example_4_10,
    "example-5-4": _example_5_4,
}


def named_complex(name: str) -> SimplicialComplex:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown named complex {name!r}") from None


def _parametric(text: str) -> SimplicialComplex | None:
    head, _, rest = text.partition(":")
    if not rest:
        return None
    try:
        args = [int(x) for x in rest.split(":")]
    except ValueError:
        return None
    if head == "uniform" and len(args) == 2:
        return uniform_matroid(args[0], args[1])
    if head == "cycle" and len(args) == 1:
        return cycle(args[0])
    if head == "path" and len(args) == 1:
        return path(args[0])
    if head == "complete" and len(args) == 1:
        return complete_graph(args[0])
    if head == "simplex" and len(args) == 1:
        return simplex(args[0])
    return None


def parse_complex_spec(text: str) -> SimplicialComplex:
    """Named example, parametric family, join of parts, JSON literal,
    file path, or "-" for stdin JSON.

    ``join:A+B+...`` joins the parts after shifting each one onto fresh
    vertex labels, so ``join:complete:3+complete:3`` lives on 6 vertices.
    """
    text = text.strip()
    if text == "-":
        import sys

        return complex_from_json(json.load(sys.stdin))
    if text.startswith("{"):
        return complex_from_json(json.loads(text))
    if text.startswith("join:"):
        parts = [parse_complex_spec(p) for p in text[len("join:"):].split("+")]
        if not parts:
            raise ValueError("join needs at least one part")
        total = sum(p.n for p in parts)
        out = None
        offset = 0
        for p in parts:
            shifted = embed(p, total, offset)
            offset += p.n
            out = shifted if out is None else out.join(shifted)
        return out
    if text in NAMED:
        return named_complex(text)
    para = _parametric(text)
    if para is not None:
        return para
    if os.path.exists(text):
        with open(text) as fh:
            return complex_from_json(json.load(fh))
    raise ValueError(f"cannot interpret complex spec {text!r}")
