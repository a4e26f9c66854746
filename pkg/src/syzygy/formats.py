"""Line-oriented text formats for algebras and modules.

Algebra file::

    field 2
    vertices 4
    arrow a1 1 2
    relation a2 a1        # right-to-left: a1 first, then a2

Module file::

    module over lambda.alg     # a path (relative to this file) or a built-in name
    dim 1 1
    dim 2 1
    map a1
    1

A ``map`` block has one row per basis vector at the arrow's target and one
entry per basis vector at its source.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from .path_algebra import MonomialAlgebra, Quiver
from .rep import Rep


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield no, words


def _int(word: str, no: int, what: str) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer for {what}, got {word!r}", no) from None


def parse_algebra(text: str, source: str | None = None) -> MonomialAlgebra:
    p, n = 2, None
    arrows: list[tuple[str, int, int]] = []
    relations: list[tuple[int, list[str]]] = []
    for no, words in _lines(text):
        key, rest = words[0], words[1:]
        try:
            if key == "field":
                if len(rest) not in (1, 2):
                    raise ParseError("usage: field p [e]", no)
                p = _int(rest[0], no, "p")
                if len(rest) == 2 and _int(rest[1], no, "e") != 1:
                    raise ParseError("only prime fields are supported for algebras (e = 1)", no)
            elif key == "vertices":
                if len(rest) != 1:
                    raise ParseError("usage: vertices n", no)
                n = _int(rest[0], no, "n")
            elif key == "arrow":
                if len(rest) != 3:
                    raise ParseError("usage: arrow name source target", no)
                arrows.append((rest[0], _int(rest[1], no, "source"), _int(rest[2], no, "target")))
            elif key == "relation":
                if len(rest) < 2:
                    raise ParseError("a relation needs at least two arrows", no)
                relations.append((no, rest))
            else:
                raise ParseError(f"unknown keyword {key!r}", no)
        except ParseError as e:
            raise ParseError(str(e).strip(), None, source) from None
    if n is None:
        raise ParseError("missing 'vertices' line", None, source)
    try:
        q = Quiver(n, arrows)
    except ValueError as e:
        raise ParseError(str(e), None, source) from None
    rels = []
    for no, names in relations:
        try:
            rels.append([q.arrow_index(a) for a in names])
        except ValueError as e:
            raise ParseError(str(e), no, source) from None
    try:
        return MonomialAlgebra(q, rels, p)
    except ValueError as e:
        raise ParseError(str(e), None, source) from None


def format_algebra(alg: MonomialAlgebra) -> str:
    out = [f"field {alg.p}", f"vertices {alg.n}"]
    out += [f"arrow {a.name} {a.source} {a.target}" for a in alg.arrows]
    for r in alg.relations:
        out.append("relation " + " ".join(alg.arrows[i].name for i in r.arrows))
    return "\n".join(out) + "\n"


def resolve_algebra(ref: str, base_dir: str | None = None, p: int | None = None) -> MonomialAlgebra:
    """A built-in corpus name or a path to an algebra file."""
    from .corpus import builtin

    path = ref if base_dir is None or os.path.isabs(ref) else os.path.join(base_dir, ref)
    if os.path.exists(path):
        with open(path) as fh:
            return parse_algebra(fh.read(), path)
    try:
        return builtin(ref, p or 2).algebra
    except ValueError:
        raise ParseError(f"{ref!r} is neither a file nor a built-in algebra") from None


def parse_module(text: str, source: str | None = None, base_dir: str | None = None,
                 algebra: MonomialAlgebra | None = None) -> Rep:
    dims: dict[int, int] = {}
    blocks: dict[str, list[list[int]]] = {}
    current: str | None = None
    over = None
    for no, words in _lines(text):
        key = words[0]
        if key == "module":
            if len(words) != 3 or words[1] != "over":
                raise ParseError("usage: module over <algebra>", no, source)
            over = words[2]
            current = None
        elif key == "dim":
            if len(words) != 3:
                raise ParseError("usage: dim vertex d", no, source)
            dims[_int(words[1], no, "vertex")] = _int(words[2], no, "dimension")
            current = None
        elif key == "map":
            if len(words) != 2:
                raise ParseError("usage: map <arrow>", no, source)
            current = words[1]
            if current in blocks:
                raise ParseError(f"arrow {current} given twice", no, source)
            blocks[current] = []
        else:
            if current is None:
                raise ParseError(f"unexpected line starting with {key!r}", no, source)
            blocks[current].append([_int(w, no, "matrix entry") for w in words])
    if algebra is None:
        if over is None:
            raise ParseError("missing 'module over' line", None, source)
        algebra = resolve_algebra(over, base_dir)
    for v in dims:
        if not 1 <= v <= algebra.n:
            raise ParseError(f"vertex {v} out of range", None, source)
    dv = [dims.get(v, 0) for v in algebra.vertices]
    action = []
    for i, a in enumerate(algebra.arrows):
        present = a.name in blocks
        rows = blocks.pop(a.name, [])
        shape = (dv[a.target - 1], dv[a.source - 1])
        if shape[0] * shape[1] == 0:
            if any(rows):
                raise ParseError(f"map {a.name} should be empty", None, source)
            action.append(np.zeros(shape, dtype=np.int64))
            continue
        if not present:
            action.append(np.zeros(shape, dtype=np.int64))
            continue
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise ParseError(f"map {a.name} must be {shape[0]}x{shape[1]}", None, source)
        action.append(np.array(rows, dtype=np.int64) % algebra.p)
    if blocks:
        raise ParseError(f"unknown arrow(s): {', '.join(blocks)}", None, source)
    try:
        return Rep(algebra, dv, action)
    except ValueError as e:
        raise ParseError(str(e), None, source) from None


def format_module(M: Rep, over: str) -> str:
    out = [f"module over {over}"]
    out += [f"dim {v} {M.dim_at(v)}" for v in M.algebra.vertices if M.dim_at(v)]
    for a, m in zip(M.algebra.arrows, M.action):
        if m.size == 0:
            continue
        out.append(f"map {a.name}")
        out += [" ".join(str(int(x)) for x in row) for row in m]
    return "\n".join(out) + "\n"


def load_module(path: str) -> Rep:
    with open(path) as fh:
        return parse_module(fh.read(), path, os.path.dirname(os.path.abspath(path)))


def load_algebra(path: str) -> MonomialAlgebra:
    with open(path) as fh:
        return parse_algebra(fh.read(), path)
