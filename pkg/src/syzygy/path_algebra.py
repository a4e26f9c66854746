"""Bound quiver algebras kQ/I with I generated by paths.

Paths are written right-to-left, as products: the path ``a2 a1`` applies
``a1`` first and ``a2`` second, so a relation ``a2 a1`` kills "a1 then a2".
Vertices are numbered ``1..n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .fields import is_prime

OP_SUFFIX = "^op"


class NotFiniteDimensional(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


class Quiver:
    def __init__(self, n: int, arrows: Sequence[tuple[str, int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.arrows = tuple(Arrow(str(a), int(s), int(t)) for a, s, t in arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"arrow names must be unique: {names}")
        for a in self.arrows:
            if not (1 <= a.source <= n and 1 <= a.target <= n):
                raise ValueError(f"arrow {a.name} has an endpoint outside 1..{n}")
        self._index = {a.name: i for i, a in enumerate(self.arrows)}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown arrow {name!r}") from None

    def arrows_out(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def arrows_in(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def opposite(self) -> "Quiver":
        return Quiver(self.n, [(_op_name(a.name), a.target, a.source) for a in self.arrows])

    def _key(self):
        return (self.n, self.arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.n}; {arrows})"


def _op_name(name: str) -> str:
    return name[: -len(OP_SUFFIX)] if name.endswith(OP_SUFFIX) else name + OP_SUFFIX


class Path(NamedTuple):
    """A path from ``start`` to ``end``; ``arrows`` in written (right-to-left) order."""

    start: int
    end: int
    arrows: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def reversed(self) -> "Path":
        """The same path read in the opposite algebra."""
        return Path(self.end, self.start, tuple(reversed(self.arrows)))


def trivial(v: int) -> Path:
    return Path(v, v, ())


def make_path(q: Quiver, arrows: Sequence[int]) -> Path:
    """Build a path from arrow indices written right-to-left."""
    arrows = tuple(arrows)
    if not arrows:
        raise ValueError("use trivial(v) for paths of length zero")
    for later, earlier in zip(arrows, arrows[1:]):
        if q.arrows[earlier].target != q.arrows[later].source:
            raise ValueError(
                f"arrows {q.arrows[later].name} {q.arrows[earlier].name} do not compose")
    return Path(q.arrows[arrows[-1]].source, q.arrows[arrows[0]].target, arrows)


def _contains(path: tuple[int, ...], rel: tuple[int, ...]) -> bool:
    k = len(rel)
    return any(path[i:i + k] == rel for i in range(len(path) - k + 1))


def enumerate_basis(q: Quiver, relations: Sequence[Path], cap: int = 10_000) -> list[Path]:
    """All paths avoiding every relation as a contiguous subpath.

    Raises NotFiniteDimensional once more than ``cap`` paths are found.
    """
    rels = [r.arrows for r in relations]
    basis = [trivial(v) for v in q.vertices]
    frontier = deque(basis)
    while frontier:
        p = frontier.popleft()
        for i in q.arrows_out(p.end):
            arrows = (i,) + p.arrows
            # only suffixes ending at the new arrow can be new violations
            if any(len(r) <= len(arrows) and arrows[:len(r)] == r for r in rels):
                continue
            new = Path(p.start, q.arrows[i].target, arrows)
            basis.append(new)
            if len(basis) > cap:
                raise NotFiniteDimensional(
                    f"more than {cap} basis paths; the algebra looks infinite-dimensional")
            frontier.append(new)
    return basis


def _sort_key(p: Path):
    return (p.length, p.arrows, p.start)


class MonomialAlgebra:
    """kQ/I over F_p with I generated by the given paths.

    ``basis`` lists the surviving paths; ``opposite()`` is cached so that
    ``A.opposite().opposite() is A``.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Sequence[int] | Path] = (),
                 p: int = 2, cap: int = 10_000):
        if not is_prime(p):
            raise ValueError(f"ground field characteristic must be prime, got {p}")
        self.quiver = quiver
        self.p = p
        rels = []
        for r in relations:
            path = r if isinstance(r, Path) else make_path(quiver, r)
            if path.length < 2:
                raise ValueError("relations must have length at least 2")
            rels.append(path)
        self.relations = tuple(sorted(set(rels), key=_sort_key))
        self.basis = sorted(enumerate_basis(quiver, self.relations, cap), key=_sort_key)
        self._index = {b: i for i, b in enumerate(self.basis)}
        self._between: dict[tuple[int, int], list[Path]] = {}
        for b in self.basis:
            self._between.setdefault((b.start, b.end), []).append(b)
        self._op: MonomialAlgebra | None = None

    @property
    def vertices(self) -> range:
        return self.quiver.vertices

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def paths(self, start: int, end: int) -> list[Path]:
        """Basis paths from ``start`` to ``end``; the trivial path comes first."""
        return self._between.get((start, end), [])

    def in_basis(self, path: Path) -> bool:
        return path in self._index

    def is_zero(self, arrows: tuple[int, ...]) -> bool:
        return any(_contains(arrows, r.arrows) for r in self.relations)

    def compose(self, p: Path, q: Path) -> Path | None:
        """``p * q`` (q first); None if not composable or killed by a relation."""
        if q.end != p.start:
            return None
        arrows = p.arrows + q.arrows
        if not arrows:
            return p
        path = Path(q.start, p.end, arrows)
        return path if path in self._index else None

    def minimal_relations(self) -> list[Path]:
        """Relations with no other relation as a proper contiguous subpath."""
        out = []
        for r in self.relations:
            if not any(s != r and _contains(r.arrows, s.arrows) for s in self.relations):
                out.append(r)
        return out

    def opposite(self) -> "MonomialAlgebra":
        if self._op is None:
            op = MonomialAlgebra(self.quiver.opposite(), [r.reversed() for r in self.relations],
                                 self.p)
            op._op = self
            self._op = op
        return self._op

    @property
    def op(self) -> "MonomialAlgebra":
        return self.opposite()

    def path_name(self, path: Path) -> str:
        if not path.arrows:
            return f"e{path.start}"
        return "".join(self.arrows[i].name for i in path.arrows)

    def _key(self):
        return (self.quiver, self.relations, self.p)

    def __eq__(self, other):
        return isinstance(other, MonomialAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        rels = ", ".join(
            " ".join(self.arrows[i].name for i in r.arrows) for r in self.relations)
        return f"MonomialAlgebra({self.quiver!r}; relations [{rels}]; F_{self.p}; dim {self.dim})"


def from_names(n: int, arrows: Sequence[tuple[str, int, int]],
               relations: Sequence[Sequence[str]] = (), p: int = 2) -> MonomialAlgebra:
    """Convenience constructor with relations given by arrow names, right-to-left."""
    q = Quiver(n, arrows)
    rels = [[q.arrow_index(a) for a in r] for r in relations]
    return MonomialAlgebra(q, rels, p)
