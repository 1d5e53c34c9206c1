"""Seeds, quiver mutation, freezing and the Louise decomposition.

Indices are 0-based throughout: vertices ``0..n-1`` are mutable and
``n..n+m-1`` are frozen.  An edge ``i -> j`` of weight ``w`` corresponds to
the entry ``B[i][j] = w > 0`` of the extended exchange matrix.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence, Union

import networkx as nx

from .exceptions import (
    InvalidIndexError,
    MalformedMatrixError,
    NotIsolatedError,
    NotLouiseError,
)

Edge = tuple[int, int]


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


@dataclass(frozen=True)
class ExtendedExchangeMatrix:
    """An ``(n+m) x n`` integer matrix whose top ``n x n`` block is skew-symmetric."""

    n: int
    m: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, m = self.n, self.m
        if n < 0 or m < 0 or n + m < 1:
            raise MalformedMatrixError(f"need n, m >= 0 and n + m >= 1, got n={n}, m={m}")
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(rows) != n + m or any(len(row) != n for row in rows):
            raise MalformedMatrixError(
                f"expected {n + m} rows of length {n}, got shape "
                f"{len(rows)}x{[len(r) for r in rows]}"
            )
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise MalformedMatrixError(
                        f"principal part is not skew-symmetric at ({i}, {j}): "
                        f"{rows[i][j]} vs {rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None):
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows[0]) if rows else 0
        return cls(n, len(rows) - n, tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: Edge) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return self.n + self.m

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def rank(self) -> int:
        import sympy

        if self.n == 0:
            return 0
        return sympy.Matrix(self.entries).rank()

    def is_full_rank(self) -> bool:
        return self.rank() == self.n

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _check_mutable(B: ExtendedExchangeMatrix, k: int):
    if not isinstance(k, int) or not 0 <= k < B.n:
        raise InvalidIndexError(f"index {k!r} is not a mutable vertex (n={B.n})")


def mutate_matrix(B: ExtendedExchangeMatrix, k: int) -> ExtendedExchangeMatrix:
    """Matrix mutation in direction ``k``.

    Row and column ``k`` change sign; every other entry becomes
    ``B[i][j] + [B[i][k]]_+ [B[k][j]]_+ - [B[i][k]]_- [B[k][j]]_-``.
    """
    _check_mutable(B, k)
    e = B.entries
    new = []
    for i in range(B.size):
        row = []
        for j in range(B.n):
            if i == k or j == k:
                row.append(-e[i][j])
            else:
                row.append(
                    e[i][j]
                    + _pos(e[i][k]) * _pos(e[k][j])
                    - _neg(e[i][k]) * _neg(e[k][j])
                )
        new.append(tuple(row))
    return ExtendedExchangeMatrix(B.n, B.m, tuple(new))


def exchange_relation(B: ExtendedExchangeMatrix, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exponent vectors of the two monomials whose sum is ``x_k * x_k'``.

    Both vectors have length ``n + m`` and nonnegative entries.
    """
    _check_mutable(B, k)
    col = B.column(k)
    return tuple(_pos(b) for b in col), tuple(-_neg(b) for b in col)


@dataclass(frozen=True)
class Seed:
    """Extended exchange matrix together with variable labels."""

    matrix: ExtendedExchangeMatrix
    labels: tuple[str, ...] = ()
    history: tuple[int, ...] = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            labels = tuple(f"x{i + 1}" for i in range(self.n)) + tuple(
                f"y{j + 1}" for j in range(self.m)
            )
        if len(labels) != self.matrix.size:
            raise MalformedMatrixError(
                f"{len(labels)} labels given for {self.matrix.size} vertices"
            )
        if len(set(labels)) != len(labels):
            raise MalformedMatrixError(f"labels are not distinct: {labels}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "history", tuple(self.history))

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def size(self) -> int:
        return self.matrix.size

    @classmethod
    def from_matrix(cls, rows, n=None, labels=()):
        return cls(ExtendedExchangeMatrix.from_rows(rows, n), tuple(labels))

    @classmethod
    def from_edges(
        cls,
        mutable: Sequence[str],
        frozen: Sequence[str] = (),
        edges: Mapping[tuple[str, str], int] | None = None,
    ) -> "Seed":
        """Build a seed from a weighted quiver given by vertex labels.

        ``edges`` maps ``(source, target)`` to a positive weight.  Edges
        between two frozen vertices carry no information and are rejected.
        """
        labels = tuple(mutable) + tuple(frozen)
        n = len(mutable)
        pos = {lab: i for i, lab in enumerate(labels)}
        rows = [[0] * n for _ in labels]
        for (src, dst), w in (edges or {}).items():
            i, j = pos[src], pos[dst]
            if w <= 0:
                raise MalformedMatrixError(f"edge {src}->{dst} has non-positive weight {w}")
            if i == j:
                raise MalformedMatrixError(f"self-loop at {src}")
            if i >= n and j >= n:
                raise MalformedMatrixError(f"edge {src}->{dst} joins two frozen vertices")
            if j < n:
                rows[i][j] += w
            if i < n:
                rows[j][i] -= w
        return cls.from_matrix(rows, n, labels)

    def index(self, label: str | int) -> int:
        if isinstance(label, int):
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidIndexError(f"unknown vertex label {label!r}") from None

    def mutate(self, k: str | int) -> "Seed":
        k = self.index(k)
        return Seed(mutate_matrix(self.matrix, k), self.labels, self.history + (k,))

    def mutate_sequence(self, ks: Iterable[str | int]) -> "Seed":
        seed = self
        for k in ks:
            seed = seed.mutate(k)
        return seed

    def graph(self) -> "QuiverGraph":
        return QuiverGraph.from_seed(self)

    def exchange_relation(self, k: str | int):
        return exchange_relation(self.matrix, self.index(k))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "matrix": self.matrix.to_lists(), "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data: Union[str, Mapping]) -> "Seed":
        """Parse the quiver JSON format ``{"n", "m", "matrix", "labels"?}``."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedMatrixError(f"invalid JSON: {exc}") from None
        if not isinstance(data, Mapping):
            raise MalformedMatrixError("quiver JSON must be an object")
        try:
            n, m, rows = data["n"], data["m"], data["matrix"]
        except KeyError as exc:
            raise MalformedMatrixError(f"missing key {exc}") from None
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (n, m)):
            raise MalformedMatrixError("n and m must be integers")
        if not isinstance(rows, list) or not all(
            isinstance(r, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in r)
            for r in rows
        ):
            raise MalformedMatrixError("matrix must be a list of integer rows")
        B = ExtendedExchangeMatrix(n, m, tuple(tuple(r) for r in rows))
        return cls(B, tuple(data.get("labels") or ()))


def freeze(seed: Seed, S: Iterable[str | int]) -> Seed:
    """Regard the mutable vertices in ``S`` as frozen.

    The result keeps the surviving mutable vertices first (in their original
    order), followed by the newly frozen vertices and then the old frozen ones.
    """
    S = sorted({seed.index(s) for s in S})
    for s in S:
        if not 0 <= s < seed.n:
            raise InvalidIndexError(f"cannot freeze {seed.labels[s]!r}: not mutable")
    if not S:
        return seed
    keep = [i for i in range(seed.n) if i not in S]
    order = keep + S + list(range(seed.n, seed.size))
    e = seed.matrix.entries
    rows = tuple(tuple(e[i][j] for j in keep) for i in order)
    B = ExtendedExchangeMatrix(len(keep), seed.m + len(S), rows)
    return Seed(B, tuple(seed.labels[i] for i in order))


@dataclass(frozen=True)
class QuiverGraph:
    """Weighted directed graph of a seed; ``edges[(i, j)] = w`` for ``i -> j``."""

    labels: tuple[str, ...]
    n: int
    edges: Mapping[Edge, int] = field(default_factory=dict)

    @classmethod
    def from_seed(cls, seed: Seed) -> "QuiverGraph":
        e = seed.matrix.entries
        edges = {}
        for j in range(seed.n):
            for i in range(seed.size):
                if e[i][j] > 0:
                    edges[(i, j)] = e[i][j]
                elif e[i][j] < 0 and i >= seed.n:
                    edges[(j, i)] = -e[i][j]
        return cls(seed.labels, seed.n, dict(sorted(edges.items())))

    def is_mutable(self, v: int) -> bool:
        return v < self.n

    def mutable_edges(self) -> dict[Edge, int]:
        return {(i, j): w for (i, j), w in self.edges.items() if i < self.n and j < self.n}

    def mutable_digraph(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(range(self.n))
        for (i, j), w in self.mutable_edges().items():
            G.add_edge(i, j, weight=w)
        return G

    def describe(self) -> str:
        parts = [f"{self.labels[i]}->{self.labels[j]}({w})" for (i, j), w in self.edges.items()]
        return ", ".join(parts) or "(no edges)"


def separating_edges(graph: QuiverGraph | Seed) -> list[Edge]:
    """Mutable edges through which no bi-infinite directed path passes.

    In a finite graph a bi-infinite path through ``i -> j`` exists exactly
    when ``i`` is reachable from a directed cycle and ``j`` reaches one.
    """
    if isinstance(graph, Seed):
        graph = graph.graph()
    G = graph.mutable_digraph()
    on_cycle = set()
    for comp in nx.strongly_connected_components(G):
        if len(comp) > 1:
            on_cycle |= comp
    after_cycle = set(on_cycle)
    before_cycle = set(on_cycle)
    for v in on_cycle:
        after_cycle |= nx.descendants(G, v)
        before_cycle |= nx.ancestors(G, v)
    return sorted(
        (i, j) for (i, j) in G.edges if not (i in after_cycle and j in before_cycle)
    )


@dataclass(frozen=True)
class Leaf:
    seed: Seed

    def leaves(self):
        yield self


@dataclass(frozen=True)
class Split:
    """Cover ``A = A_{i} u A_{j}`` with ``A_{i} n A_{j} = A_{i,j}``."""

    seed: Seed
    edge: Edge
    first: "LouiseTree"
    second: "LouiseTree"
    both: "LouiseTree"

    @property
    def children(self):
        return self.first, self.second, self.both

    def leaves(self):
        for child in self.children:
            yield from child.leaves()


LouiseTree = Union[Leaf, Split]


def is_isolated(seed: Seed) -> bool:
    return not seed.graph().mutable_edges()


def louise_decompose(
    seed: Seed, choose: Callable[[list[Edge]], Edge] = min
) -> LouiseTree:
    """Recursively split along separating edges until every chart is isolated.

    ``choose`` picks one edge from the sorted list of separating edges; the
    default takes the lexicographically smallest.
    """
    if is_isolated(seed):
        return Leaf(seed)
    candidates = separating_edges(seed)
    if not candidates:
        raise NotLouiseError(
            f"no separating edge in {seed.graph().describe()}; mutate the seed first"
        )
    i, j = choose(candidates)
    return Split(
        seed,
        (i, j),
        louise_decompose(freeze(seed, [i]), choose),
        louise_decompose(freeze(seed, [j]), choose),
        louise_decompose(freeze(seed, [i, j]), choose),
    )


class FiniteType(enum.Enum):
    FINITE_LOUISE = "FiniteLouise"
    NOT_FINITE_TYPE = "NotFiniteType"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FiniteTypeResult:
    verdict: FiniteType
    seed: Seed

    @property
    def mutations(self) -> tuple[int, ...]:
        return self.seed.history


def cyclic_triangle(seed: Seed) -> tuple[int, int, int] | None:
    """Weights of the oriented 3-cycle on the mutable vertices, or ``None``.

    Weights are listed as ``(w(0->.), w(1->.), w(2->.))``: the weight of the
    edge leaving each vertex.
    """
    if seed.n != 3:
        return None
    edges = seed.graph().mutable_edges()
    if len(edges) != 3:
        return None
    out = {}
    for (i, j), w in edges.items():
        if i in out:
            return None
        out[i] = w
    return tuple(out[v] for v in range(3))


def _opposite_products(weights):
    # mutating at vertex v replaces the edge opposite v by p*r - q (flipped if > 0)
    w0, w1, w2 = weights
    return ((w2 * w0, w1), (w0 * w1, w2), (w1 * w2, w0))


def markov_criterion(weights: tuple[int, int, int]) -> bool:
    """True when every single mutation of the cycle is again an oriented cycle."""
    return all(pr > q for pr, q in _opposite_products(weights))


def finite_type_check(seed: Seed, max_steps: int = 10_000) -> FiniteTypeResult:
    """Decide finite type for a quiver on three mutable and no frozen vertices.

    Acyclic seeds are reported as ``FINITE_LOUISE`` at once.  An oriented
    cycle satisfying the criterion ``ab>c, bc>a, ca>b`` is ``NOT_FINITE_TYPE``;
    otherwise mutate at the vertex giving the smallest weight sum and repeat.
    """
    if seed.n != 3 or seed.m != 0:
        raise InvalidIndexError(
            f"finite_type_check needs 3 mutable and 0 frozen vertices, got n={seed.n}, m={seed.m}"
        )
    for _ in range(max_steps):
        weights = cyclic_triangle(seed)
        if weights is None:
            return FiniteTypeResult(FiniteType.FINITE_LOUISE, seed)
        if markov_criterion(weights):
            return FiniteTypeResult(FiniteType.NOT_FINITE_TYPE, seed)
        total = sum(weights)
        new_sums = [total - q + abs(pr - q) for pr, q in _opposite_products(weights)]
        seed = seed.mutate(min(range(3), key=lambda v: (new_sums[v], v)))
    raise RuntimeError("finite_type_check did not terminate")  # unreachable: weight sum decreases


@dataclass(frozen=True)
class ExchangeEquation:
    """``x * x' = prod y^plus + prod y^minus`` over the frozen variables."""

    variable: str
    plus: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def net(self) -> tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.plus, self.minus))


@dataclass(frozen=True)
class VarietyPresentation:
    """An isolated cluster variety inside ``C^{2n} x (C*)^m``."""

    mutable: tuple[str, ...]
    frozen: tuple[str, ...]
    equations: tuple[ExchangeEquation, ...]

    @property
    def ordinary(self) -> tuple[str, ...]:
        return tuple(v for x in self.mutable for v in (x, x + "'"))

    @property
    def invertible(self) -> tuple[str, ...]:
        return self.frozen

    def _monomial(self, exps) -> str:
        parts = []
        for name, e in zip(self.frozen, exps):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __str__(self):
        lines = [
            f"{eq.variable}*{eq.variable}' = {self._monomial(eq.plus)} + {self._monomial(eq.minus)}"
            for eq in self.equations
        ]
        if self.frozen:
            lines.append(", ".join(self.frozen) + " != 0")
        return "\n".join(lines)


def isolated_presentation(seed: Seed) -> VarietyPresentation:
    if not is_isolated(seed):
        raise NotIsolatedError(
            f"seed has mutable edges {seed.graph().describe()}; decompose it first"
        )
    n = seed.n
    equations = []
    for k in range(n):
        plus, minus = exchange_relation(seed.matrix, k)
        equations.append(ExchangeEquation(seed.labels[k], plus[n:], minus[n:]))
    return VarietyPresentation(seed.labels[:n], seed.labels[n:], tuple(equations))
