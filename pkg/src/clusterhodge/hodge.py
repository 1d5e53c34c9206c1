"""Mixed Hodge number tables of cluster varieties of dimension 2 and 3.

Every table here is of mixed Tate type, so only the diagonal numbers
``h^{k,(p,p)}`` are stored; ``p`` is half the weight.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .exceptions import (
    DomainError,
    DualityUnavailableError,
    InconsistentRankError,
    UnsupportedCaseError,
    UnsupportedDimensionError,
)
from .polynomial import CountingPolynomial
from .quiver import (
    FiniteType,
    LouiseTree,
    Seed,
    Split,
    cyclic_triangle,
    finite_type_check,
    freeze,
    louise_decompose,
)


class Variant(enum.Enum):
    COHOMOLOGY = "Cohomology"
    INTERSECTION_COHOMOLOGY = "IntersectionCohomology"


@dataclass(frozen=True, eq=False)
class MixedHodgeTable:
    """Dense array ``h[k, p]`` for ``0 <= k <= 2*dim`` and ``0 <= p <= dim``."""

    dim: int
    h: np.ndarray
    smooth: bool = True
    variant: Variant = Variant.COHOMOLOGY
    offdiagonal_zero: bool = True

    def __post_init__(self):
        h = np.array(self.h, dtype=np.int64)
        if h.shape != (2 * self.dim + 1, self.dim + 1):
            raise ValueError(f"table shape {h.shape} does not match dim {self.dim}")
        if (h < 0).any():
            raise ValueError("Hodge numbers must be nonnegative")
        k, p = np.indices(h.shape)
        if h[p > k].any():
            raise ValueError("h^{k,(p,p)} must vanish for p > k")
        h.setflags(write=False)
        object.__setattr__(self, "h", h)

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int], int], **kw):
        h = np.zeros((2 * dim + 1, dim + 1), dtype=np.int64)
        for (k, p), v in entries.items():
            h[k, p] += v
        return cls(dim, h, **kw)

    @classmethod
    def zeros(cls, dim: int, **kw):
        return cls.from_entries(dim, {}, **kw)

    def __getitem__(self, kp: tuple[int, int]) -> int:
        k, p = kp
        if 0 <= k < self.h.shape[0] and 0 <= p < self.h.shape[1]:
            return int(self.h[k, p])
        return 0

    def __eq__(self, other):
        if not isinstance(other, MixedHodgeTable):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.smooth == other.smooth
            and self.variant == other.variant
            and np.array_equal(self.h, other.h)
        )

    def __hash__(self):
        return hash((self.dim, self.smooth, self.variant, self.h.tobytes()))

    def entries(self) -> dict[tuple[int, int], int]:
        return {(int(k), int(p)): int(self.h[k, p]) for k, p in zip(*np.nonzero(self.h))}

    def betti(self) -> tuple[int, ...]:
        return tuple(int(b) for b in self.h.sum(axis=1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))

    def with_variant(self, variant: Variant) -> "MixedHodgeTable":
        return MixedHodgeTable(self.dim, self.h, self.smooth, variant)

    def __repr__(self):
        return f"MixedHodgeTable(dim={self.dim}, entries={self.entries()}, smooth={self.smooth})"

    # serialization

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "smooth": self.smooth,
            "variant": self.variant.value,
            "entries": [{"k": k, "p": p, "h": v} for (k, p), v in sorted(self.entries().items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "MixedHodgeTable":
        if isinstance(data, str):
            data = json.loads(data)
        entries = {(e["k"], e["p"]): e["h"] for e in data["entries"]}
        return cls.from_entries(
            data["dim"], entries, smooth=data["smooth"], variant=Variant(data["variant"])
        )

    def to_csv(self) -> str:
        rows = ["k,p,h"] + [f"{k},{p},{v}" for (k, p), v in sorted(self.entries().items())]
        return "\n".join(rows)

    def ascii(self) -> str:
        """Rows indexed by ``k - p``, columns by ``H^k``; columns run up to ``H^dim``."""
        entries = self.entries()
        kmax = max([self.dim] + [k for k, _ in entries])
        shift_max = max([0] + [k - p for k, p in entries])
        name = "IH" if self.variant is Variant.INTERSECTION_COHOMOLOGY else "H"
        head = ["k-p"] + [f"{name}^{k}" for k in range(kmax + 1)]
        body = [
            [str(s)] + [str(self[k, k - s]) if k >= s else "" for k in range(kmax + 1)]
            for s in range(shift_max + 1)
        ]
        widths = [max(len(r[c]) for r in [head] + body) for c in range(len(head))]
        fmt = lambda r: " | ".join([r[0].ljust(widths[0])] + [
            " ".join(x.rjust(w) for x, w in zip(r[1:], widths[1:]))
        ])
        lines = [fmt(head), "-" * len(fmt(head))] + [fmt(r) for r in body]
        return "\n".join(lines)


def gcd0(a: int, b: int) -> int:
    """``gcd(|a|, |b|)`` with ``gcd(a, 0) = |a|``; both zero is a domain error."""
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined here")
    return math.gcd(a, b)


def table_torus(r: int) -> MixedHodgeTable:
    if r < 0:
        raise DomainError(f"torus rank must be >= 0, got {r}")
    return MixedHodgeTable.from_entries(r, {(k, k): math.comb(r, k) for k in range(r + 1)})


def table_2d(a: int) -> MixedHodgeTable:
    """One mutable and one frozen vertex joined by an edge of weight ``a``."""
    if a == 0:
        raise DomainError("weight must be nonzero")
    return MixedHodgeTable.from_entries(2, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (2, 1): abs(a) - 1})


def _one_mutable_shape(g: int) -> MixedHodgeTable:
    return MixedHodgeTable.from_entries(
        3, {(0, 0): 1, (1, 1): 2, (2, 2): 2, (3, 3): 1, (2, 1): g - 1, (3, 2): g - 1}
    )


def table_one_mutable(a: int, b: int) -> MixedHodgeTable:
    """One mutable vertex with frozen weights ``a, b`` (``b = 0`` covers the product case)."""
    return _one_mutable_shape(gcd0(a, b))


def table_two_mutable(a: int, b: int, c: int) -> MixedHodgeTable:
    """Mutable edge of weight ``a > 0``; ``b, c`` are the frozen weights of its ends."""
    if a <= 0:
        raise DomainError(f"mutable edge weight must be positive, got {a}")
    C = gcd0(a, b) + gcd0(a, c) - 2
    return MixedHodgeTable.from_entries(
        3, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1, (2, 1): C, (3, 2): C}
    )


def table_two_mutable_alternate(a: int, b: int, c: int) -> MixedHodgeTable:
    """Competing count ``C = gcd(a, c) + gcd(b, c) - 2``, kept so the point-count check can rule it out."""
    if a <= 0:
        raise DomainError(f"mutable edge weight must be positive, got {a}")
    C = gcd0(a, c) + gcd0(b, c) - 2
    return MixedHodgeTable.from_entries(
        3, {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1, (2, 1): C, (3, 2): C}
    )


def table_three_mutable(a: int, b: int, c: int) -> MixedHodgeTable:
    if min(a, b, c) <= 0:
        raise DomainError(f"all three weights must be positive, got {(a, b, c)}")
    C = math.gcd(a, b) + math.gcd(a, c) + math.gcd(b, c) - 3
    return MixedHodgeTable.from_entries(
        3, {(0, 0): 1, (2, 2): 1, (3, 3): 1, (2, 1): C, (3, 2): C + 1}
    )


def table_singular_case1(variant: Variant = Variant.COHOMOLOGY) -> MixedHodgeTable:
    """The singular variety ``xx' = yy' = z + 1, z != 0``."""
    entries = {(0, 0): 1, (1, 1): 1, (2, 2): 2, (3, 3): 1}
    if variant is Variant.INTERSECTION_COHOMOLOGY:
        entries[(2, 1)] = 1
    return MixedHodgeTable.from_entries(3, entries, smooth=False, variant=variant)


def kunneth(t1: MixedHodgeTable, t2: MixedHodgeTable) -> MixedHodgeTable:
    d = t1.dim + t2.dim
    h = np.zeros((2 * d + 1, d + 1), dtype=np.int64)
    for (k1, p1), v1 in t1.entries().items():
        for (k2, p2), v2 in t2.entries().items():
            h[k1 + k2, p1 + p2] += v1 * v2
    return MixedHodgeTable(d, h, smooth=t1.smooth and t2.smooth)


@dataclass(frozen=True)
class RestrictionRankData:
    """Ranks of ``f^{k,(p,p)}: H(U) + H(V) -> H(U n V)``; missing keys mean rank 0."""

    ranks: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, kp):
        return self.ranks.get(kp, 0)

    @classmethod
    def surjective(cls, tUV: MixedHodgeTable) -> "RestrictionRankData":
        return cls(tUV.entries())


def mayer_vietoris(
    tU: MixedHodgeTable,
    tV: MixedHodgeTable,
    tUV: MixedHodgeTable,
    ranks: RestrictionRankData,
) -> MixedHodgeTable:
    """``h(X) = dim ker f^{k,(p,p)} + dim coker f^{k-1,(p,p)}`` for a two-set open cover."""
    d = tU.dim
    if tV.dim != d or tUV.dim != d:
        raise ValueError("all three tables must have the same dimension")
    dom = tU.h + tV.h
    cod = tUV.h
    r = np.zeros_like(dom)
    for (k, p), v in ranks.ranks.items():
        if v < 0 or v > min(dom[k, p], cod[k, p]):
            raise InconsistentRankError(
                f"rank {v} of f^{{{k},({p},{p})}} exceeds min(dim domain {dom[k, p]}, "
                f"dim codomain {cod[k, p]})"
            )
        r[k, p] = v
    ker = dom - r
    coker = cod - r
    h = ker.copy()
    h[1:, :] += coker[:-1, :]
    return MixedHodgeTable(d, h, smooth=tU.smooth and tV.smooth and tUV.smooth)


def is_mixed_tate(t: MixedHodgeTable) -> bool:
    return t.offdiagonal_zero


def numerical_chl(t: MixedHodgeTable) -> bool:
    """Dimension form of curious hard Lefschetz, centered at weight ``dim``.

    Checks ``h^{k,(p,p)} = h^{k+d-2p,(d-p,d-p)}`` for all ``k, p``, which for
    even ``d = 2e`` reads ``Gr^W_{2e-2i} H^k = Gr^W_{2e+2i} H^{k+2i}``.
    """
    d = t.dim
    for k in range(t.h.shape[0]):
        for p in range(t.h.shape[1]):
            if 2 * p != d and t[k, p] != t[k + d - 2 * p, d - p]:
                return False
    return True


def e_polynomial(t: MixedHodgeTable) -> CountingPolynomial:
    """``sum (-1)^k h^{k,(p,p)} q^{d-p}``: the point count of a smooth polynomial-count variety."""
    if not t.smooth:
        raise DualityUnavailableError("Poincare duality needs a smooth variety")
    coeffs = [0] * (t.dim + 1)
    for (k, p), v in t.entries().items():
        coeffs[t.dim - p] += (-1) ** k * v
    return CountingPolynomial(tuple(coeffs))


# classification


class Case(enum.Enum):
    TORUS = "Torus"
    TWO_DIM = "TwoDim"
    PROD_2D_X_TORUS = "Prod2DxTorus"
    ONE_MUTABLE = "OneMutable"
    TWO_MUTABLE = "TwoMutable"
    THREE_MUTABLE_ACYCLIC = "ThreeMutableAcyclic"
    SINGULAR_CASE1_11 = "SingularCase1_11"
    NOT_FINITE_TYPE = "NotFiniteType"
    UNSUPPORTED = "Unsupported"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    """Result of :func:`classify`.

    ``seed`` is the seed the case analysis was done on: the input after any
    mutation, with mutable vertices carrying no edges at all regarded as
    frozen (``xx' = 2`` is a copy of ``C*``).  ``roles`` lists the labels
    playing the parts of ``x, y, z`` in the closed formulas.
    """

    case: Case
    params: tuple[int, ...] = ()
    seed: Seed | None = None
    roles: tuple[str, ...] = ()
    reason: str = ""

    @property
    def dim(self) -> int | None:
        return self.seed.size if self.seed is not None else None

    @property
    def supported(self) -> bool:
        return self.case not in (Case.UNSUPPORTED, Case.NOT_FINITE_TYPE)

    def to_json(self) -> dict:
        out = {"case": self.case.value, "params": list(self.params), "roles": list(self.roles)}
        if self.reason:
            out["reason"] = self.reason
        return out


def _dead_vertices(seed: Seed) -> list[int]:
    return [k for k in range(seed.n) if not any(seed.matrix.column(k))]


def classify(seed: Seed) -> Classification:
    if seed.size not in (2, 3):
        raise UnsupportedDimensionError(
            f"classification covers dimensions 2 and 3, got {seed.size}"
        )
    if seed.n == 3 and cyclic_triangle(seed) is not None:
        result = finite_type_check(seed)
        if result.verdict is FiniteType.NOT_FINITE_TYPE:
            return Classification(
                Case.NOT_FINITE_TYPE, cyclic_triangle(result.seed), result.seed, result.seed.labels,
                "every seed is an oriented triangle with weights >= 2; the algebra is not finitely generated",
            )
        seed = result.seed

    s = freeze(seed, _dead_vertices(seed))
    B, L, n = s.matrix, s.labels, s.n

    if n == 0:
        return Classification(Case.TORUS, (s.size,), s, L)

    if s.size == 2:
        if n == 1:
            return Classification(Case.TWO_DIM, (B[1, 0],), s, L)
        return Classification(
            Case.UNSUPPORTED, (B[1, 0],), s, L,
            "two mutable vertices and no frozen vertex: not among the known two-dimensional cases",
        )

    if n == 1:
        a, b = B[1, 0], B[2, 0]
        if b == 0:
            return Classification(Case.PROD_2D_X_TORUS, (abs(a),), s, L)
        if a == 0:
            return Classification(Case.PROD_2D_X_TORUS, (abs(b),), s, (L[0], L[2], L[1]))
        return Classification(Case.ONE_MUTABLE, (a, b), s, L)

    if n == 2:
        if B[0, 1] == 0:
            b, c = B[2, 0], B[2, 1]
            if abs(b) == 1 and abs(c) == 1:
                return Classification(Case.SINGULAR_CASE1_11, (1, 1), s, L)
            return Classification(
                Case.UNSUPPORTED, (abs(b), abs(c)), s, L,
                "singular variety xx' = z^a + 1, yy' = z^b + 1 with (a, b) != (1, 1): "
                "mixed Hodge numbers are open",
            )
        # x is the head of the mutable edge: B[y, x] = a > 0
        x, y = (0, 1) if B[1, 0] > 0 else (1, 0)
        return Classification(
            Case.TWO_MUTABLE, (B[y, x], B[2, x], B[2, y]), s, (L[x], L[y], L[2])
        )

    # three mutable vertices, acyclic
    edges = s.graph().mutable_edges()
    if len(edges) < 3:
        return Classification(
            Case.UNSUPPORTED, tuple(sorted(edges.values())), s, L,
            "three mutable vertices with exactly one missing edge: singular, mixed Hodge numbers are open",
        )
    outdeg = {v: sum(1 for (i, _) in edges if i == v) for v in range(3)}
    z = next(v for v in range(3) if outdeg[v] == 2)
    y = next(v for v in range(3) if outdeg[v] == 1)
    x = next(v for v in range(3) if outdeg[v] == 0)
    return Classification(
        Case.THREE_MUTABLE_ACYCLIC, (B[y, x], B[z, x], B[z, y]), s, (L[x], L[y], L[z])
    )


def table_for(cls: Classification, variant: Variant = Variant.COHOMOLOGY) -> MixedHodgeTable:
    """Closed-form table of a classified variety.

    Smooth varieties have ``IH = H``, so asking for intersection cohomology
    only changes the variant tag there.
    """
    p = cls.params
    if cls.case is Case.TORUS:
        t = table_torus(p[0])
    elif cls.case is Case.TWO_DIM:
        t = table_2d(p[0])
    elif cls.case is Case.PROD_2D_X_TORUS:
        t = table_one_mutable(p[0], 0)
    elif cls.case is Case.ONE_MUTABLE:
        t = table_one_mutable(*p)
    elif cls.case is Case.TWO_MUTABLE:
        t = table_two_mutable(*p)
    elif cls.case is Case.THREE_MUTABLE_ACYCLIC:
        t = table_three_mutable(*p)
    elif cls.case is Case.SINGULAR_CASE1_11:
        return table_singular_case1(variant)
    else:
        raise UnsupportedCaseError(cls.reason or f"no table for case {cls.case}")
    return t.with_variant(variant)


def table(seed: Seed, variant: Variant = Variant.COHOMOLOGY) -> MixedHodgeTable:
    return table_for(classify(seed), variant)


def cover_rank_data(
    case: Case, tU: MixedHodgeTable, tV: MixedHodgeTable, tUV: MixedHodgeTable
) -> RestrictionRankData:
    """Restriction ranks for the Louise cover of a two- or three-mutable seed.

    With two mutable vertices every ``f^{k,(p,p)}`` is onto.  With three, the
    cover consists of two two-mutable charts over a one-mutable chart:
    ``f^0`` and ``f^{3,(3,3)}`` have rank 1, ``f^{1,(1,1)}`` rank 2,
    ``f^{2,(2,2)}`` rank 1 and the ``p = k - 1`` maps are onto.
    """
    if case is Case.TWO_MUTABLE:
        return RestrictionRankData.surjective(tUV)
    if case is Case.THREE_MUTABLE_ACYCLIC:
        return RestrictionRankData({
            (0, 0): 1, (1, 1): 2, (2, 2): 1, (3, 3): 1,
            (2, 1): tUV[2, 1], (3, 2): tUV[3, 2],
        })
    raise UnsupportedCaseError(f"no restriction rank data for case {case}")


def assemble_table(tree: LouiseTree) -> MixedHodgeTable:
    """Table of the root variety built bottom-up with :func:`mayer_vietoris`."""
    if not isinstance(tree, Split):
        return table(tree.seed)
    tU, tV, tUV = (assemble_table(c) for c in tree.children)
    ranks = cover_rank_data(classify(tree.seed).case, tU, tV, tUV)
    return mayer_vietoris(tU, tV, tUV, ranks)


def assemble(seed: Seed) -> MixedHodgeTable:
    """Mutate to a Louise seed if needed, decompose, and assemble."""
    cls = classify(seed)
    if not cls.supported:
        raise UnsupportedCaseError(cls.reason)
    return assemble_table(louise_decompose(cls.seed))
