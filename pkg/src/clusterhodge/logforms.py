"""Exact algebra of logarithmic forms ``c * x^e * dlog x_{i1} ^ ... ^ dlog x_{ik}``.

Text rendering writes ``dlog x ^ dlog y`` as ``_xy_``, so that for example
``y^2*z^3*(2_xy_+3_xz_)`` is ``y^2 z^3 (2 dlog x^dlog y + 3 dlog x^dlog z)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import sympy

from .exceptions import DomainError

Key = tuple[tuple[int, ...], tuple[int, ...]]  # (exponent vector, sorted wedge indices)


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, or 0 when an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


class LogForm:
    """Finite sum of Laurent monomials times wedges of dlog generators."""

    __slots__ = ("generators", "terms")

    def __init__(self, generators: Sequence[str], terms: Mapping[Key, Fraction] | None = None):
        self.generators = tuple(generators)
        g = len(self.generators)
        clean = {}
        for (exps, wedge), c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != g or any(not 0 <= i < g for i in wedge):
                raise ValueError(f"term {(exps, wedge)} does not fit generators {self.generators}")
            sign, wedge = _sort_sign(wedge)
            c = Fraction(c) * sign
            if c:
                key = (exps, wedge)
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # constructors

    @classmethod
    def zero(cls, generators):
        return cls(generators)

    @classmethod
    def constant(cls, generators, c=1):
        return cls(generators, {((0,) * len(generators), ()): Fraction(c)})

    @classmethod
    def dlog(cls, generators, *names: str) -> "LogForm":
        """``dlog n1 ^ dlog n2 ^ ...`` for the named generators."""
        gens = tuple(generators)
        return cls(gens, {((0,) * len(gens), tuple(gens.index(n) for n in names)): Fraction(1)})

    @classmethod
    def monomial(cls, generators, exponents: Mapping[str, int] | Sequence[int]) -> "LogForm":
        gens = tuple(generators)
        if isinstance(exponents, Mapping):
            exps = tuple(int(exponents.get(n, 0)) for n in gens)
        else:
            exps = tuple(exponents)
        return cls(gens, {(exps, ()): Fraction(1)})

    # arithmetic

    def _check(self, other: "LogForm"):
        if self.generators != other.generators:
            raise ValueError(f"generators differ: {self.generators} vs {other.generators}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return LogForm(self.generators, terms)

    def __neg__(self):
        return LogForm(self.generators, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, LogForm):
            return self.wedge(c)
        return LogForm(self.generators, {k: v * Fraction(c) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def wedge(self, other: "LogForm") -> "LogForm":
        self._check(other)
        out: dict[Key, Fraction] = {}
        for (e1, w1), c1 in self.terms.items():
            for (e2, w2), c2 in other.terms.items():
                sign, w = _sort_sign(w1 + w2)
                if sign:
                    key = (tuple(a + b for a, b in zip(e1, e2)), w)
                    out[key] = out.get(key, Fraction(0)) + sign * c1 * c2
        return LogForm(self.generators, out)

    __xor__ = wedge

    def __eq__(self, other):
        if not isinstance(other, LogForm):
            return NotImplemented
        return self.generators == other.generators and self.terms == other.terms

    def __hash__(self):
        return hash((self.generators, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def degrees(self) -> set[int]:
        return {len(w) for _, w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    # rendering

    def _wedge_name(self, wedge):
        names = [self.generators[i] for i in wedge]
        sep = "" if all(len(n) == 1 for n in names) else ","
        return "_" + sep.join(names) + "_"

    def _monomial_name(self, exps):
        parts = []
        for n, e in zip(self.generators, exps):
            if e == 1:
                parts.append(n)
            elif e:
                parts.append(f"{n}^{e}")
        return "*".join(parts)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        groups: dict[tuple[int, ...], list] = {}
        for (exps, wedge), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            groups.setdefault(exps, []).append((wedge, c))
        chunks = []
        for exps, items in groups.items():
            pieces = []
            for wedge, c in items:
                body = self._wedge_name(wedge) if wedge else ""
                if not body:
                    coef = str(c)
                elif c == 1:
                    coef = ""
                elif c == -1:
                    coef = "-"
                else:
                    coef = str(c) if c.denominator == 1 else f"({c})"
                pieces.append(coef + body)
            inner = pieces[0] + "".join(p if p.startswith("-") else "+" + p for p in pieces[1:])
            mono = self._monomial_name(exps)
            if not mono:
                chunks.append(inner)
            elif len(pieces) == 1 and items[0][1] == 1:
                chunks.append(mono + ("*" + inner if items[0][0] else ""))
            else:
                chunks.append(f"{mono}*({inner})")
        return chunks[0] + "".join(ch if ch.startswith("-") else "+" + ch for ch in chunks[1:])

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LogForm({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "terms": [
                {"exponents": list(e), "wedge": list(w), "coeff": str(c)}
                for (e, w), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data) -> "LogForm":
        terms = {
            (tuple(t["exponents"]), tuple(t["wedge"])): Fraction(t["coeff"]) for t in data["terms"]
        }
        return cls(data["generators"], terms)


def rank(forms: Sequence[LogForm]) -> int:
    """Rank over the rationals of the coefficient matrix of ``forms``."""
    if not forms:
        return 0
    keys = sorted({k for f in forms for k in f.terms})
    if not keys:
        return 0
    M = sympy.Matrix([[sympy.Rational(f.terms.get(k, 0)) for k in keys] for f in forms])
    return M.rank()


def linearly_independent(forms: Sequence[LogForm]) -> bool:
    return rank(forms) == len(forms)


@dataclass(frozen=True)
class MonomialMap:
    """``source[i] = prod target[j] ** exponents[i][j]`` for each source generator.

    Pulling back a form written in the source generators along this map
    rewrites it in the target generators.
    """

    source: tuple[str, ...]
    target: tuple[str, ...]
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        E = tuple(tuple(int(v) for v in row) for row in self.exponents)
        if len(E) != len(self.source) or any(len(r) != len(self.target) for r in E):
            raise ValueError("exponent matrix must be len(source) x len(target)")
        object.__setattr__(self, "exponents", E)
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))

    def determinant(self) -> int:
        return int(sympy.Matrix(self.exponents).det())

    def is_unimodular(self) -> bool:
        return len(self.source) == len(self.target) and abs(self.determinant()) == 1

    def inverse(self) -> "MonomialMap":
        if not self.is_unimodular():
            raise DomainError("only unimodular monomial maps are invertible over Z")
        inv = sympy.Matrix(self.exponents).inv()
        return MonomialMap(self.target, self.source, tuple(tuple(int(v) for v in row) for row in inv.tolist()))

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """``self`` followed by ``other``: write source in ``other.target``."""
        if self.target != other.source:
            raise ValueError("maps are not composable")
        M = sympy.Matrix(self.exponents) * sympy.Matrix(other.exponents)
        return MonomialMap(self.source, other.target, tuple(tuple(int(v) for v in r) for r in M.tolist()))


def pullback(phi: MonomialMap, form: LogForm) -> LogForm:
    if form.generators != phi.source:
        raise ValueError(f"form lives on {form.generators}, map on {phi.source}")
    tgt = phi.target
    E = phi.exponents
    one_forms = [
        LogForm(tgt, {((0,) * len(tgt), (j,)): Fraction(E[i][j]) for j in range(len(tgt)) if E[i][j]})
        for i in range(len(phi.source))
    ]
    out = LogForm.zero(tgt)
    for (exps, wedge), c in form.terms.items():
        mono = tuple(sum(e * E[i][j] for i, e in enumerate(exps)) for j in range(len(tgt)))
        piece = LogForm(tgt, {(mono, ()): c})
        for i in wedge:
            piece = piece.wedge(one_forms[i])
        out = out + piece
    return out


@dataclass(frozen=True)
class BezoutChange:
    """Coordinates with ``xx' = y^a z^b + 1`` isomorphic to ``uu' = v^g + 1`` times ``C*``.

    ``forward`` writes ``x, y, z`` in ``u, v, w`` (``y = v^s w^b'``,
    ``z = v^t w^{-a'}``); ``inverse`` writes ``u, v, w`` in ``x, y, z``.
    """

    a: int
    b: int
    g: int
    s: int
    t: int
    forward: MonomialMap
    inverse: MonomialMap

    @property
    def a1(self) -> int:
        return self.a // self.g

    @property
    def b1(self) -> int:
        return self.b // self.g

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """``[[s, b'], [t, -a']]``, the exponents of ``y`` and ``z`` in ``v, w``."""
        return ((self.s, self.b1), (self.t, -self.a1))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r, old_s, s = a, b, 1, 0
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
    return old_r, old_s, (old_r - old_s * a) // b if b else 0


def bezout_pair(a: int, b: int) -> tuple[int, int]:
    """``(s, t)`` with ``sa + tb = gcd(a, b)``, ``|t|`` minimal, then ``|s|`` minimal."""
    g, s0, t0 = _egcd(a, b)
    a1 = a // g
    # all solutions: (s0 - k b', t0 + k a')
    b1 = b // g
    best = None
    for k in range(-(abs(t0) // a1) - 2, abs(t0) // a1 + 3):
        s, t = s0 - k * b1, t0 + k * a1
        key = (abs(t), abs(s), (s, t) != (s0, t0))
        if best is None or key < best[0]:
            best = (key, (s, t))
    return best[1]


def bezout_change(a: int, b: int, names=("x", "y", "z"), new_names=("u", "v", "w")) -> BezoutChange:
    if a <= 0 or b <= 0:
        raise DomainError(f"weights must be positive, got ({a}, {b})")
    g = math.gcd(a, b)
    s, t = bezout_pair(a, b)
    a1, b1 = a // g, b // g
    forward = MonomialMap(names, new_names, ((1, 0, 0), (0, s, b1), (0, t, -a1)))
    inverse = MonomialMap(new_names, names, ((1, 0, 0), (0, a1, b1), (0, t, -s)))
    return BezoutChange(a, b, g, s, t, forward, inverse)


# Deligne-splitting bases

XYZ = ("x", "y", "z")
Basis = dict[tuple[int, int], list[LogForm]]


def _d(gens, *names):
    return LogForm.dlog(gens, *names)


def _mono(gens, **exps):
    return LogForm.monomial(gens, exps)


def basis_torus(names: Sequence[str]) -> Basis:
    """Wedges of ``dlog`` over all subsets: ``H^{k,(k,k)}`` of ``(C*)^r``."""
    from itertools import combinations

    names = tuple(names)
    out: Basis = {}
    for k in range(len(names) + 1):
        out[(k, k)] = [
            _d(names, *c) if c else LogForm.constant(names) for c in combinations(names, k)
        ]
    return out


def basis_2d(a: int) -> Basis:
    """Mutable ``x`` with frozen ``y`` of weight ``a``."""
    if a == 0:
        raise DomainError("weight must be nonzero")
    g = ("x", "y")
    xy = _d(g, "x", "y")
    return {
        (0, 0): [LogForm.constant(g)],
        (1, 1): [_d(g, "y")],
        (2, 2): [xy],
        (2, 1): [_mono(g, y=i) ^ xy for i in range(1, abs(a))],
    }


def basis_prop_10(a: int) -> Basis:
    """Mutable ``x``, frozen ``y`` with weight ``a`` and frozen ``z`` without edges."""
    if a == 0:
        raise DomainError("weight must be nonzero")
    g = XYZ
    xy, xyz = _d(g, "x", "y"), _d(g, "x", "y", "z")
    return {
        (0, 0): [LogForm.constant(g)],
        (1, 1): [_d(g, "y"), _d(g, "z")],
        (2, 2): [xy, _d(g, "y", "z")],
        (3, 3): [xyz],
        (2, 1): [_mono(g, y=i) ^ xy for i in range(1, abs(a))],
        (3, 2): [_mono(g, y=i) ^ xyz for i in range(1, abs(a))],
    }


def basis_prop_1m(a: int, b: int) -> Basis:
    """Mutable ``x`` with frozen ``y, z`` of weights ``a, b``: forms built on ``a xy + b xz``."""
    if a == 0 and b == 0:
        raise DomainError("a and b cannot both be zero")
    G = math.gcd(a, b)
    g = XYZ
    two = a * _d(g, "x", "y") + b * _d(g, "x", "z")
    xyz = _d(g, "x", "y", "z")
    return {
        (0, 0): [LogForm.constant(g)],
        (1, 1): [_d(g, "y"), _d(g, "z")],
        (2, 2): [two, _d(g, "y", "z")],
        (3, 3): [xyz],
        (2, 1): [_mono(g, y=i * a // G, z=i * b // G) ^ two for i in range(1, G)],
        (3, 2): [_mono(g, y=i * a // G, z=i * b // G) ^ xyz for i in range(1, G)],
    }


def basis_prop_2m(a: int, b: int, c: int, variant: str = "statement") -> Basis:
    """Mutable ``x -> y`` of weight ``a``, frozen ``z`` with weights ``b, c``.

    ``variant="statement"`` takes the second family from the chart where
    ``y`` is frozen, ranging over ``1 <= j <= gcd(a, b) - 1`` with monomials
    ``y^{ja/(a,b)} z^{jb/(a,b)}``.  ``variant="eq21"`` uses instead
    ``1 <= j <= gcd(b, c) - 1`` with ``y^{jb/(b,c)} z^{jc/(b,c)}``; its size
    then disagrees with the table whenever ``gcd(a, b) != gcd(b, c)``.
    """
    if a <= 0:
        raise DomainError(f"mutable edge weight must be positive, got {a}")
    if variant not in ("statement", "eq21"):
        raise ValueError(f"unknown variant {variant!r}")
    g = XYZ
    xy, xz, yz = _d(g, "x", "y"), _d(g, "x", "z"), _d(g, "y", "z")
    xyz = _d(g, "x", "y", "z")
    first = a * xy + c * yz
    second = a * xy + b * xz
    gac = math.gcd(a, c)
    first_monos = [_mono(g, x=i * a // gac, z=i * c // gac) for i in range(1, gac)]
    if variant == "statement":
        gab = math.gcd(a, b)
        second_monos = [_mono(g, y=j * a // gab, z=j * b // gab) for j in range(1, gab)]
    else:
        gbc = math.gcd(b, c)
        second_monos = (
            [_mono(g, y=j * b // gbc, z=j * c // gbc) for j in range(1, gbc)] if gbc else []
        )
    return {
        (0, 0): [LogForm.constant(g)],
        (1, 1): [_d(g, "z")],
        (2, 2): [a * xy + b * xz + c * yz],
        (3, 3): [xyz],
        (2, 1): [m ^ first for m in first_monos] + [m ^ second for m in second_monos],
        (3, 2): [m ^ xyz for m in first_monos + second_monos],
    }


def rename(form: LogForm, names: Sequence[str]) -> LogForm:
    return LogForm(tuple(names), form.terms)


def rename_basis(basis: Basis, names: Sequence[str]) -> Basis:
    return {kp: [rename(f, names) for f in forms] for kp, forms in basis.items()}


def basis_for(cls, variant: str = "statement") -> Basis:
    """Basis for a classified variety, written in the seed's own labels."""
    from .exceptions import UnsupportedCaseError
    from .hodge import Case

    p, roles = cls.params, cls.roles
    if cls.case is Case.TORUS:
        return basis_torus(cls.seed.labels)
    if cls.case is Case.TWO_DIM:
        return rename_basis(basis_2d(p[0]), roles)
    if cls.case is Case.PROD_2D_X_TORUS:
        return rename_basis(basis_prop_10(p[0]), roles)
    if cls.case is Case.ONE_MUTABLE:
        return rename_basis(basis_prop_1m(*p), roles)
    if cls.case is Case.TWO_MUTABLE:
        return rename_basis(basis_prop_2m(*p, variant=variant), roles)
    if cls.case is Case.THREE_MUTABLE_ACYCLIC:
        raise UnsupportedCaseError(
            "no explicit forms: one class in H^{3,(2,2)} comes from the Mayer-Vietoris boundary map"
        )
    raise UnsupportedCaseError(cls.reason or f"no basis for case {cls.case}")
