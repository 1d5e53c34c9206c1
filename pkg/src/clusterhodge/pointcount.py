"""Point counts over prime fields and the counting-polynomial check.

A cluster variety of Louise type is covered by isolated charts, so its
number of ``F_q``-points follows from inclusion-exclusion over the Louise
tree.  On an isolated chart each equation ``x x' = r`` has ``q - 1``
solutions when ``r != 0`` and ``2q - 1`` when ``r = 0``, so only the frozen
torus needs to be enumerated.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import sympy
from sympy.matrices.normalforms import invariant_factors

from .exceptions import (
    HeldOutMismatchError,
    InsufficientSamplesError,
    InterpolationError,
    NonIntegralError,
    NotLouiseError,
    UnsupportedCaseError,
)
from .hodge import Case, classify, e_polynomial, table_for
from .polynomial import CountingPolynomial
from .quiver import (
    FiniteType,
    Leaf,
    LouiseTree,
    Seed,
    VarietyPresentation,
    cyclic_triangle,
    finite_type_check,
    isolated_presentation,
    louise_decompose,
)

DEFAULT_PRIMES = (5, 7, 11, 13)
DEFAULT_HELD_OUT = 17


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __len__(self):
        return self.p

    def units(self) -> np.ndarray:
        return np.arange(1, self.p, dtype=np.int64)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)


@functools.lru_cache(maxsize=4096)
def _count_isolated(plus: tuple, minus: tuple, m: int, p: int) -> int:
    q = p
    n = len(plus)
    used = [j for j in range(m) if any(e[j] for e in plus + minus)]
    free = m - len(used)
    # exponents restricted to the variables that actually occur
    plus = [tuple(e[j] for j in used) for e in plus]
    minus = [tuple(e[j] for j in used) for e in minus]

    if not used:
        r = 2 % q
        return (q - 1) ** free * ((q - 1) if r else (2 * q - 1)) ** n

    if (2 * q) ** n * (q - 1) ** len(used) >= 2**62:
        raise OverflowError("count does not fit in 64 bits")

    units = np.arange(1, q, dtype=np.int64)
    pow_cache = {}

    def powers(e):
        if e not in pow_cache:
            pow_cache[e] = np.array([pow(int(u), e, q) for u in units], dtype=np.int64)
        return pow_cache[e]

    inner = min(len(used), 2)
    outer = len(used) - inner
    grids = np.meshgrid(*[np.arange(q - 1)] * inner, indexing="ij")
    idx_inner = [g.ravel() for g in grids]

    total = 0
    for prefix in itertools.product(range(q - 1), repeat=outer):
        factor = np.ones(idx_inner[0].shape, dtype=np.int64)
        for ep, em in zip(plus, minus):
            mono = []
            for exps in (ep, em):
                val = np.ones_like(factor)
                for pos, e in enumerate(exps):
                    if not e:
                        continue
                    if pos < outer:
                        val = val * int(powers(e)[prefix[pos]]) % q
                    else:
                        val = val * powers(e)[idx_inner[pos - outer]] % q
                mono.append(val)
            r = (mono[0] + mono[1]) % q
            factor = factor * np.where(r == 0, 2 * q - 1, q - 1)
        total += int(factor.sum())
    return total * (q - 1) ** free


def count_isolated(pres: VarietyPresentation, field: PrimeField | int) -> int:
    """Exact number of ``F_q``-points of an isolated chart."""
    p = field.p if isinstance(field, PrimeField) else PrimeField(field).p
    plus = tuple(eq.plus for eq in pres.equations)
    minus = tuple(eq.minus for eq in pres.equations)
    return _count_isolated(plus, minus, len(pres.frozen), p)


def louise_tree(seed: Seed, choose=min) -> LouiseTree:
    """Louise tree of ``seed``, mutating an oriented triangle to an acyclic seed first."""
    if seed.n == 3 and seed.m == 0 and cyclic_triangle(seed) is not None:
        result = finite_type_check(seed)
        if result.verdict is FiniteType.NOT_FINITE_TYPE:
            raise NotLouiseError("cluster algebra is not of finite type")
        seed = result.seed
    return louise_decompose(seed, choose)


def count_tree(tree: LouiseTree, field: PrimeField | int) -> int:
    if isinstance(tree, Leaf):
        return count_isolated(isolated_presentation(tree.seed), field)
    U, V, UV = (count_tree(c, field) for c in tree.children)
    return U + V - UV


def count_variety(seed: Seed, field: PrimeField | int, choose=min) -> int:
    """``#A(F_q)`` by inclusion-exclusion over the Louise cover."""
    return count_tree(louise_tree(seed, choose), field)


def interpolate(
    samples: Sequence[tuple[int, int]],
    degree: int,
    held_out: tuple[int, int] | None = None,
) -> CountingPolynomial:
    """Integer polynomial of degree at most ``degree`` through ``samples``.

    The first ``degree + 1`` samples determine the polynomial; every further
    sample and the held-out sample must then agree with it exactly.
    """
    samples = [(int(q), int(c)) for q, c in samples]
    if held_out is None:
        raise InsufficientSamplesError("a held-out sample is required")
    qs = [q for q, _ in samples] + [held_out[0]]
    if len(set(qs)) != len(qs):
        raise InsufficientSamplesError(f"sample points are not distinct: {qs}")
    if len(samples) < degree + 1:
        raise InsufficientSamplesError(
            f"degree {degree} needs {degree + 1} samples, got {len(samples)}"
        )
    q = sympy.Symbol("q")
    expr = sympy.interpolate(samples[: degree + 1], q)
    coeffs = sympy.Poly(expr, q).all_coeffs()[::-1] if expr != 0 else [0]
    if any(not c.is_integer for c in coeffs):
        raise NonIntegralError(f"interpolated coefficients are not integers: {coeffs[::-1]}")
    poly = CountingPolynomial(tuple(int(c) for c in coeffs))
    for qq, c in samples[degree + 1:] + [tuple(held_out)]:
        if poly(qq) != c:
            raise HeldOutMismatchError(
                f"{poly} gives {poly(qq)} at q={qq}, observed {c}"
            )
    return poly


def admissible_modulus(seed: Seed) -> int:
    """``N`` such that the point count is a polynomial in ``q`` on ``q = 1 mod N``.

    On a chart the count depends on how many frozen tuples solve
    ``y^{b_i} = -1`` for subsets of the equations.  After Smith reduction
    this is a product of equations ``z^d = +-1``, which have exactly ``d``
    solutions once ``2d`` divides ``q - 1``.
    """
    N = 2
    for leaf in louise_tree(seed).leaves():
        rows = [eq.net for eq in isolated_presentation(leaf.seed).equations]
        rows = [r for r in rows if any(r)]
        for size in range(1, len(rows) + 1):
            for sub in itertools.combinations(rows, size):
                for d in invariant_factors(sympy.Matrix(sub), domain=sympy.ZZ):
                    d = abs(int(d))
                    if d:
                        N = math.lcm(N, 2 * d)
    return N


def admissible_primes(seed: Seed, count: int, start: int = 5) -> tuple[int, ...]:
    N = admissible_modulus(seed)
    out = []
    q = start
    while len(out) < count:
        if q % N == 1 and sympy.isprime(q):
            out.append(q)
        q += 1
    return tuple(out)


@dataclass(frozen=True)
class VerificationReport:
    case: str
    params: tuple[int, ...]
    predicted: CountingPolynomial | None
    observed: CountingPolynomial | None
    verdict: str
    samples: tuple[tuple[int, int], ...] = ()
    note: str = ""

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "params": list(self.params),
            "predicted": list(self.predicted.coeffs) if self.predicted is not None else None,
            "observed": list(self.observed.coeffs) if self.observed is not None else None,
            "verdict": self.verdict,
        }

    def __str__(self):
        lines = [
            f"case:      {self.case} {list(self.params)}",
            f"samples:   " + ", ".join(f"#A(F_{q})={c}" for q, c in self.samples),
            f"predicted: {self.predicted if self.predicted is not None else '-'}",
            f"observed:  {self.observed if self.observed is not None else '-'}",
            f"verdict:   {self.verdict}",
        ]
        if self.note:
            lines.append(f"note:      {self.note}")
        return "\n".join(lines)


def verify_table(
    seed: Seed,
    primes: Sequence[int] | None = None,
    held_out: int | None = None,
    predicted=None,
) -> VerificationReport:
    """Compare the predicted E-polynomial with interpolated point counts.

    Without ``primes``, the primes are drawn from ``q = 1 mod N`` with ``N``
    from :func:`admissible_modulus`; for weight-one quivers this gives
    ``5, 7, 11, 13`` with ``17`` held out.  ``predicted`` overrides the table
    the E-polynomial is taken from.
    """
    cls = classify(seed)
    if not cls.supported:
        raise UnsupportedCaseError(cls.reason)
    d = cls.dim
    if primes is None:
        chosen = admissible_primes(seed, d + 2)
        primes, held_out = chosen[:-1], chosen[-1]
    elif held_out is None:
        raise InsufficientSamplesError("held_out prime required when primes are given")

    samples = tuple((q, count_variety(seed, q)) for q in list(primes) + [held_out])
    note = ""
    try:
        observed = interpolate(samples[:-1], d, samples[-1])
    except InterpolationError as exc:
        observed, note = None, str(exc)

    if cls.case is Case.SINGULAR_CASE1_11:
        return VerificationReport(cls.case.value, cls.params, None, observed,
                                  "COUNT_ONLY", samples, note)
    if predicted is None:
        predicted = table_for(cls)
    expected = e_polynomial(predicted)
    verdict = "PASS" if observed == expected else "FAIL"
    return VerificationReport(cls.case.value, cls.params, expected, observed, verdict, samples, note)
