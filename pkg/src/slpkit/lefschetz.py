"""Multiplication matrices for powers of a linear form and SLP verdicts.

For a linear form l = sum c_k x_k the matrix of multiplication by l^t from
degree i to degree i+t is built entry-by-entry: the coefficient of a target
monomial v on a source monomial u is the multinomial t!/prod(w_k!) times
prod c_k^{w_k}, where w = exponents(v) - exponents(u); no power of l is ever
expanded.  The strong Lefschetz property for the given form holds when every
such matrix has maximal rank.

Rank checks over Q try one prime above the socle degree first (full modular
rank certifies full rational rank) and only fall back to exact fraction-free
elimination when the certificate fails, so the expensive path runs exactly
when something genuinely degenerates.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

from ._primes import is_prime, next_prime
from .exactmat import (
    GF,
    QQ,
    ZZ,
    ExactMatrix,
    RankResult,
    certified_rank,
    rank_mod_p,
)
from .monomials import Monomial
from .quotient import AlgebraSpec, AlgebraElement, basis_positions, graded_basis, hilbert_vector


@dataclass(frozen=True)
class LinearForm:
    """Coefficients of a degree-one element, one per variable."""

    coefficients: tuple

    def __post_init__(self) -> None:
        if not isinstance(self.coefficients, tuple):
            object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    @classmethod
    def ones(cls, n: int) -> "LinearForm":
        return cls((1,) * n)

    def restricted(self) -> "LinearForm":
        if self.nvars < 2:
            raise ValueError("cannot restrict a one-variable form")
        return LinearForm(self.coefficients[:-1])

    def element(self, spec: AlgebraSpec) -> AlgebraElement:
        return AlgebraElement.linear(spec, self.coefficients)

    def to_json(self) -> list:
        return [str(c) if isinstance(c, Fraction) else c for c in self.coefficients]


@dataclass(frozen=True)
class MultiplicationMatrix:
    """Matrix of multiplication by form^power from degree i to degree i+power.

    Columns follow graded_basis(spec, i), rows graded_basis(spec, i+power).
    """

    spec: AlgebraSpec
    form: LinearForm
    source_degree: int
    power: int
    matrix: ExactMatrix


def _increments(room: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    # exponent bumps w with 0 <= w_k <= room[k] and sum(w) == total
    n = len(room)
    w = [0] * n

    def rec(k: int, rem: int):
        if k == n - 1:
            if rem <= room[k]:
                w[k] = rem
                yield tuple(w)
                w[k] = 0
            return
        for e in range(min(room[k], rem) + 1):
            w[k] = e
            yield from rec(k + 1, rem - e)
        w[k] = 0

    if n == 0:
        if total == 0:
            yield ()
        return
    yield from rec(0, total)


def build_matrix(spec: AlgebraSpec, form: LinearForm, i: int, t: int) -> MultiplicationMatrix:
    """Multiplication matrix of form^t from degree i, entry-wise multinomials."""
    if form.nvars != spec.n:
        raise ValueError("form has the wrong number of coefficients")
    if i < 0 or t < 0 or i + t > spec.socle_degree:
        raise ValueError("degrees out of range for this algebra")
    char = spec.characteristic
    coeffs = [spec.normalize_coeff(c) for c in form.coefficients]
    rational = char == 0 and any(isinstance(c, Fraction) for c in coeffs)
    source = graded_basis(spec, i)
    target_pos = basis_positions(spec, i + t)
    nrows, ncols = len(target_pos), len(source)
    rows = [[0] * ncols for _ in range(nrows)]
    fact = factorial(t)
    bounds = spec.exponents
    for col, u in enumerate(source):
        ue = u.exponents
        room = tuple(
            (bounds[k] - 1 - ue[k]) if coeffs[k] else 0 for k in range(spec.n)
        )
        for w in _increments(room, t):
            c = fact
            val = 1
            for k, wk in enumerate(w):
                if wk:
                    if wk > 1:
                        c //= factorial(wk)
                    val *= coeffs[k] ** wk
            val = c * val
            if char:
                val %= char
            if not val:
                continue
            v = Monomial(tuple(a + b for a, b in zip(ue, w)))
            rows[target_pos[v]][col] = val
    if char:
        matrix = ExactMatrix.from_rows(rows, GF, char) if rows else ExactMatrix.zeros(0, ncols, GF, char)
    elif rational:
        matrix = ExactMatrix.from_rows(rows, QQ) if rows else ExactMatrix.zeros(0, ncols, QQ)
    else:
        matrix = ExactMatrix.from_rows(rows, ZZ) if rows else ExactMatrix.zeros(0, ncols, ZZ)
    return MultiplicationMatrix(spec, form, i, t, matrix)


def max_rank_check(mm: MultiplicationMatrix) -> tuple[bool, RankResult]:
    """Is the map of maximal rank?  Returns the verdict and the rank evidence."""
    mat = mm.matrix
    want = min(mat.rows, mat.cols)
    if want == 0:
        tag = "modular" if mat.domain == GF else "fraction-free"
        return True, RankResult(0, tag, ())
    if mat.domain == GF:
        rr = rank_mod_p(mat, mat.modulus)
    else:
        rr = certified_rank(mat, probe_prime=next_prime(mm.spec.socle_degree))
    return rr.rank == want, rr


@dataclass(frozen=True)
class MapCheck:
    """One (i, t) rank check inside an SLP run."""

    i: int
    t: int
    rows: int
    cols: int
    rank: int
    maximal: bool
    method: str
    ms: float

    def to_json_dict(self) -> dict:
        return {
            "i": self.i,
            "t": self.t,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "maximal": self.maximal,
            "method": self.method,
            "ms": round(self.ms, 3),
        }


@dataclass(frozen=True)
class LefschetzReport:
    """Outcome of an SLP run for one spec and one form."""

    spec: AlgebraSpec
    form: LinearForm
    mode: str
    method: str
    maps: tuple[MapCheck, ...]
    slp: bool
    total_ms: float

    @property
    def failures(self) -> tuple[tuple[int, int], ...]:
        return tuple((m.i, m.t) for m in self.maps if not m.maximal)

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "form": self.form.to_json(),
            "characteristic": self.spec.characteristic,
            "mode": self.mode,
            "method": self.method,
            "maps": [m.to_json_dict() for m in self.maps],
            "slp": self.slp,
            "timing": {"total_ms": round(self.total_ms, 3)},
        }


def middle_pairs(socle_degree: int) -> tuple[tuple[int, int], ...]:
    """(i, m-2i) for 0 <= i < m/2: the square maps across the middle."""
    m = socle_degree
    return tuple((i, m - 2 * i) for i in range((m + 1) // 2))


def full_pairs(socle_degree: int) -> tuple[tuple[int, int], ...]:
    """Every (i, t) with t >= 1 and i + t <= m."""
    m = socle_degree
    return tuple((i, t) for i in range(m) for t in range(1, m - i + 1))


def _check_one(spec: AlgebraSpec, form: LinearForm, i: int, t: int, method: str) -> MapCheck:
    hv = hilbert_vector(spec)
    start = time.perf_counter()
    if method == "block":
        from .blockrec import recursive_middle_rank

        rr = recursive_middle_rank(spec, form, i)
        nrows, ncols = hv[i + t], hv[i]
        maximal = rr.rank == min(nrows, ncols)
    else:
        mm = build_matrix(spec, form, i, t)
        nrows, ncols = mm.matrix.rows, mm.matrix.cols
        maximal, rr = max_rank_check(mm)
    ms = (time.perf_counter() - start) * 1000.0
    return MapCheck(i, t, nrows, ncols, rr.rank, maximal, rr.method, ms)


def _map_job(payload) -> MapCheck:
    spec, form, i, t, method = payload
    return _check_one(spec, form, i, t, method)


def slp_check(
    spec: AlgebraSpec,
    form: LinearForm,
    mode: str = "auto",
    method: str = "auto",
    jobs: int = 1,
) -> LefschetzReport:
    """Decide the strong Lefschetz property for the given form.

    mode "middle" checks only the square maps (i, m-2i), which decide the
    full property for any symmetric unimodal Hilbert vector; "full" checks
    every power.  "auto" picks middle for quadratic specs, full otherwise.
    method "block" routes middle maps through the recursive rank computation
    (quadratic specs only); "dense" builds each matrix outright.
    """
    if form.nvars != spec.n:
        raise ValueError("form has the wrong number of coefficients")
    if mode == "auto":
        mode = "middle" if spec.is_quadratic else "full"
    if mode not in ("middle", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if method == "auto":
        method = "block" if (spec.is_quadratic and mode == "middle") else "dense"
    if method not in ("dense", "block"):
        raise ValueError(f"unknown method {method!r}")
    if method == "block":
        if not spec.is_quadratic:
            raise ValueError("block method is defined for quadratic specs only")
        if mode != "middle":
            raise ValueError("block method computes middle maps only")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    m = spec.socle_degree
    pairs = middle_pairs(m) if mode == "middle" else full_pairs(m)
    payloads = [(spec, form, i, t, method) for i, t in pairs]
    start = time.perf_counter()
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(_map_job, payloads))
    else:
        checks = [_map_job(p) for p in payloads]
    total_ms = (time.perf_counter() - start) * 1000.0
    checks.sort(key=lambda c: (c.i, c.t))
    return LefschetzReport(
        spec=spec,
        form=form,
        mode=mode,
        method=method,
        maps=tuple(checks),
        slp=all(c.maximal for c in checks),
        total_ms=total_ms,
    )


@dataclass(frozen=True)
class CharProbe:
    """SLP verdict for one prime characteristic."""

    prime: int
    slp: bool
    failing: tuple[tuple[int, int], ...]


def char_search(
    spec: AlgebraSpec,
    form: LinearForm,
    primes: Iterable[int],
    mode: str = "auto",
) -> tuple[CharProbe, ...]:
    """Probe the same coefficient pattern over a range of prime fields."""
    for c in form.coefficients:
        if not isinstance(c, int):
            raise TypeError("characteristic search expects integer coefficients")
    probes = []
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        pspec = replace(spec, characteristic=p)
        report = slp_check(pspec, form, mode=mode, method="dense")
        probes.append(CharProbe(p, report.slp, report.failures))
    return tuple(probes)
