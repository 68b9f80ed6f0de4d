"""Embedding a monomial complete intersection into a quadratic algebra.

A source algebra killing y_j^{a_j + 1} embeds into the square-free algebra
on m = sum(a_j) variables through the block-sum substitution

    y_j  |->  x_{alpha_{j-1}+1} + ... + x_{alpha_j},

where alpha_j are the prefix sums of the a_j.  The substitution kills each
y_j^{a_j+1} on the nose (a sum of a_j square-free variables cannot reach
power a_j + 1), sends the socle monomial to prod(a_j!) times x_1...x_m, and
is injective in every degree, which the per-degree matrix ranks certify.
Strong Lefschetz for the source then transfers along the embedding: the sum
of all source variables maps to the sum of all target variables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Mapping, Union

from ._primes import next_prime
from .exactmat import GF, ZZ, ExactMatrix, certified_rank, mat_mul
from .lefschetz import LefschetzReport, LinearForm, build_matrix, slp_check
from .monomials import Monomial
from .quotient import AlgebraSpec, AlgebraElement, basis_positions, graded_basis, hilbert_vector, multiply


@dataclass(frozen=True)
class EmbeddingSpec:
    """Source socle exponents a_j (y_j^{a_j} survives, y_j^{a_j+1} dies)."""

    powers: tuple[int, ...]
    characteristic: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.powers, tuple):
            object.__setattr__(self, "powers", tuple(self.powers))
        if not self.powers:
            raise ValueError("need at least one variable")
        if any(not isinstance(a, int) or a < 1 for a in self.powers):
            raise ValueError("socle exponents must be integers >= 1")

    @classmethod
    def from_powers(cls, powers, characteristic: int = 0) -> "EmbeddingSpec":
        return cls(tuple(powers), characteristic)

    @classmethod
    def from_spec(cls, spec: AlgebraSpec) -> "EmbeddingSpec":
        if any(d < 2 for d in spec.exponents):
            raise ValueError("killed power 1 leaves no block to substitute")
        return cls(tuple(d - 1 for d in spec.exponents), spec.characteristic)

    @property
    def n(self) -> int:
        return len(self.powers)

    @property
    def m(self) -> int:
        return sum(self.powers)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.powers, initial=0))

    @property
    def source_spec(self) -> AlgebraSpec:
        return AlgebraSpec(self.n, tuple(a + 1 for a in self.powers), self.characteristic)

    @property
    def target_spec(self) -> AlgebraSpec:
        return AlgebraSpec.quadratic(self.m, self.characteristic)


@lru_cache(maxsize=None)
def _block_sum(es: EmbeddingSpec, j: int) -> AlgebraElement:
    lo, hi = es.offsets[j], es.offsets[j + 1]
    target = es.target_spec
    return AlgebraElement(
        target, {Monomial.variable(es.m, k): 1 for k in range(lo, hi)}
    )


@lru_cache(maxsize=None)
def _block_power(es: EmbeddingSpec, j: int, e: int) -> AlgebraElement:
    if e == 0:
        return AlgebraElement.one(es.target_spec)
    return multiply(_block_power(es, j, e - 1), _block_sum(es, j))


def phi_monomial(es: EmbeddingSpec, exponents: tuple[int, ...]) -> AlgebraElement:
    """Image of y^e under the block-sum substitution, computed in the target."""
    if len(exponents) != es.n:
        raise ValueError("exponent tuple has the wrong number of variables")
    out = AlgebraElement.one(es.target_spec)
    for j, e in enumerate(exponents):
        if e:
            out = multiply(out, _block_power(es, j, e))
            if out.is_zero:
                break
    return out


def phi(es: EmbeddingSpec, f: Union[AlgebraElement, Mapping]) -> AlgebraElement:
    """Image of a source polynomial (reduced or not) in the target algebra."""
    if isinstance(f, AlgebraElement):
        items = [(m.exponents, c) for m, c in f.terms.items()]
    else:
        items = []
        for key, c in f.items():
            exps = key.exponents if isinstance(key, Monomial) else tuple(key)
            items.append((exps, c))
    out = AlgebraElement.zero(es.target_spec)
    for exps, c in items:
        out = out + phi_monomial(es, exps).scale(c)
    return out


def phi_matrix(es: EmbeddingSpec, degree: int) -> ExactMatrix:
    """Matrix of the degree-j piece: source basis columns, target basis rows."""
    src = graded_basis(es.source_spec, degree)
    pos = basis_positions(es.target_spec, degree)
    nrows, ncols = len(pos), len(src)
    rows = [[0] * ncols for _ in range(nrows)]
    for col, u in enumerate(src):
        img = phi_monomial(es, u.exponents)
        for v, c in img.terms.items():
            rows[pos[v]][col] = c
    char = es.characteristic
    if not rows:
        return ExactMatrix.zeros(0, ncols, GF if char else ZZ, char or None)
    return ExactMatrix.from_rows(rows, GF if char else ZZ, char or None)


@dataclass(frozen=True)
class SocleImageRecord:
    """Image of the source socle monomial: the scalar on x_1...x_m."""

    m: int
    scalar: int
    scalar_in_field: int
    nonzero: bool
    ok: bool


def verify_socle_image(es: EmbeddingSpec) -> SocleImageRecord:
    """Check phi(y_1^{a_1} ... y_n^{a_n}) == prod(a_j!) * x_1...x_m.

    In small characteristic the scalar may vanish; that is recorded, not an
    error: the identity is checked with the scalar reduced into the field.
    """
    scalar = prod(factorial(a) for a in es.powers)
    target = es.target_spec
    scalar_in_field = target.normalize_coeff(scalar)
    image = phi_monomial(es, es.powers)
    expected = AlgebraElement(
        target, {Monomial((1,) * es.m): scalar_in_field} if scalar_in_field else {}
    )
    return SocleImageRecord(
        m=es.m,
        scalar=scalar,
        scalar_in_field=scalar_in_field,
        nonzero=bool(scalar_in_field),
        ok=image == expected,
    )


@dataclass(frozen=True)
class DegreeRankRecord:
    """Rank of the degree-j piece of the substitution matrix."""

    degree: int
    dim_source: int
    dim_target: int
    rank: int
    ok: bool


@dataclass(frozen=True)
class KernelDimsRecord:
    degrees: tuple[DegreeRankRecord, ...]

    @property
    def all_ok(self) -> bool:
        return all(d.ok for d in self.degrees)


def verify_kernel_dims(es: EmbeddingSpec, up_to_degree: int | None = None) -> KernelDimsRecord:
    """Certify injectivity degree by degree: rank == source dimension."""
    top = es.m if up_to_degree is None else up_to_degree
    hv = hilbert_vector(es.source_spec)
    probe = next_prime(es.m)
    records = []
    for j in range(top + 1):
        dim_src = hv[j] if j <= es.m else 0
        mat = phi_matrix(es, j)
        rr = certified_rank(mat, probe_prime=probe)
        records.append(
            DegreeRankRecord(
                degree=j,
                dim_source=dim_src,
                dim_target=comb(es.m, j),
                rank=rr.rank,
                ok=rr.rank == dim_src,
            )
        )
    return KernelDimsRecord(tuple(records))


@dataclass(frozen=True)
class EmbeddedMapCheck:
    """Composite check: target middle map restricted to the embedded source."""

    source_degree: int
    power: int
    dim_source: int
    rank: int
    ok: bool


@dataclass(frozen=True)
class TransferRecord:
    """Agreement between the direct SLP run and the embedded route."""

    direct: LefschetzReport
    embedded: tuple[EmbeddedMapCheck, ...]
    slp_direct: bool
    slp_via_embedding: bool

    @property
    def agree(self) -> bool:
        return self.slp_direct == self.slp_via_embedding


def transfer_slp(es: EmbeddingSpec) -> TransferRecord:
    """Decide SLP for the sum of source variables along both routes.

    Route one runs the direct check on the source algebra.  Route two pushes
    each source graded piece into the quadratic algebra and asks the target
    middle map to stay injective on the image; since source graded pieces in
    complementary degrees have equal dimension, full column rank of the
    composite decides the source middle map.
    """
    m = es.m
    source = es.source_spec
    target = es.target_spec
    hv = hilbert_vector(source)
    direct = slp_check(source, LinearForm.ones(es.n), mode="auto", method="dense")
    probe = next_prime(m)
    records = []
    for i in range((m + 1) // 2):
        t = m - 2 * i
        mid = build_matrix(target, LinearForm.ones(m), i, t).matrix
        composite = mat_mul(mid, phi_matrix(es, i))
        rr = certified_rank(composite, probe_prime=probe)
        records.append(
            EmbeddedMapCheck(
                source_degree=i,
                power=t,
                dim_source=hv[i],
                rank=rr.rank,
                ok=rr.rank == hv[i],
            )
        )
    via = all(r.ok for r in records)
    return TransferRecord(
        direct=direct,
        embedded=tuple(records),
        slp_direct=direct.slp,
        slp_via_embedding=via,
    )
