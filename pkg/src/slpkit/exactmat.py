"""Dense exact matrices over ZZ, QQ and F_p: products, rank, determinant.

Rank over the integers uses fraction-free (one-step division) elimination, in
which every intermediate entry is a minor of the input, so the arithmetic
stays in ZZ and the final pivot of a full elimination is the determinant up
to the row-swap sign.  Rank over F_p uses ordinary row reduction; for
p < 2^31 the rows are int64 numpy vectors (products stay below 2^62), with a
plain-object fallback for larger primes.

A full rank mod one prime certifies full rank over Q (specialization can
only lose rank), which is the cheap one-sided check behind certified_rank;
rank deficits are always re-established by the exact integer elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from ._primes import is_prime

ZZ = "ZZ"
QQ = "QQ"
GF = "Fp"

# default probe prime for certified_rank: large, numpy-safe (p^2 < 2^63)
DEFAULT_PROBE_PRIME = 2**31 - 1

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix; entries row-major in a single coefficient domain."""

    rows: int
    cols: int
    entries: tuple
    domain: str = ZZ
    modulus: int | None = None

    def __post_init__(self) -> None:
        entries = self.entries
        if not isinstance(entries, tuple):
            entries = tuple(entries)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        if self.domain == GF:
            p = self.modulus
            if p is None or not is_prime(p):
                raise ValueError("F_p matrices need a prime modulus")
            entries = tuple(int(e) % p for e in entries)
        elif self.domain == QQ:
            if self.modulus is not None:
                raise ValueError("modulus is only meaningful for F_p")
            entries = tuple(e if isinstance(e, Fraction) else Fraction(e) for e in entries)
        elif self.domain == ZZ:
            if self.modulus is not None:
                raise ValueError("modulus is only meaningful for F_p")
            if any(isinstance(e, Fraction) for e in entries):
                raise TypeError("fractional entry in an integer matrix")
            entries = tuple(int(e) for e in entries)
        else:
            raise ValueError(f"unknown domain {self.domain!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Scalar]],
        domain: str = ZZ,
        modulus: int | None = None,
    ) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(e for r in rows for e in r)
        return cls(nrows, ncols, flat, domain, modulus)

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: str = ZZ, modulus: int | None = None) -> "ExactMatrix":
        return cls(rows, cols, (0,) * (rows * cols), domain, modulus)

    @classmethod
    def identity(cls, k: int, domain: str = ZZ, modulus: int | None = None) -> "ExactMatrix":
        flat = tuple(1 if r == c else 0 for r in range(k) for c in range(k))
        return cls(k, k, flat, domain, modulus)

    def entry(self, r: int, c: int) -> Scalar:
        return self.entries[r * self.cols + c]

    def to_rows(self) -> list[list]:
        c = self.cols
        return [list(self.entries[r * c : (r + 1) * c]) for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        flat = tuple(self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows))
        return ExactMatrix(self.cols, self.rows, flat, self.domain, self.modulus)

    def to_csv(self) -> str:
        if self.domain == QQ:
            raise ValueError("CSV export is defined for integer entries only")
        out = []
        for r in range(self.rows):
            out.append(",".join(str(e) for e in self.entries[r * self.cols : (r + 1) * self.cols]))
        return "\n".join(out) + "\n"

    @classmethod
    def from_csv(cls, text: str, domain: str = ZZ, modulus: int | None = None) -> "ExactMatrix":
        rows = []
        for line in text.strip().splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append([int(tok) for tok in line.split(",")])
        if not rows:
            return cls.zeros(0, 0, domain, modulus)
        return cls.from_rows(rows, domain, modulus)

    def to_json_dict(self) -> dict:
        if self.domain == QQ:
            entry_rows = [[str(e) for e in row] for row in self.to_rows()]
        else:
            entry_rows = self.to_rows()
        data = {"rows": self.rows, "cols": self.cols, "entries": entry_rows, "domain": self.domain}
        if self.domain == GF:
            data["modulus"] = self.modulus
        return data

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ExactMatrix":
        domain = data.get("domain", ZZ)
        raw = data["entries"]
        if domain == QQ:
            rows = [[Fraction(e) for e in row] for row in raw]
        else:
            rows = [[int(e) for e in row] for row in raw]
        if not rows:
            return cls.zeros(int(data["rows"]), int(data["cols"]), domain, data.get("modulus"))
        m = cls.from_rows(rows, domain, data.get("modulus"))
        if m.rows != int(data["rows"]) or m.cols != int(data["cols"]):
            raise ValueError("declared dimensions do not match the entries")
        return m


@dataclass(frozen=True)
class RankResult:
    """Rank plus how it was established.

    pivots: (row, column) pairs using original row indices, when tracked.
    pivot_minor_det: fraction-free path only; determinant (up to sign) of the
    square submatrix on the pivot rows/columns.
    notes: recorded anomalies such as fallbacks from the structured path.
    """

    rank: int
    method: str
    pivots: tuple[tuple[int, int], ...] | None = None
    pivot_minor_det: int | None = None
    notes: tuple[str, ...] = ()


def _same_domain(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.domain != b.domain or a.modulus != b.modulus:
        raise ValueError("matrices live in different coefficient domains")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Exact matrix product."""
    _same_domain(a, b)
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    arows = a.to_rows()
    bcols = b.transpose().to_rows()
    out = []
    for ar in arows:
        out.append([sum(x * y for x, y in zip(ar, bc)) for bc in bcols])
    if not out:
        return ExactMatrix.zeros(a.rows, b.cols, a.domain, a.modulus)
    return ExactMatrix.from_rows(out, a.domain, a.modulus)


def scale(a: ExactMatrix, c: Scalar) -> ExactMatrix:
    return ExactMatrix(a.rows, a.cols, tuple(e * c for e in a.entries), a.domain, a.modulus)


def block_assemble(tl: ExactMatrix, tr: ExactMatrix, bl: ExactMatrix, br: ExactMatrix) -> ExactMatrix:
    """Stack [[tl, tr], [bl, br]]; zero-dimension blocks are allowed."""
    for other in (tr, bl, br):
        _same_domain(tl, other)
    if tl.rows != tr.rows or bl.rows != br.rows:
        raise ValueError("row counts of horizontal neighbours differ")
    if tl.cols != bl.cols or tr.cols != br.cols:
        raise ValueError("column counts of vertical neighbours differ")
    rows = []
    for r in range(tl.rows):
        rows.append(list(tl.entries[r * tl.cols : (r + 1) * tl.cols]) + list(tr.entries[r * tr.cols : (r + 1) * tr.cols]))
    for r in range(bl.rows):
        rows.append(list(bl.entries[r * bl.cols : (r + 1) * bl.cols]) + list(br.entries[r * br.cols : (r + 1) * br.cols]))
    if not rows:
        return ExactMatrix.zeros(0, tl.cols + tr.cols, tl.domain, tl.modulus)
    return ExactMatrix.from_rows(rows, tl.domain, tl.modulus)


def _fraction_free_echelon(tails: list[list[int]]) -> tuple[int, tuple, int, int]:
    """One-step fraction-free elimination; consumes its input rows.

    Returns (rank, pivots, sign, last_pivot).  Pivot rows are reported with
    their original indices; first non-zero entry in column order is the pivot
    rule, so the run is deterministic.
    """
    nrows = len(tails)
    ncols = len(tails[0]) if nrows else 0
    ids = list(range(nrows))
    pivots: list[tuple[int, int]] = []
    prev = 1
    sign = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if tails[i][0]:
                pr = i
                break
        if pr < 0:
            for i in range(r, nrows):
                del tails[i][0]
            continue
        if pr != r:
            tails[r], tails[pr] = tails[pr], tails[r]
            ids[r], ids[pr] = ids[pr], ids[r]
            sign = -sign
        piv_row = tails[r]
        piv = piv_row[0]
        for i in range(r + 1, nrows):
            ti = tails[i]
            f = ti[0]
            if f:
                tails[i] = [
                    (piv * a - f * b) // prev
                    for a, b in zip(islice(ti, 1, None), islice(piv_row, 1, None))
                ]
            elif piv == 1 and prev == 1:
                del ti[0]
            else:
                tails[i] = [(piv * a) // prev for a in islice(ti, 1, None)]
        pivots.append((ids[r], col))
        prev = piv
        r += 1
    return r, tuple(pivots), sign, prev


def rank_fraction_free(m: ExactMatrix) -> RankResult:
    """Exact rank over the integers via fraction-free elimination."""
    if m.domain != ZZ:
        raise ValueError("fraction-free elimination expects an integer matrix")
    if m.rows == 0 or m.cols == 0:
        return RankResult(0, "fraction-free", ())
    rank, pivots, _sign, last = _fraction_free_echelon(m.to_rows())
    return RankResult(rank, "fraction-free", pivots, last if rank else None)


def _echelon_mod_p_numpy(rowdata: list[list[int]], p: int) -> tuple[int, tuple]:
    a = np.array(rowdata, dtype=np.int64)
    nrows, ncols = a.shape
    ids = list(range(nrows))
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
            ids[r], ids[pr] = ids[pr], ids[r]
        piv = int(a[r, c])
        if piv != 1:
            a[r, c:] = (a[r, c:] * pow(piv, -1, p)) % p
        nzb = np.flatnonzero(a[r + 1 :, c])
        if nzb.size:
            idx = nzb + (r + 1)
            a[idx, c:] = (a[idx, c:] - np.outer(a[idx, c], a[r, c:])) % p
        pivots.append((ids[r], c))
        r += 1
    return r, tuple(pivots)


def _echelon_mod_p_object(rowdata: list[list[int]], p: int) -> tuple[int, tuple]:
    nrows = len(rowdata)
    ncols = len(rowdata[0]) if nrows else 0
    ids = list(range(nrows))
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rowdata[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rowdata[r], rowdata[pr] = rowdata[pr], rowdata[r]
            ids[r], ids[pr] = ids[pr], ids[r]
        inv = pow(rowdata[r][c], -1, p)
        if inv != 1:
            rowdata[r] = [x * inv % p for x in rowdata[r]]
        base = rowdata[r]
        for i in range(r + 1, nrows):
            f = rowdata[i][c]
            if f:
                rowdata[i] = [(x - f * y) % p for x, y in zip(rowdata[i], base)]
        pivots.append((ids[r], c))
        r += 1
    return r, tuple(pivots)


def rank_mod_p(m: ExactMatrix, p: int) -> RankResult:
    """Rank over F_p; integer matrices are reduced mod p first."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m.domain == GF:
        if m.modulus != p:
            raise ValueError("matrix already lives over a different prime field")
        rowdata = m.to_rows()
    elif m.domain == ZZ:
        rowdata = [[e % p for e in row] for row in m.to_rows()]
    else:
        raise ValueError("rank mod p expects an integer or F_p matrix")
    if m.rows == 0 or m.cols == 0:
        return RankResult(0, "modular", ())
    if p < 2**31:
        rank, pivots = _echelon_mod_p_numpy(rowdata, p)
    else:
        rank, pivots = _echelon_mod_p_object(rowdata, p)
    return RankResult(rank, "modular", pivots)


def _row_integerized(m: ExactMatrix) -> ExactMatrix:
    """Scale each row to integers (rank-preserving, not determinant-preserving)."""
    rows = []
    for row in m.to_rows():
        mult = lcm(*(e.denominator for e in row)) if row else 1
        rows.append([int(e * mult) for e in row])
    if not rows:
        return ExactMatrix.zeros(m.rows, m.cols, ZZ)
    return ExactMatrix.from_rows(rows, ZZ)


def rank(m: ExactMatrix) -> RankResult:
    """Exact rank in the matrix's own domain."""
    if m.domain == GF:
        return rank_mod_p(m, m.modulus)
    if m.domain == QQ:
        return rank_fraction_free(_row_integerized(m))
    return rank_fraction_free(m)


def certified_rank(m: ExactMatrix, probe_prime: int = DEFAULT_PROBE_PRIME) -> RankResult:
    """Exact rank with a cheap modular certificate for the full-rank case.

    A single elimination mod probe_prime either certifies maximal rank or the
    run falls through to the exact integer elimination; the result is exact
    either way, only the cost is asymmetric.
    """
    if m.domain == GF:
        return rank_mod_p(m, m.modulus)
    mm = _row_integerized(m) if m.domain == QQ else m
    want = min(mm.rows, mm.cols)
    if want == 0:
        return RankResult(0, "modular", ())
    rr = rank_mod_p(mm, probe_prime)
    if rr.rank == want:
        return rr
    return rank_fraction_free(mm)


def _det_mod_p(rowdata: list[list[int]], p: int) -> int:
    n = len(rowdata)
    det = 1
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, n):
            if rowdata[i][c]:
                pr = i
                break
        if pr < 0:
            return 0
        if pr != r:
            rowdata[r], rowdata[pr] = rowdata[pr], rowdata[r]
            det = -det
        piv = rowdata[r][c]
        det = det * piv % p
        inv = pow(piv, -1, p)
        base = [x * inv % p for x in rowdata[r]]
        rowdata[r] = base
        for i in range(r + 1, n):
            f = rowdata[i][c]
            if f:
                rowdata[i] = [(x - f * y) % p for x, y in zip(rowdata[i], base)]
        r += 1
    return det % p


def determinant(m: ExactMatrix) -> Scalar:
    """Exact determinant; raises for non-square input."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if m.rows == 0:
        return 1 % m.modulus if m.domain == GF else (Fraction(1) if m.domain == QQ else 1)
    if m.domain == GF:
        return _det_mod_p(m.to_rows(), m.modulus)
    if m.domain == QQ:
        denom = 1
        rows = []
        for row in m.to_rows():
            mult = lcm(*(e.denominator for e in row))
            denom *= mult
            rows.append([int(e * mult) for e in row])
        rank_, _piv, sign, last = _fraction_free_echelon(rows)
        if rank_ < m.rows:
            return Fraction(0)
        return Fraction(sign * last, denom)
    rank_, _piv, sign, last = _fraction_free_echelon(m.to_rows())
    if rank_ < m.rows:
        return 0
    return sign * last
