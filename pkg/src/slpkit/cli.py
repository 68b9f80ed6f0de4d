"""Command-line interface.

Human-readable tables go to stdout; --out writes the canonical JSON (or CSV
for raw matrices).  JSON output is byte-identical across runs with the same
inputs except for fields under "timing" and per-map "ms".  Exit codes for
the slp command: 0 the property holds, 1 it fails, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from math import comb

from ._primes import primes_in_range
from .blockrec import block_pivot_rank, decompose, recursive_middle_rank
from .embedding import EmbeddingSpec, transfer_slp, verify_kernel_dims, verify_socle_image
from .exactmat import ExactMatrix, determinant, mat_mul, rank_mod_p
from .lefschetz import (
    LinearForm,
    build_matrix,
    char_search,
    max_rank_check,
    middle_pairs,
    slp_check,
)
from .quotient import AlgebraSpec, hilbert_vector


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus its knobs."""

    command: str
    spec: AlgebraSpec | None
    form: LinearForm | None
    mode: str
    method: str
    out: str | None
    format: str
    jobs: int
    seed: int
    primes: tuple[int, ...] | None
    i: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_prime_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--quadratic", type=int, metavar="N", help="square-free algebra on N variables")
    group.add_argument("--exponents", type=_parse_int_list, metavar="D1,D2,...", help="killed powers per variable")
    p.add_argument("--char", type=int, default=0, metavar="C", help="coefficient characteristic, 0 or a prime")


def _add_form_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--form", type=_parse_int_list, metavar="C1,C2,...", help="form coefficients (default: all ones)")


def _add_output_flags(p: argparse.ArgumentParser, default_format: str = "json") -> None:
    p.add_argument("--out", metavar="PATH", help="write machine output to PATH")
    p.add_argument("--format", choices=("json", "csv"), default=default_format)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slpkit",
        description="multiplication matrices and strong Lefschetz verdicts for monomial complete intersections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="graded dimensions of the algebra")
    _add_spec_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("matrix", help="one multiplication matrix")
    _add_spec_flags(p)
    _add_form_flag(p)
    p.add_argument("--i", type=int, required=True, help="source degree")
    p.add_argument("--t", type=int, required=True, help="power of the form")
    _add_output_flags(p, default_format="csv")

    p = sub.add_parser("rank", help="rank of one multiplication matrix")
    _add_spec_flags(p)
    _add_form_flag(p)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("dense", "block", "auto"), default="auto")
    _add_output_flags(p)

    p = sub.add_parser("slp", help="strong Lefschetz verdict (exit 0 holds, 1 fails)")
    _add_spec_flags(p)
    _add_form_flag(p)
    p.add_argument("--mode", choices=("full", "middle", "auto"), default="auto")
    p.add_argument("--method", choices=("dense", "block", "auto"), default="auto")
    p.add_argument("--jobs", type=int, default=1)
    _add_output_flags(p)

    p = sub.add_parser("char-search", help="probe the same form over a range of prime fields")
    _add_spec_flags(p)
    _add_form_flag(p)
    p.add_argument("--primes", type=_parse_prime_range, required=True, metavar="LO..HI")
    p.add_argument("--mode", choices=("full", "middle", "auto"), default="auto")
    _add_output_flags(p)

    p = sub.add_parser("embed-verify", help="verify the quadratic embedding of the algebra")
    _add_spec_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("bench", help="compare rank methods on the middle maps")
    _add_spec_flags(p)
    _add_form_flag(p)
    p.add_argument("--methods", default="dense,block", metavar="M1,M2")
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)

    p = sub.add_parser("selftest", help="quick internal checks (exit 0 all pass)")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _spec_from_args(args) -> AlgebraSpec:
    if args.quadratic is not None:
        if args.quadratic < 1:
            raise ValueError("need at least one variable")
        return AlgebraSpec.quadratic(args.quadratic, args.char)
    return AlgebraSpec(len(args.exponents), args.exponents, args.char)


def _form_from_args(args, n: int) -> LinearForm:
    if getattr(args, "form", None) is None:
        return LinearForm.ones(n)
    if len(args.form) != n:
        raise ValueError("form coefficient count does not match the variable count")
    return LinearForm(args.form)


def _emit(args, payload: dict, csv_text: str | None = None) -> None:
    if args.out:
        if args.format == "csv":
            if csv_text is None:
                raise ValueError("CSV output is not defined for this command")
            text = csv_text
        else:
            text = json.dumps(payload, indent=2) + "\n"
        with open(args.out, "w") as fh:
            fh.write(text)


def _cmd_hilbert(args) -> int:
    spec = _spec_from_args(args)
    hv = hilbert_vector(spec)
    line = ",".join(str(h) for h in hv)
    print(line)
    _emit(args, {"spec": spec.to_json_dict(), "h": list(hv)}, csv_text=line + "\n")
    return 0


def _cmd_matrix(args) -> int:
    spec = _spec_from_args(args)
    form = _form_from_args(args, spec.n)
    mm = build_matrix(spec, form, args.i, args.t)
    csv_text = mm.matrix.to_csv() if mm.matrix.domain != "QQ" else None
    if csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        print(json.dumps(mm.matrix.to_json_dict()))
    payload = {
        "spec": spec.to_json_dict(),
        "form": form.to_json(),
        "i": args.i,
        "t": args.t,
        "matrix": mm.matrix.to_json_dict(),
    }
    _emit(args, payload, csv_text=csv_text)
    return 0


def _cmd_rank(args) -> int:
    spec = _spec_from_args(args)
    form = _form_from_args(args, spec.n)
    i, t = args.i, args.t
    method = args.method
    is_middle = spec.is_quadratic and t == spec.n - 2 * i and 0 <= i < spec.n / 2
    if method == "auto":
        method = "block" if is_middle else "dense"
    if method == "block" and not is_middle:
        raise ValueError("block method applies to middle maps of quadratic specs only")
    start = time.perf_counter()
    if method == "block":
        rr = recursive_middle_rank(spec, form, i)
        nrows, ncols = spec.dim(i + t), spec.dim(i)
        maximal = rr.rank == min(nrows, ncols)
    else:
        mm = build_matrix(spec, form, i, t)
        nrows, ncols = mm.matrix.rows, mm.matrix.cols
        maximal, rr = max_rank_check(mm)
    ms = (time.perf_counter() - start) * 1000.0
    print(
        f"rank {rr.rank} of {nrows}x{ncols}"
        f" ({'maximal' if maximal else 'NOT maximal'}; {rr.method}; {ms:.2f} ms)"
    )
    payload = {
        "spec": spec.to_json_dict(),
        "form": form.to_json(),
        "i": i,
        "t": t,
        "rows": nrows,
        "cols": ncols,
        "rank": rr.rank,
        "maximal": maximal,
        "method": rr.method,
        "notes": list(rr.notes),
        "timing": {"total_ms": round(ms, 3)},
    }
    _emit(args, payload)
    return 0


def _cmd_slp(args) -> int:
    spec = _spec_from_args(args)
    form = _form_from_args(args, spec.n)
    report = slp_check(spec, form, mode=args.mode, method=args.method, jobs=args.jobs)
    for c in report.maps:
        mark = "ok " if c.maximal else "FAIL"
        print(
            f"  {mark} i={c.i:<2d} t={c.t:<2d} {c.rows}x{c.cols}"
            f" rank={c.rank} ({c.method}, {c.ms:.2f} ms)"
        )
    print(f"SLP {'holds' if report.slp else 'fails'} for {spec.n} variables, characteristic {spec.characteristic}")
    _emit(args, report.to_json_dict())
    return 0 if report.slp else 1


def _cmd_char_search(args) -> int:
    spec = _spec_from_args(args)
    form = _form_from_args(args, spec.n)
    lo, hi = args.primes
    primes = primes_in_range(lo, hi)
    probes = char_search(spec, form, primes, mode=args.mode)
    for pr in probes:
        if pr.slp:
            print(f"p={pr.prime}: holds")
        else:
            failing = " ".join(f"(i={i},t={t})" for i, t in pr.failing)
            print(f"p={pr.prime}: fails at {failing}")
    payload = {
        "spec": spec.to_json_dict(),
        "form": form.to_json(),
        "primes": [
            {"p": pr.prime, "slp": pr.slp, "failing": [list(ft) for ft in pr.failing]}
            for pr in probes
        ],
    }
    _emit(args, payload)
    return 0


def _cmd_embed_verify(args) -> int:
    spec = _spec_from_args(args)
    es = EmbeddingSpec.from_spec(spec)
    start = time.perf_counter()
    socle = verify_socle_image(es)
    kernel = verify_kernel_dims(es)
    transfer = transfer_slp(es)
    ms = (time.perf_counter() - start) * 1000.0
    print(f"embedding into {es.m} square-free variables")
    print(f"socle scalar {socle.scalar} ({'non-zero' if socle.nonzero else 'zero'} in the field): {'ok' if socle.ok else 'MISMATCH'}")
    for d in kernel.degrees:
        mark = "ok " if d.ok else "FAIL"
        print(f"  {mark} degree {d.degree}: rank {d.rank} of {d.dim_target}x{d.dim_source}")
    print(f"slp direct={transfer.slp_direct} via-embedding={transfer.slp_via_embedding} agree={transfer.agree}")
    payload = {
        "m": es.m,
        "powers": list(es.powers),
        "source_exponents": list(es.source_spec.exponents),
        "characteristic": es.characteristic,
        "socle_scalar": str(socle.scalar),
        "socle_nonzero": socle.nonzero,
        "socle_ok": socle.ok,
        "degrees": [
            {"j": d.degree, "dim_source": d.dim_source, "rank": d.rank, "ok": d.ok}
            for d in kernel.degrees
        ],
        "slp_direct": transfer.slp_direct,
        "slp_via_embedding": transfer.slp_via_embedding,
        "agree": transfer.agree,
        "timing": {"total_ms": round(ms, 3)},
    }
    _emit(args, payload)
    ok = socle.ok and kernel.all_ok and transfer.agree
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    spec = _spec_from_args(args)
    form = _form_from_args(args, spec.n)
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    for m in methods:
        if m not in ("dense", "block"):
            raise ValueError(f"unknown method {m!r}")
    if "block" in methods and not spec.is_quadratic:
        raise ValueError("block method is defined for quadratic specs only")
    records = []
    ranks: dict[tuple[int, int], set[int]] = {}
    for i, t in middle_pairs(spec.socle_degree):
        nrows, ncols = spec.dim(i + t), spec.dim(i)
        for method in methods:
            start = time.perf_counter()
            if method == "block":
                stats: dict = {}
                rr = recursive_middle_rank(spec, form, i, stats=stats)
                peak_bits = stats.get("peak_bits", 0)
            else:
                mm = build_matrix(spec, form, i, t)
                peak_bits = max((abs(e).bit_length() for e in mm.matrix.entries), default=0)
                _maximal, rr = max_rank_check(mm)
            ms = (time.perf_counter() - start) * 1000.0
            ranks.setdefault((i, t), set()).add(rr.rank)
            records.append(
                {
                    "n": spec.n,
                    "i": i,
                    "t": t,
                    "rows": nrows,
                    "cols": ncols,
                    "method": method,
                    "rank": rr.rank,
                    "peak_bits": peak_bits,
                    "ms": round(ms, 3),
                }
            )
            print(
                f"n={spec.n} i={i} t={t} {nrows}x{ncols} {method:<5s}"
                f" rank={rr.rank} peak_bits={peak_bits} {ms:.2f} ms"
            )
    disagreements = {k: v for k, v in ranks.items() if len(v) > 1}
    if disagreements:
        raise RuntimeError(f"rank methods disagree: {disagreements}")
    print("all methods agree on every rank")
    _emit(args, {"spec": spec.to_json_dict(), "form": form.to_json(), "records": records})
    return 0


def _cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool]] = []

    spec4 = AlgebraSpec.quadratic(4)
    mm = build_matrix(spec4, LinearForm.ones(4), 1, 2)
    known = ExactMatrix.from_rows([[2, 2, 2, 0], [2, 2, 0, 2], [2, 0, 2, 2], [0, 2, 2, 2]])
    checks.append(("four-variable power-two matrix", mm.matrix == known))
    checks.append(("its determinant is -48", determinant(mm.matrix) == -48))

    ok = True
    for n in range(1, 7):
        qs = AlgebraSpec.quadratic(n)
        ok = ok and slp_check(qs, LinearForm.ones(n), method="dense").slp
        ok = ok and slp_check(qs, LinearForm.ones(n), method="block").slp
    checks.append(("square-free sweep holds through six variables", ok))

    char2 = slp_check(AlgebraSpec.quadratic(3, 2), LinearForm.ones(3))
    checks.append(("three variables fail in characteristic two", not char2.slp))

    probes = char_search(AlgebraSpec.quadratic(4), LinearForm.ones(4), (2, 3, 5, 7, 11, 13))
    failing = {pr.prime for pr in probes if not pr.slp}
    checks.append(("four-variable failures are exactly {2, 3}", failing == {2, 3}))

    ok = True
    for _ in range(50):
        mdim, ndim, pdim = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
        p = 101
        while True:
            pivot = ExactMatrix.from_rows(
                [[rng.randrange(p) for _ in range(ndim)] for _ in range(ndim)], "Fp", p
            )
            if determinant(pivot) != 0:
                break
        a = ExactMatrix.from_rows([[rng.randrange(p) for _ in range(ndim)] for _ in range(mdim)], "Fp", p)
        b = ExactMatrix.from_rows([[rng.randrange(p) for _ in range(pdim)] for _ in range(ndim)], "Fp", p)
        try:
            block_pivot_rank(a, b, pivot, check=True)
        except RuntimeError:
            ok = False
            break
    checks.append(("pivot-block rank identity on seeded F_101 trials", ok))

    es = EmbeddingSpec.from_powers((2, 2))
    socle = verify_socle_image(es)
    kern = verify_kernel_dims(es)
    trans = transfer_slp(es)
    checks.append(
        ("embedding of the (2,2) algebra verifies", socle.ok and socle.scalar == 4 and kern.all_ok and trans.agree)
    )

    dec = decompose(spec4, LinearForm.ones(4), 1, 2)
    checks.append(("block decomposition reassembles the matrix", dec.assemble() == mm.matrix))

    all_ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'}: {name}")
        all_ok = all_ok and passed
    return 0 if all_ok else 1


_DISPATCH = {
    "hilbert": _cmd_hilbert,
    "matrix": _cmd_matrix,
    "rank": _cmd_rank,
    "slp": _cmd_slp,
    "char-search": _cmd_char_search,
    "embed-verify": _cmd_embed_verify,
    "bench": _cmd_bench,
    "selftest": _cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
