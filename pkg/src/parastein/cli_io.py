"""Deterministic JSON command-line front end.

Every verb prints exactly one JSON document on standard output.  Exit
codes: 0 success, 2 precondition/usage failure (with {"error": ...} on
stdout), 3 resource-bound failure.  Human-readable notes go to stderr
under --verbose.
"""

from __future__ import annotations

import json
import sys

import click

from . import ext_calc, kl_mult, segments, steinberg_mult
from .cosets import (
    BlockSet,
    coset_matrix,
    double_coset_count_oracle,
    format_blockset,
    min_double_coset_reps,
    modulus_exponents,
    parse_blockset,
)
from .weyl_core import (
    BoundExceededError,
    MultiWeyl,
    Perm,
    bruhat_leq,
    enumerate_group,
    format_perm,
    format_word,
    left_ascents,
    left_descents,
    length,
    parse_perm,
    reduced_word,
    right_descents,
    support,
)


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _parse_roots(text: str, n: int) -> frozenset[int]:
    text = text.strip()
    if text == "-" or text == "":
        return frozenset()
    roots = frozenset(int(t) for t in text.split(","))
    bad = [i for i in roots if not 1 <= i <= n - 1]
    if bad:
        raise ValueError(f"roots {bad} out of range 1..{n - 1}")
    return roots


def _parse_multiweyl(text: str, n: int, d_L: int) -> MultiWeyl:
    parts = [p for p in text.split(";") if p.strip()]
    if len(parts) == 1 and d_L > 1:
        parts = parts * d_L
    if len(parts) != d_L:
        raise ValueError(f"expected {d_L} components separated by ';'")
    return tuple(parse_perm(p, n) for p in parts)


def _parse_rep(text: str, k: int) -> ext_calc.RepDescriptor:
    text = text.strip()
    if text == "st-an":
        return ext_calc.RepDescriptor("st-an")
    if ":" not in text:
        raise ValueError(f"malformed rep descriptor: {text!r}")
    tag, rest = text.split(":", 1)
    if tag in ("i", "v", "levi"):
        members = (
            frozenset()
            if rest.strip() in ("-", "")
            else frozenset(int(t) for t in rest.split(","))
        )
        bad = [i for i in members if not 1 <= i <= k - 1]
        if bad:
            raise ValueError(f"block indices {bad} out of range 1..{k - 1}")
        kind = {"i": "ind", "v": "steinberg", "levi": "levi-self"}[tag]
        return ext_calc.RepDescriptor(kind, members)
    if tag in ("sigma", "c"):
        if "@" in rest:
            idx_text, sig_text = rest.split("@", 1)
            idx, sig = int(idx_text), int(sig_text)
            kind = "sigma-comp" if tag == "sigma" else "constituent"
            return ext_calc.RepDescriptor(kind, frozenset(), idx, sig)
        if tag == "c":
            raise ValueError("constituent descriptors need the form c:j@sigma")
        return ext_calc.RepDescriptor("sigma", frozenset(), int(rest), None)
    raise ValueError(f"unknown rep descriptor tag: {tag!r}")


@click.group()
def cli() -> None:
    """Symbolic engine for coset combinatorics and multiplicity formulas."""


@cli.command("weyl")
@click.option("--n", type=int, required=True)
@click.option("--w", "w_text", type=str, required=True)
def weyl_cmd(n: int, w_text: str) -> None:
    w = parse_perm(w_text, n)
    _emit(
        {
            "w": format_perm(w),
            "length": length(w),
            "reduced_word": format_word(w),
            "support": sorted(support(w)),
            "left_descents": sorted(left_descents(w)),
            "right_descents": sorted(right_descents(w)),
            "ascents": sorted(left_ascents(w)),
        }
    )


@cli.command("cosets")
@click.option("--n", type=int, required=True)
@click.option("--i", "--I", "i_text", type=str, required=True)
@click.option("--j", "--J", "j_text", type=str, required=True)
@click.option("--matrices/--no-matrices", default=False)
def cosets_cmd(n: int, i_text: str, j_text: str, matrices: bool) -> None:
    I = _parse_roots(i_text, n)
    J = _parse_roots(j_text, n)
    reps = min_double_coset_reps(n, I, J)
    doc: dict = {
        "count": len(reps),
        "oracle_count": double_coset_count_oracle(n, I, J),
        "reps": [format_perm(w) for w in reps],
    }
    if matrices:
        doc["matrices"] = [coset_matrix(w, I, J) for w in reps]
    _emit(doc)


@cli.command("kl")
@click.option("--n", type=int, required=True)
@click.option("--x", "x_text", type=str, required=True)
@click.option("--w", "w_text", type=str, required=True)
def kl_cmd(n: int, x_text: str, w_text: str) -> None:
    x = parse_perm(x_text, n)
    w = parse_perm(w_text, n)
    _emit({"coeffs": list(kl_mult.kl_poly(x, w))})


@cli.command("mult")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--dl", "--dL", "d_l", type=int, default=1)
@click.option("--kset", "--K", "k_text", type=str, default="-")
@click.option("--w", "w_text", type=str, required=True)
def mult_cmd(r: int, k: int, d_l: int, k_text: str, w_text: str) -> None:
    K = parse_blockset(k_text, r, k)
    w = _parse_multiweyl(w_text, r * k, d_l)
    _emit({"K": format_blockset(K), "m": kl_mult.parabolic_verma_mult(K, w)})


@cli.command("steinberg-mult")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--dl", "--dL", "d_l", type=int, default=1)
@click.option("--w", "w_text", type=str, default=None)
@click.option("--j", "--J", "j_text", type=str, default="-")
@click.option("--s", "--S", "s_text", type=str, default="-")
@click.option("--max-len", type=int, default=None)
def steinberg_cmd(
    r: int, k: int, d_l: int, w_text: str | None, j_text: str, s_text: str, max_len: int | None
) -> None:
    S = parse_blockset(s_text, r, k)
    if w_text is not None:
        J = parse_blockset(j_text, r, k)
        w = _parse_multiweyl(w_text, r * k, d_l)
        m = steinberg_mult.steinberg_multiplicity(w, J, S)
        _emit(
            {
                "w": ";".join(format_perm(c) for c in w),
                "J": format_blockset(J),
                "S": format_blockset(S),
                "m": m,
            }
        )
        return
    out = steinberg_mult.enumerate_constituents(S, d_l, max_len)
    _emit(
        {
            "S": format_blockset(S),
            "constituents": [
                {
                    "w": ";".join(format_perm(c) for c in lab.w),
                    "J": format_blockset(lab.J),
                    "m": m,
                }
                for lab, m in out
            ],
        }
    )


@cli.command("jh")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
def jh_cmd(r: int, k: int) -> None:
    factors = segments.jh_factors(r, k)
    _emit({"count": len(factors), "factors": [format_blockset(f) for f in factors]})


@cli.command("segments")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--i", "--I", "i_text", type=str, default="-")
def segments_cmd(r: int, k: int, i_text: str) -> None:
    I = parse_blockset(i_text, r, k)
    segs = segments.pi_I_segments(r, k, I)
    _emit(
        {
            "I": format_blockset(I),
            "segments": [{"len": s.block_length, "twist": str(s.twist)} for s in segs],
        }
    )


@cli.command("jacquet")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
def jacquet_cmd(r: int, k: int) -> None:
    terms = segments.jacquet_decomposition(r, k)
    _emit(
        {
            "count": len(terms),
            "terms": [
                {"w": format_perm(w), "exponents": [str(e) for e in exps]}
                for w, exps in terms
            ],
        }
    )


@cli.command("tits-check")
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--analytic/--smooth", default=False)
@click.option("--s", "--S", "s_text", type=str, default="-")
@click.option("--dl", "--dL", "d_l", type=int, default=1)
@click.option("--max-len", type=int, default=None)
def tits_cmd(r: int, k: int, analytic: bool, s_text: str, d_l: int, max_len: int | None) -> None:
    if analytic:
        S = parse_blockset(s_text, r, k)
        ok = steinberg_mult.analytic_tits_euler_check(S, d_l, max_len)
        _emit({"mode": "analytic", "S": format_blockset(S), "ok": ok})
        return
    checked = 0
    ok = True
    for I in segments.jh_factors(r, k):
        checked += 1
        if not (
            steinberg_mult.smooth_tits_euler_check(I)
            and steinberg_mult.check_complex_squares_zero(I)
        ):
            ok = False
    _emit({"mode": "smooth", "ok": ok, "checked": checked})


@cli.command("ext-dim")
@click.option("--kind", type=click.Choice(["smooth", "analytic"]), required=True)
@click.option("--fixed-center/--free-center", default=False)
@click.option("--degree", type=int, required=True)
@click.option("--left", "left_text", type=str, required=True)
@click.option("--right", "right_text", type=str, required=True)
@click.option("--r", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--dl", "--dL", "d_l", type=int, default=1)
def ext_cmd(
    kind: str,
    fixed_center: bool,
    degree: int,
    left_text: str,
    right_text: str,
    r: int,
    k: int,
    d_l: int,
) -> None:
    q = ext_calc.ExtQuery(
        kind,
        fixed_center,
        degree,
        _parse_rep(left_text, k),
        _parse_rep(right_text, k),
        r,
        k,
        d_l,
    )
    ans = ext_calc.ext_dim(q)
    if ans.status == "not-determined":
        _emit({"status": "not-determined", "cite": ans.rule, "note": ans.note})
    else:
        _emit({"dim": ans.value, "cite": ans.rule})


@cli.command("selftest")
@click.option("--level", type=click.Choice(["quick", "full"]), default="quick")
def selftest_cmd(level: str) -> None:
    checks = run_selftest(level)
    _emit({"ok": True, "level": level, "checks": checks})


def run_selftest(level: str) -> int:
    """Run the cross-module invariant suites; raises on any failure and
    returns the number of checks performed."""
    from fractions import Fraction

    n_max = 5 if level == "quick" else 7
    k_max = 4 if level == "quick" else 5
    checks = 0

    def require(cond: bool, msg: str) -> None:
        nonlocal checks
        checks += 1
        if not cond:
            raise AssertionError(f"selftest failure: {msg}")

    # Bruhat partial order sanity and coset counts.
    for n in range(1, n_max + 1):
        group = enumerate_group(n)
        w0 = group[-1]
        require(length(w0) == n * (n - 1) // 2, "longest length")
        for w in group:
            require(bruhat_leq(group[0], w) and bruhat_leq(w, w0), "order extremes")
    for n in range(2, min(n_max, 5) + 1):
        roots = list(range(1, n))
        for i_mask in range(1 << len(roots)):
            I = frozenset(roots[t] for t in range(len(roots)) if i_mask >> t & 1)
            got = len(min_double_coset_reps(n, I, I))
            require(got == double_coset_count_oracle(n, I, I), "coset count oracle")

    # Modulus exponents pair to zero against block sizes.
    for k in range(1, k_max + 1):
        for r in (1, 2):
            for I in segments.jh_factors(r, k):
                exps = modulus_exponents(I)
                parts = I.partition()
                require(
                    sum(a * p for a, p in zip(exps, parts)) == 0, "modulus pairing"
                )
                segs = segments.pi_I_segments(r, k, I)
                require(
                    [s.block_length for s in segs] == list(parts), "segment shapes"
                )

    # Segment twists: base tuple centrality and Jacquet distinctness.
    for k in range(1, k_max + 1):
        for r in (1, 2, 3):
            base = segments.pi_base_twists(r, k)
            require(
                sum((b - (k - i)) * r for i, b in enumerate(base, start=1))
                == Fraction(0),
                "twist centrality",
            )
            tuples = [t for _, t in segments.jacquet_decomposition(r, k)]
            require(len(set(tuples)) == len(tuples), "jacquet distinctness")

    # KL suite on a small group.
    n = 4 if level == "quick" else 5
    group = enumerate_group(n)
    for x in group:
        for w in group:
            p = kl_mult.kl_poly(x, w)
            if not bruhat_leq(x, w):
                require(p == (), "vanishing off the order")
            else:
                require(p[0] == 1, "constant term")
                require(
                    x == w or 2 * (len(p) - 1) <= length(w) - length(x) - 1,
                    "degree bound",
                )
    checks += 1

    # Steinberg formula against its oracle.
    envelope = [(1, 3, 1), (2, 2, 1)] if level == "quick" else [(1, 3, 1), (2, 2, 1), (2, 2, 2)]
    for r, k, d_l in envelope:
        require(
            steinberg_mult.analytic_tits_euler_check(BlockSet(r, k), d_l),
            "formula-oracle agreement",
        )
        for I in segments.jh_factors(r, k):
            require(steinberg_mult.smooth_tits_euler_check(I), "smooth Euler check")

    # Ext table coherence.
    for r, k, d_l in [(2, 2, 1), (1, 3, 2), (1, 4, 3)]:
        require(ext_calc.consistency_check_thm_main(r, k, d_l), "ext consistency")
        st = ext_calc.RepDescriptor("steinberg", frozenset({1}))
        ans = ext_calc.ext_dim(
            ext_calc.ExtQuery("analytic", False, 1, st, ext_calc.RepDescriptor("st-an"), r, k, d_l)
        )
        require(ans.value == d_l + 1, "headline degree-1 dimension")
    return checks


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        _emit({"error": exc.format_message()})
        return 2
    except BoundExceededError as exc:
        _emit({"error": str(exc)})
        return 3
    except (ValueError, AssertionError) as exc:
        _emit({"error": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
