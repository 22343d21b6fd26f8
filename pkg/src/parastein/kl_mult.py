"""Kazhdan-Lusztig polynomials and highest-weight multiplicities.

Polynomials in the formal variable q are stored as tuples of integer
coefficients, index = power, trailing zeros trimmed.  ``kl_poly`` runs
the standard left-descent recursion with a shared memo table;
``verma_mult`` evaluates at q = 1 and multiplies over embeddings;
``parabolic_verma_mult`` applies the alternating character formula over
a parabolic subgroup.
"""

from __future__ import annotations

import os

from .cosets import BlockSet
from .weyl_core import (
    BoundExceededError,
    MultiWeyl,
    Perm,
    bruhat_downset,
    bruhat_leq,
    enumerate_parabolic,
    left_descents,
    length,
    multiply,
    simple_reflection,
)

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)

_CACHE_CAP_ENV = "PARASTEIN_KL_CACHE_CAP"

_kl_cache: dict[tuple[Perm, Perm], Poly] = {}


def _cache_cap() -> int | None:
    raw = os.environ.get(_CACHE_CAP_ENV)
    return int(raw) if raw else None


def poly_trim(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub_scaled(a: Poly, b: Poly, scalar: int, shift: int) -> Poly:
    """a - scalar * q^shift * b."""
    out = [0] * max(len(a), shift + len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[shift + i] -= scalar * c
    return poly_trim(out)


def poly_shift(a: Poly, shift: int) -> Poly:
    if not a:
        return ZERO
    return (0,) * shift + a


def poly_eval_one(a: Poly) -> int:
    return sum(a)


def kl_cache_size() -> int:
    return len(_kl_cache)


def kl_cache_clear() -> None:
    _kl_cache.clear()


def kl_poly(x: Perm, w: Perm) -> Poly:
    """The polynomial P_{x,w}; zero iff x is not below w in Bruhat order.

    >>> kl_poly((1, 2, 3, 4), (3, 4, 1, 2))
    (1, 1)
    >>> kl_poly((3, 4, 1, 2), (3, 4, 1, 2))
    (1,)
    >>> kl_poly((2, 1, 3), (1, 2, 3))
    ()
    """
    if len(x) != len(w):
        raise ValueError("rank mismatch in kl_poly")
    return _kl(x, w)


def _kl(x: Perm, w: Perm) -> Poly:
    key = (x, w)
    cached = _kl_cache.get(key)
    if cached is not None:
        return cached
    cap = _cache_cap()
    if cap is not None and len(_kl_cache) >= cap:
        raise BoundExceededError(
            f"KL memo table exceeded the configured cap of {cap} entries"
        )
    if x == w:
        result: Poly = ONE
    elif not bruhat_leq(x, w):
        result = ZERO
    else:
        n = len(w)
        s_idx = min(left_descents(w))
        s = simple_reflection(s_idx, n)
        sx = multiply(s, x)
        if length(sx) > length(x):
            # left-descent invariance: P_{x,w} = P_{sx,w}
            result = _kl(sx, w)
        else:
            v = multiply(s, w)  # shorter by one
            result = poly_add(_kl(sx, v), poly_shift(_kl(x, v), 1))
            lw = length(w)
            for z in bruhat_downset(v):
                lz = length(z)
                if (length(v) - lz) % 2 == 0:
                    continue
                if s_idx not in left_descents(z):
                    continue
                if not bruhat_leq(x, z):
                    continue
                m = kl_mu(z, v)
                if m:
                    result = poly_sub_scaled(result, _kl(x, z), m, (lw - lz) // 2)
    _kl_cache[key] = result
    return result


def kl_mu(z: Perm, v: Perm) -> int:
    """Coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v} (zero when the
    degree difference is even or z is not strictly below v).

    >>> kl_mu((1, 2, 3), (2, 1, 3))
    1
    >>> kl_mu((1, 2, 3, 4), (3, 4, 1, 2))
    0
    """
    d = length(v) - length(z)
    if d <= 0 or d % 2 == 0:
        return 0
    p = _kl(z, v)
    target = (d - 1) // 2
    return p[target] if target < len(p) else 0


def verma_mult(wprime: MultiWeyl, w: MultiWeyl) -> int:
    """Multiplicity of the simple module labelled by wprime inside the
    Verma-type module labelled by w: the product over embeddings of
    P_{wprime, w}(1); nonzero iff wprime <= w componentwise.

    >>> verma_mult(((1, 2, 3, 4),), ((3, 4, 1, 2),))
    2
    >>> verma_mult(((3, 4, 1, 2),), ((3, 4, 1, 2),))
    1
    >>> verma_mult(((2, 1),), ((1, 2),))
    0
    """
    if len(wprime) != len(w):
        raise ValueError("shape mismatch in verma_mult")
    out = 1
    for a, b in zip(wprime, w):
        out *= poly_eval_one(kl_poly(a, b))
        if out == 0:
            return 0
    return out


def parabolic_verma_mult(K: BlockSet, w: MultiWeyl) -> int:
    """Multiplicity of the simple module labelled by w inside the
    generalized Verma module attached to the parabolic on the inner
    roots plus the K block roots: the alternating sum over that
    parabolic subgroup of Verma multiplicities, factored over
    embeddings.

    >>> from .cosets import BlockSet
    >>> K = BlockSet(2, 2)
    >>> parabolic_verma_mult(K, ((1, 2, 3, 4),))
    1
    >>> parabolic_verma_mult(K, ((1, 3, 2, 4),))
    1
    >>> parabolic_verma_mult(K, ((2, 1, 3, 4),))
    0
    """
    n = K.n
    for comp in w:
        if len(comp) != n:
            raise ValueError(f"component rank {len(comp)} != {n}")
    roots = K.inner_roots() | K.roots()
    par = enumerate_parabolic(n, roots)
    out = 1
    for comp in w:
        acc = 0
        for u in par:
            if bruhat_leq(u, comp):
                p = poly_eval_one(kl_poly(u, comp))
                acc += p if length(u) % 2 == 0 else -p
        out *= acc
        if out == 0:
            return 0
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
