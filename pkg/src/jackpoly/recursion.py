"""Creation-operator recursion for non-symmetric Jack polynomials.

The integral normalization F is computed by walking the star chain of a
composition down to zero and applying, at each step, the raising operator

    (eigenvalue(lam, m) + m) * Phi_m + Phi_{m+1} + ... + Phi_n

where m is the length of lam and Phi_k cycles the first k exponents while
adding a box in position k.  The monic normalization E is F divided by the
product of upper hooks over the diagram.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .alphapoly import AlphaFrac, AlphaPoly
from .compositions import (
    Composition,
    eigenvalue,
    length,
    phi_unshift,
    raising_scalar,
    star_shape,
    upper_hook_product,
)
from .mpoly import MPoly, divide_coefficients
from . import permutations as perm

CACHE_FORMAT_VERSION = 1


class CacheFormatError(ValueError):
    """A cache document has the wrong version or inconsistent contents."""


class RecursionCache:
    """Thread-safe memo of computed F polynomials, keyed by composition.

    Purely an accelerator: results are identical with a warm, cold or absent
    cache.
    """

    def __init__(self):
        self._data: dict[tuple[int, Composition], MPoly] = {}
        self._lock = threading.Lock()

    def get(self, lam: Composition) -> MPoly | None:
        with self._lock:
            return self._data.get((len(lam), lam))

    def put(self, lam: Composition, poly: MPoly) -> None:
        with self._lock:
            self._data.setdefault((len(lam), lam), poly)

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)

    def variable_counts(self) -> list[int]:
        with self._lock:
            return sorted({n for n, _ in self._data})

    def entries(self, n: int) -> list[tuple[Composition, MPoly]]:
        with self._lock:
            items = [(lam, f) for (nn, lam), f in self._data.items() if nn == n]
        items.sort(key=lambda t: (sum(t[0]), t[0]))
        return items

    def total_terms(self) -> int:
        with self._lock:
            return sum(len(f.terms) for f in self._data.values())


def cache_document(cache: RecursionCache, n: int) -> dict:
    """Serialize the n-variable slice of a cache to its JSON document."""
    entries = []
    for lam, f in cache.entries(n):
        entries.append({
            "lambda": list(lam),
            "poly": [{"exp": list(e), "coef": c.to_json()} for e, c in f.sorted_terms()],
        })
    return {"version": CACHE_FORMAT_VERSION, "n": n, "entries": entries}


def load_cache_document(doc: dict, cache: RecursionCache) -> int:
    """Install entries from a JSON cache document; returns its variable count.

    Rejects version mismatches and entries inconsistent with the declared n.
    """
    if not isinstance(doc, dict):
        raise CacheFormatError("cache document is not an object")
    if doc.get("version") != CACHE_FORMAT_VERSION:
        raise CacheFormatError(
            f"unsupported cache version {doc.get('version')!r}, want {CACHE_FORMAT_VERSION}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise CacheFormatError("cache document has an invalid variable count")
    try:
        for entry in doc["entries"]:
            lam = tuple(int(x) for x in entry["lambda"])
            if len(lam) != n or any(x < 0 for x in lam):
                raise CacheFormatError(f"entry {lam} inconsistent with n={n}")
            terms = {}
            for term in entry["poly"]:
                exp = tuple(int(x) for x in term["exp"])
                if len(exp) != n:
                    raise CacheFormatError(f"exponent {exp} inconsistent with n={n}")
                terms[exp] = AlphaPoly.from_json(term["coef"])
            cache.put(lam, MPoly(n, terms))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CacheFormatError):
            raise
        raise CacheFormatError(f"corrupt cache document: {exc}") from exc
    return n


# -- the raising operators ---------------------------------------------------


def phi_k(k: int, f: MPoly) -> MPoly:
    """Cycling creation operator: on an exponent vector nu it produces
    (nu_2, ..., nu_k, nu_1 + 1, nu_{k+1}, ..., nu_n), extended linearly.

    For k = n this is multiplication by x_n after a full cyclic shift.
    """
    if not 1 <= k <= f.n:
        raise ValueError(f"operator index {k} out of range for n={f.n}")
    out = MPoly(f.n)
    out.terms = {e[1:k] + (e[0] + 1,) + e[k:]: c for e, c in f.terms.items()}
    return out


def _apply_raising(lam: Composition, f: MPoly) -> MPoly:
    n = len(lam)
    m = length(lam)
    scal = raising_scalar(lam)
    acc: dict[tuple[int, ...], AlphaPoly] = {}
    for k in range(m, n + 1):
        weighted = k == m
        for e, c in f.terms.items():
            exp = e[1:k] + (e[0] + 1,) + e[k:]
            if weighted:
                c = c * scal
            prev = acc.get(exp)
            s = c if prev is None else prev + c
            if s:
                acc[exp] = s
            elif exp in acc:
                del acc[exp]
    out = MPoly(n)
    out.terms = acc
    return out


def f_poly(lam: Sequence[int], cache: RecursionCache | None = None) -> MPoly:
    """The integral non-symmetric polynomial indexed by lam, with coefficients
    in Z[alpha].  F of the zero composition is 1."""
    lam = tuple(lam)
    n = len(lam)
    pending: list[Composition] = []
    cur = lam
    f: MPoly | None = None
    while True:
        if cache is not None:
            hit = cache.get(cur)
            if hit is not None:
                f = hit
                break
        if length(cur) == 0:
            f = MPoly.one(n, AlphaPoly.ONE)
            break
        pending.append(cur)
        cur = star_shape(cur)
    while pending:
        cur = pending.pop()
        f = _apply_raising(cur, f)
        if cache is not None:
            cache.put(cur, f)
    return f


def e_poly(lam: Sequence[int], cache: RecursionCache | None = None) -> MPoly:
    """The monic non-symmetric polynomial: F divided by the upper-hook product.

    The coefficient of x^lam is exactly 1.
    """
    lam = tuple(lam)
    f = f_poly(lam, cache)
    e = divide_coefficients(f, upper_hook_product(lam))
    lead = e.coefficient(lam)
    if lead != 1:
        raise ArithmeticError(f"leading coefficient of E[{lam}] is {lead}, not 1")
    return e


# -- auxiliary operators, exposed for verification ---------------------------


def swap_adjacent(lam: Sequence[int], i: int, f: MPoly) -> MPoly:
    """Produce E[lam] from f = E[s_i lam] when lam_i > lam_{i+1}:
    apply (x s_i + 1) / x with x the spectral gap at positions i, i+1."""
    lam = tuple(lam)
    if not 1 <= i <= len(lam) - 1:
        raise ValueError(f"index {i} out of range")
    if lam[i - 1] <= lam[i]:
        raise ValueError(f"need lam_{i} > lam_{i + 1}")
    gap = eigenvalue(lam, i) - eigenvalue(lam, i + 1)
    if not gap:
        raise ArithmeticError("vanishing spectral gap")
    return f.swap(i, i + 1) + f.scale(AlphaFrac(1, gap))


def creation_apply(lam: Sequence[int], f: MPoly) -> MPoly:
    """Apply the creation operator attached to lam: a raising-scalar-weighted
    descending chain of adjacent swaps plus the shorter chains.

    When f is E of the sharp shape of lam, the result is raising_scalar(lam)
    times E[lam]; for length(lam) = n it degenerates to plain scaling.
    """
    lam = tuple(lam)
    n = len(lam)
    m = length(lam)
    if m == 0:
        raise ValueError("zero composition")
    scal = raising_scalar(lam)
    out = f.act(perm.descending_chain(n, m)).scale(scal)
    for i in range(m + 1, n + 1):
        out = out + f.act(perm.descending_chain(n, i))
    return out


@dataclass(frozen=True)
class EqualityWitness:
    holds: bool
    lhs: MPoly
    rhs: MPoly


def cyclic_identity(lam: Sequence[int], cache: RecursionCache | None = None) -> EqualityWitness:
    """Check E[lam] == Phi_n applied to E of the unshifted shape (lam_n > 0)."""
    lam = tuple(lam)
    if lam[-1] == 0:
        raise ValueError("last part must be nonzero")
    lhs = e_poly(lam, cache)
    rhs = phi_k(len(lam), e_poly(phi_unshift(lam), cache))
    return EqualityWitness(lhs == rhs, lhs, rhs)
