"""Exact lattice-point counting for positive definite forms.

All bounds come from an exact rational square completion of the form, so
no boundary case is ever lost to floating point.  The innermost
coordinate of every sweep is evaluated as an integer-valued quadratic on
a numpy range, which keeps the hot loop vectorized while staying exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from .forms import QuadForm

_FLUSH = 1 << 21
_INT64_GUARD = 1 << 62


def _ldl(h):
    """Exact LDL data for B = H/2: diagonal d_i and multipliers u[i][j]
    (j > i) with Q(x) = sum_i d_i (x_i + sum_{j>i} u[i][j] x_j)^2."""
    k = len(h)
    b = [[Fraction(h[i][j], 2) for j in range(k)] for i in range(k)]
    d = [Fraction(0)] * k
    u = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        d[i] = b[i][i]
        for j in range(i + 1, k):
            u[i][j] = b[i][j] / d[i]
        for r in range(i + 1, k):
            for c in range(r, k):
                b[r][c] -= d[i] * u[i][r] * u[i][c]
    return d, u


def _floor_sqrt(f: Fraction) -> int:
    """floor(sqrt(f)) for a nonnegative rational."""
    return isqrt(f.numerator * f.denominator) // f.denominator


def _floor(f: Fraction) -> int:
    return f.numerator // f.denominator


def _row_coefficients(h, x):
    """Integer coefficients (a2, a1, a0) of t -> Q(t, x_1, ..) in the
    first coordinate, given the fixed tail x[1:]."""
    k = len(h)
    a2 = h[0][0] // 2
    a1 = sum(h[0][j] * x[j] for j in range(1, k))
    a0 = 0
    for i in range(1, k):
        if x[i] == 0:
            continue
        a0 += h[i][i] * x[i] * x[i]
        for j in range(1, i):
            a0 += 2 * h[i][j] * x[i] * x[j]
    return a2, a1, a0 // 2


def _theta_unary(a: int, prec: int) -> np.ndarray:
    out = np.zeros(prec + 1, dtype=np.int64)
    out[0] = 1
    t = 1
    while a * t * t <= prec:
        out[a * t * t] = 2
        t += 1
    return out


def _theta_sweep(h, prec: int) -> np.ndarray:
    """Counts of Q(v) = n for all n <= prec, one enumeration sweep."""
    k = len(h)
    if k == 1:
        return _theta_unary(h[0][0] // 2, prec)
    d, u = _ldl(h)
    counts = np.zeros(prec + 1, dtype=np.int64)
    pending: list[np.ndarray] = []
    pending_size = 0
    x = [0] * k

    def flush():
        nonlocal pending, pending_size
        if pending:
            vals = np.concatenate(pending)
            np.add(counts, np.bincount(vals, minlength=prec + 1), out=counts)
            pending = []
            pending_size = 0

    def descend(level: int, budget: Fraction):
        nonlocal pending_size
        if level == 0:
            a2, a1, a0 = _row_coefficients(h, x)
            disc = a1 * a1 - 4 * a2 * (a0 - prec)
            if disc < 0:
                return
            s = isqrt(disc)
            lo = (-a1 - s) // (2 * a2) - 1
            hi = (-a1 + s) // (2 * a2) + 1
            ts = np.arange(lo, hi + 1, dtype=np.int64)
            vals = (a2 * ts + a1) * ts + a0
            vals = vals[vals <= prec]
            pending.append(vals)
            pending_size += vals.size
            if pending_size >= _FLUSH:
                flush()
            return
        center = sum((u[level][j] * x[j] for j in range(level + 1, k)),
                     Fraction(0))
        radius = _floor_sqrt(budget / d[level])
        lo = _floor(-center) - radius - 1
        hi = -_floor(center) + radius + 1
        for t in range(lo, hi + 1):
            shift = t + center
            rem = budget - d[level] * shift * shift
            if rem >= 0:
                x[level] = t
                descend(level - 1, rem)
        x[level] = 0

    descend(k - 1, Fraction(prec))
    flush()
    return counts


def _nonzero_items(arr: np.ndarray):
    idx = np.flatnonzero(arr)
    return [(int(i), int(arr[i])) for i in idx]


def _convolve_trunc(a: np.ndarray, b: np.ndarray, prec: int) -> np.ndarray:
    """Truncated product of two coefficient arrays, sparse-aware."""
    if len(a) < len(b):
        a, b = b, a
    items = _nonzero_items(b)
    bound = int(np.abs(a).max(initial=0)) * sum(abs(v) for _, v in items)
    if bound >= _INT64_GUARD:
        return _convolve_object(a, b, prec)
    out = np.zeros(prec + 1, dtype=np.int64)
    top = min(len(a) - 1, prec)
    for idx, val in items:
        if idx > prec:
            break
        stop = min(top, prec - idx)
        out[idx:idx + stop + 1] += val * a[:stop + 1]
    return out


def _convolve_object(a, b, prec):
    """Python-int fallback for products that could overflow int64."""
    out = [0] * (prec + 1)
    for i, av in enumerate(a[:prec + 1]):
        if av == 0:
            continue
        av = int(av)
        for j, bv in enumerate(b[:prec + 1 - i]):
            if bv:
                out[i + j] += av * int(bv)
    return np.array(out, dtype=object)


def theta_coeffs(form: QuadForm, n_max: int) -> list[int]:
    """Representation numbers r(0..n_max) in one enumeration sweep per
    orthogonal block, blocks combined by exact convolution."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    arrays = [_theta_sweep(sub.hessian, n_max)
              for _, sub in form.orthogonal_blocks()]
    arrays.sort(key=lambda arr: int(np.count_nonzero(arr)))
    acc = arrays[0]
    for arr in arrays[1:]:
        acc = _convolve_trunc(arr, acc, n_max)
    return [int(v) for v in acc]


def represent_count(form: QuadForm, n: int) -> int:
    """Exact number of integer vectors with Q(v) = n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    h = form.hessian
    k = form.rank
    if k == 1:
        a = h[0][0] // 2
        if n % a:
            return 0
        s = isqrt(n // a)
        return 2 if s * s * a == n else 0
    d, u = _ldl(h)
    x = [0] * k
    total = 0

    def descend(level: int, budget: Fraction):
        nonlocal total
        if level == 0:
            a2, a1, a0 = _row_coefficients(h, x)
            disc = a1 * a1 - 4 * a2 * (a0 - n)
            if disc < 0:
                return
            s = isqrt(disc)
            if s * s != disc:
                return
            for root_num in {-a1 - s, -a1 + s}:
                if root_num % (2 * a2) == 0:
                    total += 1
            return
        center = sum((u[level][j] * x[j] for j in range(level + 1, k)),
                     Fraction(0))
        radius = _floor_sqrt(budget / d[level])
        lo = _floor(-center) - radius - 1
        hi = -_floor(center) + radius + 1
        for t in range(lo, hi + 1):
            shift = t + center
            rem = budget - d[level] * shift * shift
            if rem >= 0:
                x[level] = t
                descend(level - 1, rem)
        x[level] = 0

    descend(k - 1, Fraction(n))
    return total


def vectors_with_value(form: QuadForm, n: int) -> list[tuple[int, ...]]:
    """All integer vectors with Q(v) = n (both signs included)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [tuple([0] * form.rank)]
    h = form.hessian
    k = form.rank
    d, u = _ldl(h)
    x = [0] * k
    found: list[tuple[int, ...]] = []

    def descend(level: int, budget: Fraction):
        if level == 0:
            a2, a1, a0 = _row_coefficients(h, x)
            disc = a1 * a1 - 4 * a2 * (a0 - n)
            if disc < 0:
                return
            s = isqrt(disc)
            if s * s != disc:
                return
            for root_num in {-a1 - s, -a1 + s}:
                if root_num % (2 * a2) == 0:
                    x[0] = root_num // (2 * a2)
                    found.append(tuple(x))
            x[0] = 0
            return
        center = sum((u[level][j] * x[j] for j in range(level + 1, k)),
                     Fraction(0))
        radius = _floor_sqrt(budget / d[level])
        lo = _floor(-center) - radius - 1
        hi = -_floor(center) + radius + 1
        for t in range(lo, hi + 1):
            shift = t + center
            rem = budget - d[level] * shift * shift
            if rem >= 0:
                x[level] = t
                descend(level - 1, rem)
        x[level] = 0

    if k == 1:
        a = h[0][0] // 2
        if n % a == 0:
            s = isqrt(n // a)
            if s * s * a == n:
                return [(s,), (-s,)]
        return []
    descend(k - 1, Fraction(n))
    return sorted(found)


def short_vectors(form: QuadForm, cap: int) -> dict[int, list[tuple[int, ...]]]:
    """Sign-canonical vectors with 0 < Q(v) <= cap, grouped by value."""
    h = form.hessian
    k = form.rank
    out: dict[int, list[tuple[int, ...]]] = {}
    if k == 1:
        a = h[0][0] // 2
        t = 1
        while a * t * t <= cap:
            out[a * t * t] = [(t,)]
            t += 1
        return out
    d, u = _ldl(h)
    x = [0] * k

    def canonical(v):
        for c in v:
            if c > 0:
                return True
            if c < 0:
                return False
        return False

    def descend(level: int, budget: Fraction):
        if level < 0:
            q = form.evaluate(x)
            if 0 < q <= cap and canonical(x):
                out.setdefault(q, []).append(tuple(x))
            return
        center = sum((u[level][j] * x[j] for j in range(level + 1, k)),
                     Fraction(0))
        radius = _floor_sqrt(budget / d[level])
        lo = _floor(-center) - radius - 1
        hi = -_floor(center) + radius + 1
        for t in range(lo, hi + 1):
            shift = t + center
            rem = budget - d[level] * shift * shift
            if rem >= 0:
                x[level] = t
                descend(level - 1, rem)
        x[level] = 0

    descend(k - 1, Fraction(cap))
    for vecs in out.values():
        vecs.sort()
    return out


class RepQuery:
    """Point queries r(m) for m <= prec.

    The form is split into two orthogonal halves whose theta vectors are
    precomputed once; each query is then a single dot product.  A form
    with no orthogonal splitting of rank 4 falls back to per-query
    enumeration; rank <= 3 falls back to one dense sweep.
    """

    def __init__(self, form: QuadForm, prec: int, cache=None):
        self.form = form
        self.prec = prec
        self._memo: dict[int, int] = {}
        blocks = [sub for _, sub in form.orthogonal_blocks()]
        if len(blocks) == 1 and form.rank >= 4:
            self._mode = "point"
            return
        blocks.sort(key=lambda b: b.rank, reverse=True)
        halves: list[list[QuadForm]] = [[blocks[0]], []]
        for blk in blocks[1:]:
            halves.sort(key=lambda part: sum(b.rank for b in part))
            halves[0].append(blk)

        def theta_of(block: QuadForm) -> np.ndarray:
            if cache is not None:
                return np.asarray(cache(block, prec), dtype=np.int64)
            return _theta_sweep(block.hessian, prec)

        def fold(parts):
            if not parts:
                return np.ones(1, dtype=np.int64)
            arrays = sorted((theta_of(b) for b in parts),
                            key=lambda arr: int(np.count_nonzero(arr)))
            acc = arrays[0]
            for arr in arrays[1:]:
                acc = _convolve_trunc(arr, acc, prec)
            return acc

        self._a = fold(halves[0])
        self._b = fold(halves[1])
        self._mode = "single" if len(self._b) == 1 else "dot"
        if self._mode == "dot":
            peak = int(self._a.max()) * int(self._b.max()) * (prec + 1)
            if peak >= _INT64_GUARD:
                raise OverflowError("theta convolution would exceed int64")

    def count(self, m: int) -> int:
        if m < 0:
            raise ValueError("m must be nonnegative")
        if m > self.prec:
            raise ValueError(f"query {m} beyond precision {self.prec}")
        hit = self._memo.get(m)
        if hit is not None:
            return hit
        if self._mode == "point":
            val = represent_count(self.form, m)
        elif self._mode == "single":
            val = int(self._a[m])
        else:
            val = int(np.dot(self._a[:m + 1], self._b[m::-1]))
        self._memo[m] = val
        return val
