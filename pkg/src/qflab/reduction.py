"""Minkowski reduction, isometry testing and canonical forms, rank <= 4.

Reduction picks, slot by slot, the shortest vector that keeps the chosen
set extendable to a basis; for rank at most 4 that basis attains the
successive minima, which gives the classical reduction inequalities
(sorted diagonal, |H_ij| <= H_ii / 2 for i < j) for free.
"""

from __future__ import annotations

from ._matrix import conjugate, extends_to_basis, identity, mat_mul
from .forms import QuadForm
from .theta import short_vectors


def _pair_reduce(form: QuadForm) -> tuple[QuadForm, list[list[int]]]:
    """Cheap exact size reduction: shear each basis vector against the
    others while that strictly shortens it.  Keeps the diagonal small so
    the short-vector sweep below stays cheap on badly skewed inputs."""
    k = form.rank
    h = [list(row) for row in form.hessian]
    u = identity(k)

    def shear(dst, src, t):
        for r in range(k):
            u[r][dst] -= t * u[r][src]
        for r in range(k):
            h[r][dst] -= t * h[r][src]
        for c in range(k):
            h[dst][c] -= t * h[src][c]

    changed = True
    while changed:
        changed = False
        for i in range(k):
            for j in range(k):
                if i == j or 2 * abs(h[i][j]) <= h[i][i]:
                    continue
                t = (2 * h[i][j] + h[i][i]) // (2 * h[i][i])
                if t and 2 * abs(h[i][j] - t * h[i][i]) <= h[i][i]:
                    shear(j, i, t)
                    changed = True
    return QuadForm(tuple(tuple(row) for row in h)), u


def minkowski_reduce(form: QuadForm) -> tuple[QuadForm, list[list[int]]]:
    """Reduced form and the unimodular U with U^T H U = H_reduced."""
    k = form.rank
    original = form
    form, pre_u = _pair_reduce(form)
    pool = short_vectors(form, max(form.diag_q))
    values = sorted(pool)
    chosen: list[tuple[int, ...]] = []
    for _ in range(k):
        picked = None
        for val in values:
            for vec in pool[val]:
                if extends_to_basis(chosen + [vec], k):
                    picked = vec
                    break
            if picked is not None:
                break
        if picked is None:
            raise RuntimeError("reduction failed to complete a basis")
        chosen.append(picked)
    u = [[chosen[c][r] for c in range(k)] for r in range(k)]
    total = mat_mul(pre_u, u)
    reduced = QuadForm(
        tuple(tuple(row) for row in conjugate(original.hessian, total)))
    return reduced, total


def _assignment_search(target_h, source: QuadForm, collect_min: bool):
    """Backtracking search for integer bases of `source` whose Gram matrix
    matches target_h (decision mode) or minimizes the Gram lexicographically
    among bases attaining the target diagonal (canonical mode)."""
    k = len(target_h)
    hs = source.hessian
    need = [target_h[i][i] // 2 for i in range(k)]
    pool = short_vectors(source, max(need))
    for value in set(need):
        if value not in pool:
            return None
    candidates = {v: [vec for base in pool[v] for vec in (base, tuple(-c for c in base))]
                  for v in set(need)}

    def pairing(a, b) -> int:
        return sum(a[i] * sum(hs[i][j] * b[j] for j in range(k)) for i in range(k))

    best: list[tuple[int, ...] | None] = [None]
    chosen: list[tuple[int, ...]] = []
    trail: list[int] = []

    def decide(slot: int) -> bool:
        if slot == k:
            return True
        for vec in candidates[need[slot]]:
            if all(pairing(vec, chosen[i]) == target_h[i][slot] for i in range(slot)):
                if not extends_to_basis(chosen + [vec], k):
                    continue
                chosen.append(vec)
                if decide(slot + 1):
                    return True
                chosen.pop()
        return False

    def minimize(slot: int):
        if slot == k:
            key = tuple(trail)
            if best[0] is None or key < best[0]:
                best[0] = key
            return
        options = []
        for vec in candidates[need[slot]]:
            entries = tuple(pairing(vec, chosen[i]) for i in range(slot))
            options.append((entries, vec))
        options.sort()
        for entries, vec in options:
            prefix = tuple(trail) + entries
            if best[0] is not None and prefix > best[0][:len(prefix)]:
                continue
            if not extends_to_basis(chosen + [vec], k):
                continue
            chosen.append(vec)
            trail.extend(entries)
            minimize(slot + 1)
            del trail[len(trail) - len(entries):]
            chosen.pop()

    if collect_min:
        minimize(0)
        return best[0]
    return decide(0)


def is_isometric(a: QuadForm, b: QuadForm) -> bool:
    """True iff an integral unimodular change of basis maps a to b."""
    if a.rank != b.rank:
        return False
    if a.discriminant != b.discriminant:
        return False
    ra, _ = minkowski_reduce(a)
    rb, _ = minkowski_reduce(b)
    if ra.diag_q != rb.diag_q:
        return False
    if ra.hessian == rb.hessian:
        return True
    return bool(_assignment_search(ra.hessian, rb, collect_min=False))


def canonical_form(form: QuadForm) -> QuadForm:
    """Deterministic representative of the isometry class: the
    lexicographically smallest Gram matrix over all bases attaining the
    successive minima on the diagonal."""
    reduced, _ = minkowski_reduce(form)
    k = reduced.rank
    flat = _assignment_search(reduced.hessian, reduced, collect_min=True)
    if flat is None:
        raise RuntimeError("canonicalization found no basis")
    h = [[0] * k for _ in range(k)]
    pos = 0
    for j in range(k):
        for i in range(j):
            h[i][j] = h[j][i] = flat[pos]
            pos += 1
        h[j][j] = reduced.hessian[j][j]
    return QuadForm(tuple(tuple(row) for row in h))
