"""Positive definite integral quadratic forms of rank 1-4.

A form is stored through the integer matrix H = 2B (B the bilinear form),
so Q(v) = v^T H v / 2.  Diagonal entries of H are even, off-diagonal
entries may be odd: this keeps all data integral for forms whose cross
coefficients are half-integral in B while Q stays integer valued.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from ._matrix import conjugate, hnf_basis, int_det, integer_kernel


@dataclass(frozen=True)
class QuadForm:
    hessian: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        h = tuple(tuple(int(x) for x in row) for row in self.hessian)
        object.__setattr__(self, "hessian", h)
        k = len(h)
        if not 1 <= k <= 4:
            raise ValueError(f"rank {k} not supported (want 1..4)")
        if any(len(row) != k for row in h):
            raise ValueError("hessian must be square")
        for i in range(k):
            if h[i][i] % 2:
                raise ValueError("diagonal entries of the hessian must be even")
            for j in range(i):
                if h[i][j] != h[j][i]:
                    raise ValueError("hessian must be symmetric")
        for lead in range(1, k + 1):
            if int_det([row[:lead] for row in h[:lead]]) <= 0:
                raise ValueError("form is not positive definite")

    # -- constructors -------------------------------------------------

    @classmethod
    def diagonal(cls, q_values) -> "QuadForm":
        """Form sum a_i x_i^2 from its coefficient list."""
        vals = list(q_values)
        return cls(tuple(
            tuple(2 * vals[i] if i == j else 0 for j in range(len(vals)))
            for i in range(len(vals))
        ))

    @classmethod
    def from_gram(cls, gram) -> "QuadForm":
        """Form from an integer matrix presentation of B (doubled into H)."""
        return cls(tuple(tuple(2 * x for x in row) for row in gram))

    @classmethod
    def block_diag(cls, *blocks) -> "QuadForm":
        """Orthogonal sum of integer B-matrix blocks (ints = 1x1 blocks)."""
        mats = []
        for b in blocks:
            if isinstance(b, int):
                mats.append([[b]])
            else:
                mats.append([list(row) for row in b])
        k = sum(len(m) for m in mats)
        gram = [[0] * k for _ in range(k)]
        off = 0
        for m in mats:
            for i, row in enumerate(m):
                for j, x in enumerate(row):
                    gram[off + i][off + j] = x
            off += len(m)
        return cls.from_gram(gram)

    # -- basic data ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.hessian)

    @property
    def discriminant(self) -> int:
        return int_det(self.hessian)

    @property
    def diag_q(self) -> tuple[int, ...]:
        """Q values of the basis vectors."""
        return tuple(self.hessian[i][i] // 2 for i in range(self.rank))

    @property
    def norm_ideal(self) -> int:
        """Generator of the ideal of represented values."""
        g = 0
        for i in range(self.rank):
            g = gcd(g, self.hessian[i][i] // 2)
            for j in range(i):
                g = gcd(g, self.hessian[i][j])
        return g

    @property
    def is_normalized(self) -> bool:
        return self.norm_ideal == 1

    def evaluate(self, v) -> int:
        """Q(v) = v^T H v / 2."""
        vec = list(v)
        if len(vec) != self.rank:
            raise ValueError(
                f"vector has length {len(vec)}, form has rank {self.rank}")
        h = self.hessian
        total = 0
        for i, vi in enumerate(vec):
            if vi == 0:
                continue
            total += h[i][i] * vi * vi
            for j in range(i):
                total += 2 * h[i][j] * vi * vec[j]
        return total // 2

    def is_diagonal(self) -> bool:
        return all(self.hessian[i][j] == 0
                   for i in range(self.rank) for j in range(i))

    def divided_by(self, e: int) -> "QuadForm":
        """Scale Q by 1/e (e must divide the norm ideal)."""
        if e < 1 or self.norm_ideal % e:
            raise ValueError(f"{e} does not divide the norm ideal")
        return QuadForm(tuple(tuple(x // e for x in row) for row in self.hessian))

    def orthogonal_blocks(self) -> list[tuple[tuple[int, ...], "QuadForm"]]:
        """Split into orthogonal components: list of (indices, subform)."""
        k = self.rank
        seen = [False] * k
        blocks = []
        for start in range(k):
            if seen[start]:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                i = frontier.pop()
                seen[i] = True
                for j in range(k):
                    if j not in comp and self.hessian[i][j] != 0:
                        comp.add(j)
                        frontier.append(j)
            idx = tuple(sorted(comp))
            sub = tuple(tuple(self.hessian[i][j] for j in idx) for i in idx)
            blocks.append((idx, QuadForm(sub)))
        return blocks

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"rank": self.rank,
                           "hessian": [list(r) for r in self.hessian]})

    def describe(self) -> str:
        if self.is_diagonal():
            return ",".join(str(q) for q in self.diag_q)
        return self.to_json()

    def __str__(self) -> str:
        return self.describe()


def parse_form(text: str) -> QuadForm:
    """Parse a form literal: diagonal shorthand "1,2,3,10" or JSON
    {"rank": k, "hessian": [[...], ...]}."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        form = QuadForm(tuple(tuple(row) for row in data["hessian"]))
        if "rank" in data and data["rank"] != form.rank:
            raise ValueError("rank field disagrees with hessian size")
        return form
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse form literal {text!r}") from exc
    return QuadForm.diagonal(values)


@dataclass(frozen=True)
class CongruenceSystem:
    """Conditions w . x = 0 (mod modulus) cutting out a finite-index
    sublattice of the coordinate lattice."""

    modulus: int
    relations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        reduced = tuple(tuple(int(x) % self.modulus for x in row)
                        for row in self.relations)
        object.__setattr__(self, "relations", reduced)


def congruence_sublattice(form: QuadForm, system: CongruenceSystem) -> QuadForm:
    """Gram matrix of {x : all relations hold}, on a Hermite normal form
    basis of the solution lattice.  The result may be non-normalized."""
    k = form.rank
    rels = [row for row in system.relations if any(row)]
    if not rels:
        return form
    if any(len(row) != k for row in rels):
        raise ValueError("relation length must equal the rank")
    m = system.modulus
    r = len(rels)
    # solutions of W x = m y, as projections of an integer kernel
    stacked = [list(rels[i]) + [-m if j == i else 0 for j in range(r)]
               for i in range(r)]
    kernel = integer_kernel(stacked)
    columns = [vec[:k] for vec in kernel]
    basis = hnf_basis(columns)
    return QuadForm(tuple(tuple(x) for x in conjugate(form.hessian, basis)))


def sublattice_index(form: QuadForm, sub: QuadForm) -> int:
    """Index of a sublattice recovered from the discriminant ratio."""
    ratio = sub.discriminant // form.discriminant
    root = int(round(ratio ** 0.5))
    for cand in (root - 1, root, root + 1):
        if cand > 0 and cand * cand == ratio:
            return cand
    raise ValueError("discriminant ratio is not a perfect square")
