"""The Auslander algebra of K[x]/(x^n) and its quotients, by multiplication table.

Vertices are 1..n with arrows a_i: i -> i+1 and b_i: i -> i-1, subject to
the relations "a_1 b_2 = 0" and "a_i b_{i+1} = b_i a_{i-1}".  Paths are
written in travel order (leftmost arrow traversed first), and every nonzero
path equals a unique descend-then-ascend monomial b^s a^t; these monomials
form the basis, so all structure constants are 0 or 1.

Two-sided ideals are stored as echelonized row spaces over the monomial
basis, closed under multiplication by the arrows and idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import fpmat


@dataclass(frozen=True)
class Monomial:
    """Normal-form path b^downs a^ups starting at ``start``."""

    start: int
    downs: int
    ups: int

    @property
    def valley(self) -> int:
        return self.start - self.downs

    @property
    def target(self) -> int:
        return self.start - self.downs + self.ups

    def __repr__(self):
        return f"m({self.start},{self.downs},{self.ups})"


def multiply_monomials_normal_form(x: Monomial, y: Monomial) -> Monomial | None:
    """Closed-form product of two normal-form monomials; None means zero.

    Concatenating b^s a^t (from i) with b^s' a^t' pushes every ascent past
    every descent using the mesh relation, landing on b^(s+s') a^(t+t')
    with valley i - s - s'; the zero relation at vertex 1 kills the product
    exactly when that valley is below 1.
    """
    if x.target != y.start:
        return None
    valley = x.start - x.downs - y.downs
    if valley < 1:
        return None
    return Monomial(x.start, x.downs + y.downs, x.ups + y.ups)


def multiply_paths_by_rewriting(n: int, x: Monomial, y: Monomial) -> Monomial | None:
    """Oracle product: concatenate arrow sequences and rewrite peaks step by step."""
    if x.target != y.start:
        return None
    steps = ["b"] * x.downs + ["a"] * x.ups + ["b"] * y.downs + ["a"] * y.ups
    while True:
        vertex = x.start
        swap_at = None
        for k, step in enumerate(steps):
            if step == "a" and k + 1 < len(steps) and steps[k + 1] == "b":
                swap_at = k
                break
            vertex += 1 if step == "a" else -1
        if swap_at is None:
            break
        if vertex == 1:
            return None
        steps[swap_at], steps[swap_at + 1] = "b", "a"
    downs = steps.count("b")
    result = Monomial(x.start, downs, len(steps) - downs)
    if result.valley < 1 or max(result.start, result.target) > n:
        return None
    return result


class AssocAlgebra:
    """Finite-dimensional basic algebra given by basis and multiplication table.

    ``table[i, j]`` is the basis index of the product (structure constants
    are all 0/1 here) or -1 for zero.  ``src``/``tgt`` grade the basis by
    idempotents: b = e_src(b) * b * e_tgt(b).
    """

    def __init__(self, n, p, basis, table, idempotents, arrows, name=""):
        self.n = n
        self.p = p
        self.basis: tuple[Monomial, ...] = tuple(basis)
        self.dim = len(self.basis)
        self.table: np.ndarray = table
        self.idempotents: tuple[int, ...] = tuple(idempotents)
        self.arrows: dict[str, int] = dict(arrows)  # name -> basis index
        self.name = name or f"algebra(n={n},p={p})"
        self.src = np.array([m.start for m in self.basis], dtype=np.int64)
        self.tgt = np.array([m.target for m in self.basis], dtype=np.int64)

    def __repr__(self):
        return f"<{self.name} dim={self.dim}>"

    def mul_indices(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def arrow_src(self, name: str) -> int:
        return int(self.src[self.arrows[name]])

    def arrow_tgt(self, name: str) -> int:
        return int(self.tgt[self.arrows[name]])

    def arrow_names(self) -> list[str]:
        return sorted(self.arrows)

    def unit_vector(self) -> np.ndarray:
        one = fpmat.zeros(1, self.dim)[0]
        for e in self.idempotents:
            one[e] = 1
        return one

    def basis_vector(self, idx: int) -> np.ndarray:
        v = fpmat.zeros(1, self.dim)[0]
        v[idx] = 1
        return v

    def multiply_elements(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = fpmat.zeros(1, self.dim)[0]
        for i in np.nonzero(u)[0]:
            row = self.table[i]
            for j in np.nonzero(v)[0]:
                k = row[j]
                if k >= 0:
                    out[k] = (out[k] + u[i] * v[j]) % self.p
        return out

    @cached_property
    def left_mult_mats(self) -> dict[int, np.ndarray]:
        """For generator index g: matrix of x -> g*x on element row vectors."""
        out = {}
        for g in self._generator_indices():
            m = fpmat.zeros(self.dim, self.dim)
            for i in range(self.dim):
                k = self.table[g, i]
                if k >= 0:
                    m[i, k] = 1
            out[g] = m
        return out

    @cached_property
    def right_mult_mats(self) -> dict[int, np.ndarray]:
        out = {}
        for g in self._generator_indices():
            m = fpmat.zeros(self.dim, self.dim)
            for i in range(self.dim):
                k = self.table[i, g]
                if k >= 0:
                    m[i, k] = 1
            out[g] = m
        return out

    def _generator_indices(self) -> list[int]:
        return sorted(set(self.idempotents) | set(self.arrows.values()))

    @cached_property
    def mult_tensor_flat(self) -> np.ndarray:
        """E[i, j*dim+k] = 1 iff basis_i * basis_j = basis_k; drives bulk products."""
        d = self.dim
        e = np.zeros((d, d * d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                k = self.table[i, j]
                if k >= 0:
                    e[i, j * d + k] = 1
        return e

    def left_mult_matrix(self, vec: np.ndarray) -> np.ndarray:
        """Matrix of x -> vec * x acting on element row vectors."""
        d = self.dim
        return (np.asarray(vec, dtype=np.int64) @ self.mult_tensor_flat).reshape(d, d) % self.p

    def right_mult_matrix(self, vec: np.ndarray) -> np.ndarray:
        """Matrix of x -> x * vec acting on element row vectors."""
        d = self.dim
        e3 = self.mult_tensor_flat.reshape(d, d, d)
        return np.tensordot(e3, np.asarray(vec, dtype=np.int64), axes=([1], [0])) % self.p

    @cached_property
    def factorization(self) -> list:
        """For each basis index: None (idempotent) or (j, arrow_name) with b = b_j * arrow."""
        fact: list = [None] * self.dim
        known = set(self.idempotents)
        progress = True
        while progress and len(known) < self.dim:
            progress = False
            for j in list(known):
                for name, a in self.arrows.items():
                    k = self.mul_indices(j, a)
                    if k >= 0 and k not in known:
                        fact[k] = (j, name)
                        known.add(k)
                        progress = True
        if len(known) < self.dim:
            raise AssertionError("basis not generated by idempotents and arrows")
        return fact

    def component_columns(self, i: int, j: int) -> np.ndarray:
        """Basis indices of e_i A e_j."""
        return np.nonzero((self.src == i) & (self.tgt == j))[0]

    def graded_dims(self) -> np.ndarray:
        out = fpmat.zeros(self.n, self.n)
        for k in range(self.dim):
            out[self.src[k] - 1, self.tgt[k] - 1] += 1
        return out

    def radical_indices(self) -> list[int]:
        """Basis indices spanning the Jacobson radical (non-idempotent monomials)."""
        idem = set(self.idempotents)
        return [k for k in range(self.dim) if k not in idem]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "dim": self.dim,
            "basis": [
                {"start": m.start, "downs": m.downs, "ups": m.ups} for m in self.basis
            ],
            "idempotents": list(self.idempotents),
        }


ALGEBRA_JSON_SCHEMA = {
    "type": "object",
    "required": ["n", "p", "dim", "basis", "idempotents"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "p": {"type": "integer", "minimum": 2},
        "dim": {"type": "integer", "minimum": 1},
        "basis": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["start", "downs", "ups"],
                "properties": {
                    "start": {"type": "integer"},
                    "downs": {"type": "integer"},
                    "ups": {"type": "integer"},
                },
            },
        },
        "idempotents": {"type": "array", "items": {"type": "integer"}},
    },
}


def _check_prime(p: int):
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"field modulus must be prime, got {p}")


def auslander_basis(n: int) -> list[Monomial]:
    out = []
    for start in range(1, n + 1):
        for downs in range(0, start):
            for ups in range(0, n - start + downs + 1):
                out.append(Monomial(start, downs, ups))
    return sorted(out, key=lambda m: (m.start, m.downs, m.ups))


def build_auslander(n: int, p: int = 2) -> AssocAlgebra:
    """The Auslander algebra of K[x]/(x^n) over F_p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_prime(p)
    basis = auslander_basis(n)
    index = {m: k for k, m in enumerate(basis)}
    dim = len(basis)
    table = np.full((dim, dim), -1, dtype=np.int64)
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            z = multiply_monomials_normal_form(x, y)
            if z is not None:
                table[i, j] = index[z]
    idempotents = [index[Monomial(i, 0, 0)] for i in range(1, n + 1)]
    arrows = {}
    for i in range(1, n):
        arrows[f"a{i}"] = index[Monomial(i, 0, 1)]
    for i in range(2, n + 1):
        arrows[f"b{i}"] = index[Monomial(i, 1, 0)]
    return AssocAlgebra(n, p, basis, table, idempotents, arrows, name=f"Lambda(n={n},p={p})")


def multiply_monomials(algebra: AssocAlgebra, x: Monomial, y: Monomial) -> Monomial | None:
    """Table product of two basis monomials of ``algebra``; None means zero."""
    lookup = {m: k for k, m in enumerate(algebra.basis)}
    if x not in lookup or y not in lookup:
        raise ValueError("monomial not in the basis of this algebra")
    k = algebra.mul_indices(lookup[x], lookup[y])
    return None if k < 0 else algebra.basis[k]


class TwoSidedIdeal:
    """A two-sided ideal as a canonical echelonized subspace of the algebra."""

    def __init__(self, algebra: AssocAlgebra, rows: np.ndarray, pivots=None):
        self.algebra = algebra
        if pivots is None:
            rows, pivots = fpmat.rref(rows, algebra.p)
        self.rows = rows
        self.pivots = tuple(pivots)

    @cached_property
    def key(self) -> bytes:
        return fpmat.subspace_key(self.rows)

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    def __eq__(self, other):
        return isinstance(other, TwoSidedIdeal) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<ideal dim={self.dim} of {self.algebra.name}>"

    def contains(self, vec: np.ndarray) -> bool:
        return fpmat.in_row_space(self.rows, self.pivots, vec, self.algebra.p)

    def contains_ideal(self, other: "TwoSidedIdeal") -> bool:
        return all(self.contains(r) for r in other.rows)

    def graded_dims(self) -> np.ndarray:
        A = self.algebra
        out = fpmat.zeros(A.n, A.n)
        for i in range(1, A.n + 1):
            for j in range(1, A.n + 1):
                cols = A.component_columns(i, j)
                out[i - 1, j - 1] = fpmat.rank(self.rows[:, cols], A.p)
        return out

    def component_rows(self, i: int) -> np.ndarray:
        """Echelon basis of e_i * ideal, as rows over the full algebra basis."""
        A = self.algebra
        mask = (A.src == i).astype(np.int64)
        return fpmat.row_space(self.rows * mask[None, :], A.p)

    def is_monomial(self) -> bool:
        """True when every echelon row is a single basis monomial."""
        return all(int(np.count_nonzero(r)) == 1 for r in self.rows)

    def monomial_indices(self) -> list[int]:
        if not self.is_monomial():
            raise ValueError("ideal has no monomial basis")
        return sorted(int(np.nonzero(r)[0][0]) for r in self.rows)


def zero_ideal(algebra: AssocAlgebra) -> TwoSidedIdeal:
    return TwoSidedIdeal(algebra, fpmat.zeros(0, algebra.dim), pivots=())


def unit_ideal(algebra: AssocAlgebra) -> TwoSidedIdeal:
    return TwoSidedIdeal(algebra, fpmat.eye(algebra.dim))


def two_sided_closure(algebra: AssocAlgebra, generators) -> TwoSidedIdeal:
    """Smallest subspace containing the generators closed under both actions."""
    p = algebra.p
    rows = fpmat.vstack([np.atleast_2d(np.asarray(g, dtype=np.int64)) for g in generators],
                        algebra.dim)
    rows = fpmat.row_space(rows, p)
    while True:
        new = [rows]
        for m in algebra.left_mult_mats.values():
            new.append(fpmat.matmul(rows, m, p))
        for m in algebra.right_mult_mats.values():
            new.append(fpmat.matmul(rows, m, p))
        merged = fpmat.row_space(fpmat.vstack(new, algebra.dim), p)
        if merged.shape[0] == rows.shape[0]:
            return TwoSidedIdeal(algebra, merged)
        rows = merged


def ideal_product(t: TwoSidedIdeal, u: TwoSidedIdeal) -> TwoSidedIdeal:
    """Span of pairwise products, echelonized."""
    if t.algebra is not u.algebra:
        raise ValueError("ideals live over different algebras")
    A = t.algebra
    d = A.dim
    if t.dim == 0 or u.dim == 0:
        return zero_ideal(A)
    # all products at once: left[a,j,k] = sum_i t[a,i] E[i,j,k]
    left = (t.rows @ A.mult_tensor_flat).reshape(t.dim, d, d) % A.p
    prods = np.einsum("bj,ajk->abk", u.rows, left).reshape(t.dim * u.dim, d) % A.p
    return TwoSidedIdeal(A, prods)


def idempotent_generated_ideal(algebra: AssocAlgebra, vertices) -> TwoSidedIdeal:
    """The ideal generated by the idempotents at the given vertices."""
    gens = [algebra.basis_vector(algebra.idempotents[v - 1]) for v in vertices]
    return two_sided_closure(algebra, gens)


def corner_ideal(algebra: AssocAlgebra) -> TwoSidedIdeal:
    """The ideal generated by the idempotent at the last vertex."""
    return idempotent_generated_ideal(algebra, [algebra.n])


def loop_ideal(algebra: AssocAlgebra) -> TwoSidedIdeal:
    """The ideal generated by the down-up loop at the last vertex (zero for n=1)."""
    n = algebra.n
    if n == 1:
        return zero_ideal(algebra)
    loop = Monomial(n, 1, 1)
    idx = {m: k for k, m in enumerate(algebra.basis)}[loop]
    return two_sided_closure(algebra, [algebra.basis_vector(idx)])


def quotient_algebra(algebra: AssocAlgebra, ideal: TwoSidedIdeal, name="") -> AssocAlgebra:
    """Quotient by a two-sided ideal with a monomial basis.

    The surviving monomials index the quotient basis; a product is the
    product upstairs when that lands outside the ideal, and zero otherwise.
    Closure under both actions is checked via the ideal's own invariance.
    """
    if ideal.dim == 0:
        return algebra
    closed = two_sided_closure(algebra, ideal.rows)
    if closed.key != ideal.key:
        raise ValueError("subspace is not a two-sided ideal")
    dead = set(ideal.monomial_indices())
    keep = [k for k in range(algebra.dim) if k not in dead]
    reindex = {k: i for i, k in enumerate(keep)}
    basis = [algebra.basis[k] for k in keep]
    dim = len(keep)
    table = np.full((dim, dim), -1, dtype=np.int64)
    for a, ka in enumerate(keep):
        for b, kb in enumerate(keep):
            k = algebra.mul_indices(ka, kb)
            if k >= 0 and k not in dead:
                table[a, b] = reindex[k]
    idempotents = [reindex[e] for e in algebra.idempotents]
    arrows = {nm: reindex[k] for nm, k in algebra.arrows.items() if k not in dead}
    return AssocAlgebra(algebra.n, algebra.p, basis, table, idempotents, arrows,
                        name=name or f"{algebra.name}/ideal(dim={ideal.dim})")


def op_algebra(algebra: AssocAlgebra) -> AssocAlgebra:
    """Opposite algebra: same basis, transposed table, src/tgt swapped."""
    basis = [Monomial(m.target, m.ups, m.downs) for m in algebra.basis]
    op = AssocAlgebra(
        algebra.n,
        algebra.p,
        basis,
        algebra.table.T.copy(),
        algebra.idempotents,
        algebra.arrows,
        name=f"{algebra.name}^op",
    )
    return op


def build_preprojective(n: int, p: int = 2) -> AssocAlgebra:
    """Preprojective algebra of type A_n as the loop-ideal quotient."""
    lam = build_auslander(n, p)
    return quotient_algebra(lam, loop_ideal(lam), name=f"Gamma(n={n},p={p})")


def segment_quotients(algebra: AssocAlgebra, dead_vertices):
    """The quotient by the ideal of the given idempotents, split into factors.

    Killing a set of vertices leaves one algebra per maximal run of
    surviving vertices (a path through a dead vertex dies, and so does any
    monomial the relations identify with one).  Returns (segment, factor)
    pairs with the factor's vertices renumbered from 1.
    """
    dead = sorted(set(dead_vertices))
    if not dead:
        return [(list(range(1, algebra.n + 1)), algebra)]
    J = idempotent_generated_ideal(algebra, dead)
    dead_monoms = set(J.monomial_indices())
    segments = []
    cur = []
    for v in range(1, algebra.n + 1):
        if v in dead:
            if cur:
                segments.append(cur)
            cur = []
        else:
            cur.append(v)
    if cur:
        segments.append(cur)
    out = []
    for seg in segments:
        a, b = seg[0], seg[-1]
        keep = [k for k in range(algebra.dim)
                if k not in dead_monoms
                and a <= algebra.src[k] <= b and a <= algebra.tgt[k] <= b]
        reindex = {k: i for i, k in enumerate(keep)}
        basis = [Monomial(algebra.basis[k].start - a + 1, algebra.basis[k].downs,
                          algebra.basis[k].ups) for k in keep]
        dim = len(keep)
        table = np.full((dim, dim), -1, dtype=np.int64)
        for x, kx in enumerate(keep):
            for y, ky in enumerate(keep):
                k = algebra.mul_indices(kx, ky)
                if k >= 0 and k not in dead_monoms:
                    table[x, y] = reindex[k]
        idems = [reindex[algebra.idempotents[v - 1]] for v in seg]
        arrows = {}
        for i in range(1, len(seg)):
            arrows[f"a{i}"] = reindex[algebra.arrows[f"a{i + a - 1}"]]
            arrows[f"b{i + 1}"] = reindex[algebra.arrows[f"b{i + a}"]]
        out.append((seg, AssocAlgebra(len(seg), algebra.p, basis, table, idems, arrows,
                                      name=f"{algebra.name}|{seg}")))
    return out
