"""Tilting ideals: the semigroup generated by the maximal ideals, the word
map, tilting verification, and the tilting Hasse quiver.

Every product of the maximal ideals I_1..I_{n-1} is stored canonically
(echelonized row space), so semigroup equality is byte equality of keys.
The right-module summands e_i*T keep their embedding into the algebra so
that multiplication maps between them stay available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from . import fpmat, modules, symgroup
from .algebra import (AssocAlgebra, TwoSidedIdeal, corner_ideal, ideal_product,
                      idempotent_generated_ideal, unit_ideal)
from .modules import QuiverRep
from .poset import HassePoset


def maximal_ideal(algebra: AssocAlgebra, i: int) -> TwoSidedIdeal:
    """The codimension-one ideal generated by all idempotents except e_i."""
    if not 1 <= i <= algebra.n:
        raise ValueError(f"vertex {i} out of range")
    others = [v for v in range(1, algebra.n + 1) if v != i]
    return idempotent_generated_ideal(algebra, others)


def embedded_module(algebra: AssocAlgebra, vertex_rows, provenance="") -> QuiverRep:
    """Right module from per-vertex row spaces of algebra elements.

    ``vertex_rows[v]`` spans the vertex-(v+1) component inside A e_{v+1},
    as rows over the full monomial basis.  The arrow action is table
    multiplication expressed in these bases; the embedding is kept on the
    rep for later element-level computations.
    """
    p = algebra.p
    rows = [fpmat.row_space(r, p) for r in vertex_rows]
    pivots = [fpmat.rref(r, p)[1] for r in rows]
    mats = {}
    for name, aidx, s, t in modules.arrow_list(algebra):
        pushed = fpmat.matmul(rows[s], algebra.right_mult_mats[aidx], p)
        mats[name] = fpmat.express_in_rref(rows[t], pivots[t], pushed, p) \
            if pushed.shape[0] else fpmat.zeros(0, rows[t].shape[0])
    rep = QuiverRep(algebra, [r.shape[0] for r in rows], mats, provenance)
    rep._embedding = rows
    rep._embedding_pivots = pivots
    return rep


def ideal_component_module(T: TwoSidedIdeal, i: int, provenance="") -> QuiverRep:
    """The right module e_i * T."""
    A = T.algebra
    comp = T.component_rows(i)
    vertex_rows = []
    for v in range(1, A.n + 1):
        mask = (A.tgt == v).astype(np.int64)
        vertex_rows.append(fpmat.row_space(comp * mask[None, :], A.p))
    return embedded_module(A, vertex_rows, provenance or f"e{i}*T")


def ideal_summands(T: TwoSidedIdeal, word=None) -> list[QuiverRep]:
    """The modules e_1*T .. e_n*T; their direct sum is T as a right module."""
    tag = f"I(w={list(word)})" if word is not None else "T"
    return [ideal_component_module(T, i, provenance=f"e{i}*{tag}")
            for i in range(1, T.algebra.n + 1)]


def ideal_as_module(T: TwoSidedIdeal, provenance="") -> QuiverRep:
    """The whole ideal as a right module (direct sum of its components)."""
    A = T.algebra
    parts = ideal_summands(T)
    D, _, _ = modules.direct_sum(A, parts, provenance or "T-module")
    return D


def ideal_of_word(algebra: AssocAlgebra, w) -> TwoSidedIdeal:
    """Product of maximal ideals along a reduced expression of w in S_n."""
    w = symgroup.check_permutation(w)
    if len(w) != algebra.n:
        raise ValueError(f"permutation degree {len(w)} != n={algebra.n}")
    T = unit_ideal(algebra)
    for i in symgroup.canonical_reduced_word(w):
        T = ideal_product(T, maximal_ideal(algebra, i))
    return T


def ideal_of_letters(algebra: AssocAlgebra, letters) -> TwoSidedIdeal:
    """Product I_{i_1} * ... * I_{i_l} for an arbitrary (not necessarily reduced) word."""
    T = unit_ideal(algebra)
    for i in letters:
        T = ideal_product(T, maximal_ideal(algebra, i))
    return T


# ---------------------------------------------------------------------------
# tilting verification

@dataclass
class TiltingCertificate:
    proj_dim_ok: bool
    ext_vanishes: bool
    summand_count: int
    expected_count: int

    @property
    def ok(self) -> bool:
        return (self.proj_dim_ok and self.ext_vanishes
                and self.summand_count == self.expected_count)

    def failed_axiom(self) -> str | None:
        if not self.proj_dim_ok:
            return "T1"
        if not self.ext_vanishes:
            return "T2"
        if self.summand_count != self.expected_count:
            return "T3'"
        return None


def is_tilting(summands: list[QuiverRep], strict=True) -> TiltingCertificate:
    """Check the tilting axioms for a module given by its indecomposable summands."""
    if not summands:
        raise ValueError("empty summand list")
    A = summands[0].algebra
    for s in summands:
        if not modules.has_simple_socle(s):
            raise ValueError("summand is not indecomposable (socle is not simple)")
    pd_ok = all(modules.proj_dim(s) <= 1 for s in summands)
    total, _, _ = modules.direct_sum(A, summands)
    ext_ok = modules.ext_dim(total, total, 1) == 0
    distinct: list[QuiverRep] = []
    for s in summands:
        if not any(modules.is_isomorphic(s, z, strict=strict) for z in distinct):
            distinct.append(s)
    return TiltingCertificate(pd_ok, ext_ok, len(distinct), A.n)


# ---------------------------------------------------------------------------
# Hom from a maximal ideal (the right-mutation direction)

def left_mult_map(source: QuiverRep, target: QuiverRep, elem_vec) -> modules.ModuleMap:
    """Map of embedded modules given by left multiplication by an element."""
    A = source.algebra
    lm = A.left_mult_matrix(elem_vec)
    mats = []
    for w in range(A.n):
        pushed = fpmat.matmul(source._embedding[w], lm, A.p)
        mats.append(fpmat.express_in_rref(target._embedding[w], target._embedding_pivots[w],
                                          pushed, A.p)
                    if pushed.shape[0] else fpmat.zeros(0, target.dims[w]))
    return modules.ModuleMap(source, target, mats)


def _stacked_embeddings(A, tsum):
    """Per-vertex embedding of a direct sum of embedded modules, with solvers."""
    out = []
    for w in range(A.n):
        e = fpmat.vstack([t._embedding[w] for t in tsum], A.dim)
        out.append(e)
    return out


def _express_rows(stacked_w, rows, p):
    coords = fpmat.solve_left(stacked_w, rows, p)
    if coords is None:
        raise AssertionError("element fell outside the embedded module")
    return coords


def hom_from_ideal(algebra: AssocAlgebra, i: int, T: TwoSidedIdeal):
    """Hom(I_i, T) as a right module, with the natural inclusion of T.

    The vertex-v component is Hom(e_v I_i, T) and arrows act by
    precomposition with left multiplication.  Returns (H, incl) where
    incl embeds the module T.
    """
    A = algebra
    I = maximal_ideal(A, i)
    icomps = [ideal_component_module(I, v, provenance=f"e{v}*I{i}") for v in range(1, A.n + 1)]
    tmod = ideal_as_module(T, provenance="T")
    hom_bases = [modules.hom_basis(icomps[v], tmod) for v in range(A.n)]
    dims = [len(b) for b in hom_bases]
    # flattened hom-basis rows; all coordinates below refer to these rows
    flat = [np.stack([h.flatten() for h in hom_bases[v]]) if dims[v] else
            fpmat.zeros(0, sum(icomps[v].dims[w] * tmod.dims[w] for w in range(A.n)))
            for v in range(A.n)]

    def hom_coords(v, flat_hom):
        c = fpmat.solve_left(flat[v], flat_hom.reshape(1, -1), A.p)
        if c is None:
            raise AssertionError("composite is not a module map")
        return c[0]

    mats = {}
    for name, aidx, s, t in modules.arrow_list(A):
        lam = left_mult_map(icomps[t], icomps[s], A.basis_vector(aidx))
        m = fpmat.zeros(dims[s], dims[t])
        for r, h in enumerate(hom_bases[s]):
            if dims[t]:
                m[r] = hom_coords(t, lam.then(h).flatten())
        mats[name] = m
    H = QuiverRep(A, dims, mats, provenance=f"Hom(I{i},T)")
    # inclusion of T: an element x with target v maps to (y -> x*y) on e_v I_i
    incl_mats = []
    tsum = ideal_summands(T)
    stacked = _stacked_embeddings(A, tsum)
    for v in range(A.n):
        m = fpmat.zeros(tmod.dims[v], dims[v])
        row_off = 0
        for j in range(A.n):
            blk = tsum[j].dims[v]
            if dims[v]:
                for r in range(blk):
                    x = tsum[j]._embedding[v][r]
                    hom = _right_mult_hom(A, x, icomps[v], tmod, tsum, stacked)
                    m[row_off + r] = hom_coords(v, hom.flatten())
            row_off += blk
        incl_mats.append(m)
    incl = modules.ModuleMap(tmod, H, incl_mats)
    return H, incl, tmod


def _right_mult_hom(A, x_vec, idl_comp: QuiverRep, tmod: QuiverRep, tsum,
                    stacked=None) -> modules.ModuleMap:
    """The hom e_vI_i -> T given by y -> x*y for a fixed element x of e_vT."""
    if stacked is None:
        stacked = _stacked_embeddings(A, tsum)
    lx = A.left_mult_matrix(x_vec)
    mats = []
    for w in range(A.n):
        if idl_comp.dims[w] == 0 or tmod.dims[w] == 0:
            mats.append(fpmat.zeros(idl_comp.dims[w], tmod.dims[w]))
            continue
        prods = fpmat.matmul(idl_comp._embedding[w], lx, A.p)
        mats.append(_express_rows(stacked[w], prods, A.p))
    return modules.ModuleMap(idl_comp, tmod, mats)


# ---------------------------------------------------------------------------
# enumeration of the tilting poset

@dataclass
class TiltRecord:
    word: tuple[int, ...]          # one-line permutation in S_n
    ideal: TwoSidedIdeal
    summands: list = field(default_factory=list)  # e_i*T modules, built lazily


class TiltCatalog:
    def __init__(self, algebra: AssocAlgebra):
        self.algebra = algebra
        self.records: list[TiltRecord] = []
        self.by_key: dict[bytes, int] = {}
        self.by_word: dict[tuple, int] = {}
        self.hasse = HassePoset()

    def __len__(self):
        return len(self.records)

    def record_of_word(self, w) -> TiltRecord:
        return self.records[self.by_word[tuple(w)]]

    def summands_of(self, idx: int) -> list[QuiverRep]:
        rec = self.records[idx]
        if not rec.summands:
            rec.summands = ideal_summands(rec.ideal, word=rec.word)
        return rec.summands


def tilt_enumerate(algebra: AssocAlgebra) -> TiltCatalog:
    """All n! ideal products, labeled by permutations, plus the Hasse quiver.

    Walks the left multiplications I_i * T from the unit ideal; a product
    that changes the ideal is the length-increasing neighbor, so each Hasse
    arrow is emitted once from its upper end.  Aborts if the count is not n!.
    """
    n = algebra.n
    cat = TiltCatalog(algebra)
    maximals = [maximal_ideal(algebra, i) for i in range(1, n)]
    ident = symgroup.identity(n)
    lam = unit_ideal(algebra)
    cat.records.append(TiltRecord(ident, lam))
    cat.by_key[lam.key] = 0
    cat.by_word[ident] = 0
    cat.hasse.add_vertex(lam.key, symgroup.perm_label(ident))
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            rec = cat.records[idx]
            for i in range(1, n):
                prod = ideal_product(maximals[i - 1], rec.ideal)
                if prod.key == rec.ideal.key:
                    continue
                w2 = symgroup.compose(symgroup.transposition(n, i), rec.word)
                if symgroup.inversion_length(w2) != symgroup.inversion_length(rec.word) + 1:
                    raise AssertionError("length bookkeeping failed in tilt walk")
                j = cat.by_key.get(prod.key)
                if j is None:
                    j = len(cat.records)
                    cat.records.append(TiltRecord(w2, prod))
                    cat.by_key[prod.key] = j
                    cat.by_word[w2] = j
                    cat.hasse.add_vertex(prod.key, symgroup.perm_label(w2))
                    nxt.append(j)
                elif cat.records[j].word != w2:
                    raise AssertionError("word labels disagree; the word map is not "
                                         "well-defined on this input")
                cat.hasse.add_arrow(cat.hasse.index[rec.ideal.key],
                                    cat.hasse.index[prod.key], tag=i)
        frontier = nxt
    if len(cat.records) != factorial(n):
        raise RuntimeError(f"tilting count {len(cat.records)} != {factorial(n)}")
    return cat


def tilt_hasse(algebra: AssocAlgebra) -> HassePoset:
    return tilt_enumerate(algebra).hasse


def check_semigroup_relations(algebra: AssocAlgebra) -> dict:
    """Idempotency, commutation and braid relations of the maximal ideals."""
    n = algebra.n
    maximals = {i: maximal_ideal(algebra, i) for i in range(1, n)}
    failures = []
    checked = {"idempotent": 0, "commutation": 0, "braid": 0}
    for i in range(1, n):
        checked["idempotent"] += 1
        if ideal_product(maximals[i], maximals[i]).key != maximals[i].key:
            failures.append(f"I_{i}^2 != I_{i}")
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i >= 2:
                checked["commutation"] += 1
                ij = ideal_product(maximals[i], maximals[j])
                ji = ideal_product(maximals[j], maximals[i])
                if ij.key != ji.key:
                    failures.append(f"I_{i} I_{j} != I_{j} I_{i}")
            else:
                checked["braid"] += 1
                iji = ideal_product(ideal_product(maximals[i], maximals[j]), maximals[i])
                jij = ideal_product(ideal_product(maximals[j], maximals[i]), maximals[j])
                if iji.key != jij.key:
                    failures.append(f"braid fails at ({i},{j})")
    return {"ok": not failures, "checked": checked, "failures": failures}


def tilt_catalog_json(cat: TiltCatalog) -> list[dict]:
    out = []
    order = sorted(range(len(cat.records)),
                   key=lambda k: (symgroup.inversion_length(cat.records[k].word),
                                  cat.records[k].word))
    for k in order:
        rec = cat.records[k]
        out.append({
            "word": list(rec.word),
            "summand_dim_vectors": [list(s.dims) for s in cat.summands_of(k)],
            "ideal_dim": rec.ideal.dim,
        })
    return out


TILT_CATALOG_JSON_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["word", "summand_dim_vectors", "ideal_dim"],
        "properties": {
            "word": {"type": "array", "items": {"type": "integer"}},
            "summand_dim_vectors": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}},
            },
            "ideal_dim": {"type": "integer", "minimum": 0},
        },
    },
}


def end_ring_matches_algebra(algebra: AssocAlgebra, T: TwoSidedIdeal) -> bool:
    """dim End(T) = dim(algebra) and the left action embeds the algebra."""
    tsum = ideal_summands(T)
    tmod, _, _ = modules.direct_sum(algebra, tsum)
    if modules.hom_dim(tmod, tmod) != algebra.dim:
        return False
    stacked = _stacked_embeddings(algebra, tsum)
    vecs = []
    for k in range(algebra.dim):
        lx = algebra.left_mult_matrix(algebra.basis_vector(k))
        flat = []
        for w in range(algebra.n):
            if tmod.dims[w] == 0:
                continue
            prods = fpmat.matmul(stacked[w], lx, algebra.p)
            flat.append(_express_rows(stacked[w], prods, algebra.p).reshape(-1))
        vecs.append(np.concatenate(flat) if flat else np.zeros(0, dtype=np.int64))
    return fpmat.rank(np.stack(vecs), algebra.p) == algebra.dim
