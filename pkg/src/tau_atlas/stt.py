"""Support tau-tilting pairs over the Auslander algebra and their mutation.

A pair is stored positionally: n slots, each holding an indecomposable
summand (as an index into a shared catalog of certified representatives)
or None when the coordinate has been dropped to the support part.  Two
engines produce pairs:

* the generic one mutates by minimal left approximations and cokernels,
* the structural one reads the pair straight off a tilting ideal by
  flattening the trailing summands with the corner ideal.

Both are exposed so the acceptance suite can require them to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from . import fpmat, modules, symgroup
from .algebra import AssocAlgebra, TwoSidedIdeal, corner_ideal
from .ideals import TiltCatalog, ideal_summands, tilt_enumerate
from .modules import QuiverRep
from .poset import HassePoset


class SummandCatalog:
    """Indecomposable summands seen so far, deduplicated with certified isomorphisms."""

    def __init__(self, algebra: AssocAlgebra):
        self.algebra = algebra
        self.entries: list[QuiverRep] = []
        self.by_fingerprint: dict[tuple, list[int]] = {}

    def __len__(self):
        return len(self.entries)

    def lookup(self, M: QuiverRep) -> int | None:
        for idx in self.by_fingerprint.get(modules.fingerprint(M), []):
            if modules.is_isomorphic(self.entries[idx], M):
                return idx
        return None

    def add(self, M: QuiverRep) -> int:
        if not modules.has_simple_socle(M):
            raise ValueError("catalog entries must have simple socle")
        idx = len(self.entries)
        self.entries.append(M)
        self.by_fingerprint.setdefault(modules.fingerprint(M), []).append(idx)
        return idx

    def intern(self, M: QuiverRep) -> int:
        found = self.lookup(M)
        return found if found is not None else self.add(M)


@dataclass(frozen=True)
class SttPair:
    slots: tuple  # catalog index per coordinate, or None
    complement: frozenset  # 1-based vertices carrying the projective part
    word: tuple  # one-line permutation in S_{n+1}

    @property
    def key(self):
        return (self.slots, self.complement)

    def module_slots(self):
        return [k for k, s in enumerate(self.slots) if s is not None]


class SttContext:
    """Shared state for building support pairs over one algebra."""

    def __init__(self, algebra: AssocAlgebra, tilt: TiltCatalog | None = None):
        self.algebra = algebra
        self.catalog = SummandCatalog(algebra)
        self.corner = corner_ideal(algebra)
        self.tilt = tilt

    def require_tilt(self) -> TiltCatalog:
        if self.tilt is None:
            self.tilt = tilt_enumerate(self.algebra)
        return self.tilt

    def summand(self, idx: int) -> QuiverRep:
        return self.catalog.entries[idx]

    def pair_modules(self, pair: SttPair) -> list[QuiverRep]:
        return [self.summand(s) for s in pair.slots if s is not None]

    def pair_total(self, pair: SttPair) -> QuiverRep:
        D, _, _ = modules.direct_sum(self.algebra, self.pair_modules(pair))
        return D

    def make_pair(self, slot_modules: list, word) -> SttPair:
        """Intern slot modules, derive the support complement, check the count."""
        n = self.algebra.n
        slots = []
        total = [0] * n
        for M in slot_modules:
            if M is None or M.is_zero():
                slots.append(None)
            else:
                slots.append(self.catalog.intern(M))
                for v in range(n):
                    total[v] += M.dims[v]
        complement = frozenset(v + 1 for v in range(n) if total[v] == 0)
        filled = sum(1 for s in slots if s is not None)
        if filled + len(complement) != n:
            raise AssertionError("support bookkeeping violated: "
                                 f"{filled} summands + {len(complement)} support != {n}")
        return SttPair(tuple(slots), complement, tuple(word))


def projective_pair(ctx: SttContext) -> SttPair:
    A = ctx.algebra
    mods = [modules.projective(A, i) for i in range(1, A.n + 1)]
    return ctx.make_pair(mods, symgroup.identity(A.n + 1))


# ---------------------------------------------------------------------------
# approximations and the generic mutation step

def is_left_approximation(X: QuiverRep, comps, targets) -> bool:
    """Does composing with the given maps X -> V_k hit every Hom(X, V_t)?"""
    p = X.algebra.p
    for Vt in targets:
        want = len(modules.hom_basis(X, Vt))
        if want == 0:
            continue
        got = []
        for k, h in comps:
            src = targets[k]
            for g in modules.hom_basis(src, Vt):
                got.append(h.then(g).flatten())
        if not got or fpmat.rank(np.stack(got), p) < want:
            return False
    return True


def minimal_left_approximation(X: QuiverRep, targets: list[QuiverRep]):
    """Minimal left approximation of X into the additive hull of the targets.

    Starts from the stacked hom-basis approximation and greedily deletes
    copies while the lifting property survives.  Returns the list of
    (target index, map) components.
    """
    comps = []
    for k, V in enumerate(targets):
        for h in modules.hom_basis(X, V):
            comps.append((k, h))
    changed = True
    while changed:
        changed = False
        for i in range(len(comps)):
            trial = comps[:i] + comps[i + 1 :]
            if is_left_approximation(X, trial, targets):
                comps = trial
                changed = True
                break
    return comps


def approximation_map(X: QuiverRep, comps, targets):
    """Bundle approximation components into a single map X -> V'."""
    A = X.algebra
    parts = [targets[k] for k, _ in comps]
    if not parts:
        Vp = modules.zero_rep(A)
        return modules.ModuleMap(X, Vp, [fpmat.zeros(d, 0) for d in X.dims]), Vp
    Vp, _, _ = modules.direct_sum(A, parts)
    mats = []
    for v in range(A.n):
        cols = [h.mats[v] for _, h in comps]
        mats.append(np.hstack(cols) if cols else fpmat.zeros(X.dims[v], 0))
    return modules.ModuleMap(X, Vp, mats), Vp


class NotLeftMutable(Exception):
    pass


def mutation_cokernel(ctx: SttContext, pair: SttPair, k: int):
    """The exchange cokernel at slot k, before catalog resolution.

    Pure linear algebra (safe to run concurrently): minimal left
    approximation of the slot into the other summands, then its cokernel.
    """
    if pair.slots[k] is None:
        raise NotLeftMutable(f"slot {k} carries no module")
    X = ctx.summand(pair.slots[k])
    others = [ctx.summand(s) for j, s in enumerate(pair.slots) if j != k and s is not None]
    if modules.in_fac(X, others):
        raise NotLeftMutable(f"slot {k} is generated by the rest")
    comps = minimal_left_approximation(X, others)
    f, _ = approximation_map(X, comps, others)
    Y, _ = modules.cokernel(f, provenance=f"mu{k + 1}({X.provenance})")
    return Y


def finish_mutation(ctx: SttContext, pair: SttPair, k: int, Y: QuiverRep) -> SttPair:
    n1 = ctx.algebra.n + 1
    new_word = symgroup.compose(symgroup.transposition(n1, k + 1), pair.word)
    if symgroup.inversion_length(new_word) != symgroup.inversion_length(pair.word) + 1:
        raise AssertionError("left mutation did not increase word length")
    new_mods = []
    for j, s in enumerate(pair.slots):
        if j == k:
            new_mods.append(_resolve_cokernel(ctx, Y))
        else:
            new_mods.append(None if s is None else ctx.summand(s))
    return ctx.make_pair(new_mods, new_word)


def left_mutation(ctx: SttContext, pair: SttPair, k: int) -> SttPair:
    """Exchange the k-th summand (0-based slot) downward.

    Raises NotLeftMutable when the summand generates itself from the rest,
    i.e. when this coordinate points upward in the poset.
    """
    return finish_mutation(ctx, pair, k, mutation_cokernel(ctx, pair, k))


def _resolve_cokernel(ctx: SttContext, Y: QuiverRep):
    """Identify the class Z with Y = Z^m; certified by explicit splittings."""
    if Y.is_zero():
        return None
    counts, new_entries = modules.split_indecomposables(
        Y, ctx.catalog.entries, allow_new=True)
    for M in new_entries:
        ctx.catalog.add(M)
    if len(counts) != 1:
        raise AssertionError("mutation cokernel is not isotypic")
    ((idx, _mult),) = counts.items()
    return ctx.summand(idx)


# ---------------------------------------------------------------------------
# structural engine: pairs straight from a tilting ideal

def interval_pair(ctx: SttContext, T: TwoSidedIdeal, i: int, word=None,
                  base_word=None) -> SttPair:
    """Pair with summands e_1T..e_iT then the corner quotients of e_iT..e_{n-1}T.

    Realizes the successive mutations at coordinates n, n-1, .., i+1 of the
    tilting module in closed form.
    """
    A = ctx.algebra
    n = A.n
    if not 0 <= i <= n:
        raise ValueError(f"interval index {i} out of range")
    tag = f"I(w={list(base_word)})" if base_word is not None else "T"
    comps = ideal_summands(T, word=base_word)
    mods = []
    for slot in range(1, n + 1):
        if slot <= i:
            mods.append(comps[slot - 1])
        else:
            j = slot - 1
            if j == 0:
                mods.append(None)
            else:
                bar = modules.act_quotient(comps[j - 1], ctx.corner,
                                           provenance=f"bar(e{j}*{tag})")
                mods.append(None if bar.is_zero() else bar)
    if word is None:
        base = symgroup.identity(n) if base_word is None else tuple(base_word)
        prefix = symgroup.coset_prefix_word(n, i)
        ext = tuple(base) + (n + 1,)
        word = symgroup.evaluate_word(prefix, n + 1)
        word = symgroup.compose(word, ext)
    return ctx.make_pair(mods, word)


def mu_interval(ctx: SttContext, T: TwoSidedIdeal, i: int) -> SttPair:
    return interval_pair(ctx, T, i)


def stt_of_word(ctx: SttContext, w) -> SttPair:
    """The pair attached to w in S_{n+1}, via the coset factorization fast path."""
    w = symgroup.check_permutation(w)
    n = ctx.algebra.n
    if len(w) != n + 1:
        raise ValueError(f"permutation degree {len(w)} != n+1 = {n + 1}")
    i, v = symgroup.coset_factorize(w)
    tilt = ctx.require_tilt()
    rec = tilt.record_of_word(v)
    return interval_pair(ctx, rec.ideal, i, word=w, base_word=v)


def stt_of_letters(ctx: SttContext, letters) -> SttPair:
    """Evaluate a generator word in S_{n+1} and return its pair."""
    w = symgroup.evaluate_word(letters, ctx.algebra.n + 1)
    return stt_of_word(ctx, w)


# ---------------------------------------------------------------------------
# enumeration

class SttEnumeration:
    def __init__(self, ctx: SttContext):
        self.ctx = ctx
        self.pairs: list[SttPair] = []
        self.by_key: dict = {}
        self.by_word: dict = {}
        self.hasse = HassePoset()

    def __len__(self):
        return len(self.pairs)

    def pair_of_word(self, w) -> SttPair:
        return self.pairs[self.by_word[tuple(w)]]

    def _insert(self, pair: SttPair) -> int:
        idx = self.by_key.get(pair.key)
        if idx is None:
            idx = len(self.pairs)
            self.pairs.append(pair)
            self.by_key[pair.key] = idx
            self.by_word[pair.word] = idx
            self.hasse.add_vertex(pair.key, symgroup.perm_label(pair.word))
        elif self.pairs[idx].word != pair.word:
            raise AssertionError("pair reached with two different words; "
                                 "mutation labeling is inconsistent")
        return idx


def enumerate_stt(ctx: SttContext, threads: int = 1) -> SttEnumeration:
    """Downward mutation search from the projective pair.

    Follows every left-mutable coordinate, interning summands in the shared
    catalog; aborts unless exactly (n+1)! pairs are found.  ``threads``
    parallelizes the per-pair mutation scan; insertion order and therefore
    all output is deterministic regardless of the thread count.
    """
    n = ctx.algebra.n
    enum = SttEnumeration(ctx)
    start = projective_pair(ctx)
    enum._insert(start)
    frontier = [start]
    while frontier:
        frontier.sort(key=lambda pr: pr.word)
        tasks = [(pair, k) for pair in frontier for k in pair.module_slots()]

        def attempt(task):
            pair, k = task
            try:
                return pair, k, mutation_cokernel(ctx, pair, k)
            except NotLeftMutable:
                return pair, k, None

        if threads > 1:
            # the pool only runs read-only linear algebra; catalog interning
            # happens below, sequentially in task order, so output does not
            # depend on the thread count
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(attempt, tasks))
        else:
            results = [attempt(t) for t in tasks]
        nxt = []
        for pair, k, coker in results:
            if coker is None:
                continue
            mut = finish_mutation(ctx, pair, k, coker)
            before = len(enum)
            enum._insert(mut)
            if len(enum) > before:
                nxt.append(mut)
            enum.hasse.add_arrow(enum.hasse.index[pair.key],
                                 enum.hasse.index[mut.key], tag=k + 1)
        frontier = nxt
    if len(enum) != factorial(n + 1):
        raise RuntimeError(f"support pair count {len(enum)} != {factorial(n + 1)}")
    return enum


def structural_enumeration(ctx: SttContext) -> dict:
    """All pairs via the interval construction, keyed by word."""
    n = ctx.algebra.n
    out = {}
    for w in symgroup.all_permutations(n + 1):
        out[w] = stt_of_word(ctx, w)
    return out


def classify_stt(ctx: SttContext, enum: SttEnumeration, pair: SttPair):
    """Recover (i, base permutation) with pair = interval_pair(I(base), i)."""
    if pair.key not in enum.by_key:
        raise ValueError("pair is not in the enumerated catalog")
    i, v = symgroup.coset_factorize(pair.word)
    corner_count = sum(
        1 for s in pair.slots
        if s is not None and ctx.summand(s).dims[ctx.algebra.n - 1] > 0)
    if corner_count != i:
        raise AssertionError("socle-factor count disagrees with the coset index")
    return i, v


def stt_leq(ctx: SttContext, U: SttPair, V: SttPair) -> bool:
    """Generation order: every summand of U is generated by the module part of V."""
    vmods = ctx.pair_modules(V)
    return all(modules.in_fac(ctx.summand(s), vmods)
               for s in U.slots if s is not None)


# ---------------------------------------------------------------------------
# verification reports

def verify_anti_isomorphism(ctx: SttContext, enum: SttEnumeration) -> dict:
    """The word map inverts the order: Hasse quivers are opposite, lengths match."""
    n1 = ctx.algebra.n + 1
    weak = symgroup.weak_left_hasse(n1)
    word_of_key = {pair.key: symgroup.perm_key(pair.word) for pair in enum.pairs}
    graphs_opposite = enum.hasse.is_anti_isomorphic_to(weak, lambda k: word_of_key[k])
    bijective = len(enum.by_word) == factorial(n1)
    reach = enum.hasse.reachability()
    length_vs_order = True
    for w in symgroup.all_permutations(n1):
        uw = enum.by_key[enum.pair_of_word(w).key]
        lw = symgroup.inversion_length(w)
        for j in range(1, n1):
            sjw = symgroup.compose(symgroup.transposition(n1, j), w)
            usw = enum.by_key[enum.pair_of_word(sjw).key]
            goes_up = symgroup.inversion_length(sjw) > lw
            below = usw in reach[uw]
            if goes_up != below:
                length_vs_order = False
    ok = graphs_opposite and bijective and length_vs_order
    return {"ok": ok, "bijective": bijective, "graphs_opposite": graphs_opposite,
            "length_vs_order": length_vs_order, "pairs": len(enum)}


def total_mutation_table(enum: SttEnumeration) -> dict:
    """For every pair key and coordinate: the neighbor key (left or right)."""
    table: dict = {}
    for u, v, tag in enum.hasse.arrows:
        ku = enum.hasse.keys[u]
        kv = enum.hasse.keys[v]
        if (ku, tag) in table or (kv, tag) in table:
            raise AssertionError("duplicate mutation coordinate in the quiver")
        table[(ku, tag)] = kv
        table[(kv, tag)] = ku
    return table


def verify_mutation_relations(ctx: SttContext, enum: SttEnumeration,
                              sample=None, seed=0) -> dict:
    """Involution, commutation and braid identities of the total mutations."""
    n = ctx.algebra.n
    table = total_mutation_table(enum)

    def mu(key, j):
        return table[(key, j)]

    keys = [pair.key for pair in enum.pairs]
    if sample is not None and sample < len(keys):
        import random

        rng = random.Random(seed)
        keys = rng.sample(keys, sample)
    failures = []
    for key in keys:
        for j in range(1, n + 1):
            if mu(mu(key, j), j) != key:
                failures.append(("involution", j, key))
            for k in range(j + 1, n + 1):
                if k - j >= 2:
                    if mu(mu(key, j), k) != mu(mu(key, k), j):
                        failures.append(("commutation", (j, k), key))
                else:
                    a = mu(mu(mu(key, j), k), j)
                    b = mu(mu(mu(key, k), j), k)
                    if a != b:
                        failures.append(("braid", (j, k), key))
    return {"ok": not failures, "checked_pairs": len(keys), "failures": failures[:10]}


def stt_catalog_json(ctx: SttContext, enum: SttEnumeration) -> list[dict]:
    out = []
    order = sorted(range(len(enum.pairs)),
                   key=lambda i: (symgroup.inversion_length(enum.pairs[i].word),
                                  enum.pairs[i].word))
    for i in order:
        pair = enum.pairs[i]
        ci, base = symgroup.coset_factorize(pair.word)
        out.append({
            "key": repr(pair.key),
            "word": list(pair.word),
            "i": ci,
            "base_word": list(base),
            "summands": [ctx.summand(s).to_json() if s is not None else None
                         for s in pair.slots],
            "support_complement": sorted(pair.complement),
        })
    return out


STT_CATALOG_JSON_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["key", "word", "i", "base_word", "summands", "support_complement"],
        "properties": {
            "key": {"type": "string"},
            "word": {"type": "array", "items": {"type": "integer"}},
            "i": {"type": "integer", "minimum": 0},
            "base_word": {"type": "array", "items": {"type": "integer"}},
            "summands": {"type": "array"},
            "support_complement": {"type": "array", "items": {"type": "integer"}},
        },
    },
}
