"""Transport of support pairs to the preprojective algebra of type A_n.

The preprojective algebra is the quotient by the loop ideal at the last
vertex; tensoring a pair down to it means killing that ideal's action on
every summand.  The bridge maps the enumerated catalog slotwise, re-wraps
each image over the quotient algebra, and checks injectivity, preservation
of Hasse arrows, and tau-rigidity on the other side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import modules, symgroup
from .algebra import (AssocAlgebra, TwoSidedIdeal, loop_ideal, quotient_algebra)
from .modules import QuiverRep
from .poset import HassePoset
from .stt import SttContext, SttEnumeration, SttPair, SummandCatalog


@dataclass
class GammaContext:
    base: AssocAlgebra
    loop: TwoSidedIdeal
    gamma: AssocAlgebra
    catalog: SummandCatalog


def make_gamma_context(algebra: AssocAlgebra) -> GammaContext:
    loop = loop_ideal(algebra)
    gamma = quotient_algebra(algebra, loop, name=f"Gamma(n={algebra.n},p={algebra.p})")
    return GammaContext(algebra, loop, gamma, SummandCatalog(gamma))


def rewrap_over_gamma(gctx: GammaContext, X: QuiverRep, provenance="") -> QuiverRep:
    """Reread a loop-annihilated module as a module over the quotient algebra."""
    mats = {name: X.arrow_mats[name] for name in gctx.gamma.arrows}
    return QuiverRep(gctx.gamma, X.dims, mats, provenance or X.provenance)


def to_gamma_module(gctx: GammaContext, X: QuiverRep) -> QuiverRep:
    """X tensored down: kill the loop ideal, then change base ring."""
    Q = modules.act_quotient(X, gctx.loop, provenance=f"{X.provenance}@pp")
    return rewrap_over_gamma(gctx, Q, provenance=f"{X.provenance}@pp")


def to_gamma(gctx: GammaContext, ctx: SttContext, pair: SttPair) -> SttPair:
    """Slotwise image of a support pair over the preprojective algebra."""
    mods = []
    for s in pair.slots:
        if s is None:
            mods.append(None)
        else:
            mods.append(to_gamma_module(gctx, ctx.summand(s)))
    n = gctx.gamma.n
    slots = []
    total = [0] * n
    for M in mods:
        if M is None or M.is_zero():
            slots.append(None)
        else:
            slots.append(gctx.catalog.intern(M))
            for v in range(n):
                total[v] += M.dims[v]
    complement = frozenset(v + 1 for v in range(n) if total[v] == 0)
    if sum(1 for s in slots if s is not None) + len(complement) != n:
        raise AssertionError("image pair loses the summand count")
    return SttPair(tuple(slots), complement, pair.word)


def verify_gamma_bijection(gctx: GammaContext, ctx: SttContext,
                           enum: SttEnumeration) -> dict:
    """Images are pairwise distinct and Hasse arrows map to Hasse arrows."""
    n1 = gctx.base.n + 1
    images = {}
    image_hasse = HassePoset()
    for pair in enum.pairs:
        img = to_gamma(gctx, ctx, pair)
        images[pair.key] = img
        image_hasse.add_vertex(img.key, symgroup.perm_label(img.word))
    distinct = len({img.key for img in images.values()}) == len(enum.pairs)
    for u, v, tag in enum.hasse.arrows:
        ku = images[enum.hasse.keys[u]].key
        kv = images[enum.hasse.keys[v]].key
        image_hasse.add_arrow(image_hasse.index[ku], image_hasse.index[kv], tag)
    arrows_preserved = image_hasse.n_arrows == enum.hasse.n_arrows
    graphs_match = enum.hasse.is_isomorphic_to(
        image_hasse, lambda k: images[k].key)
    complements_equal = all(images[pr.key].complement == pr.complement
                            for pr in enum.pairs)
    ok = distinct and arrows_preserved and graphs_match and complements_equal \
        and len(images) == factorial(n1)
    return {
        "ok": ok,
        "count": len(images),
        "distinct": distinct,
        "arrows_preserved": arrows_preserved,
        "graphs_match": graphs_match,
        "complements_equal": complements_equal,
        "images": images,
        "image_hasse": image_hasse,
    }


def gamma_tau_rigidity_check(gctx: GammaContext, ctx: SttContext,
                             enum: SttEnumeration) -> dict:
    """Every image pair is tau-rigid over the preprojective algebra."""
    failures = []
    for pair in enum.pairs:
        img = to_gamma(gctx, ctx, pair)
        mods = [gctx.catalog.entries[s] for s in img.slots if s is not None]
        if not mods:
            continue
        total, _, _ = modules.direct_sum(gctx.gamma, mods)
        if not modules.is_tau_rigid(total):
            failures.append(pair.word)
    return {"ok": not failures, "checked": len(enum.pairs), "failures": failures[:5]}


def independent_gamma_enumeration(gctx: GammaContext, threads: int = 1) -> SttEnumeration:
    """Mutation search run natively over the preprojective algebra.

    Optional cross-check: the image of the bridge must coincide with this
    catalog key-for-key.
    """
    from . import stt as _stt

    ctx = _stt.SttContext(gctx.gamma)
    ctx.catalog = gctx.catalog  # share interned summands so keys are comparable
    return _stt.enumerate_stt(ctx, threads=threads)


def gamma_catalog_json(gctx: GammaContext, ctx: SttContext,
                       enum: SttEnumeration) -> list[dict]:
    out = []
    order = sorted(range(len(enum.pairs)),
                   key=lambda i: (symgroup.inversion_length(enum.pairs[i].word),
                                  enum.pairs[i].word))
    for i in order:
        pair = enum.pairs[i]
        img = to_gamma(gctx, ctx, pair)
        ci, base = symgroup.coset_factorize(pair.word)
        out.append({
            "key": repr(img.key),
            "source_key": repr(pair.key),
            "word": list(pair.word),
            "i": ci,
            "base_word": list(base),
            "summands": [gctx.catalog.entries[s].to_json() if s is not None else None
                         for s in img.slots],
            "support_complement": sorted(img.complement),
        })
    return out
