"""One-stop workspace tying together the algebra, catalogs and bridges for (n, p)."""

from __future__ import annotations

from functools import cached_property

from . import ppbridge, stt
from .algebra import build_auslander, corner_ideal, loop_ideal
from .ideals import TiltCatalog, tilt_enumerate
from .stt import SttContext, SttEnumeration


class Workspace:
    def __init__(self, n: int, p: int = 2, threads: int = 1):
        self.n = n
        self.p = p
        self.threads = threads

    @cached_property
    def algebra(self):
        return build_auslander(self.n, self.p)

    @cached_property
    def corner(self):
        return corner_ideal(self.algebra)

    @cached_property
    def loop(self):
        return loop_ideal(self.algebra)

    @cached_property
    def tilt(self) -> TiltCatalog:
        return tilt_enumerate(self.algebra)

    @cached_property
    def stt_context(self) -> SttContext:
        return SttContext(self.algebra, tilt=self.tilt)

    @cached_property
    def stt(self) -> SttEnumeration:
        return stt.enumerate_stt(self.stt_context, threads=self.threads)

    @cached_property
    def gamma_context(self) -> ppbridge.GammaContext:
        return ppbridge.make_gamma_context(self.algebra)


_cache: dict[tuple[int, int], Workspace] = {}


def workspace(n: int, p: int = 2, threads: int = 1) -> Workspace:
    """Shared workspace per (n, p); thread count only affects fresh builds."""
    key = (n, p)
    ws = _cache.get(key)
    if ws is None:
        ws = Workspace(n, p, threads)
        _cache[key] = ws
    return ws
