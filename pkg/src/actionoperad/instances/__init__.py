"""Concrete action operads and a name-based registry.

``get_instance("sigma")`` and friends return ready-to-use operads; the
accepted names are listed in :data:`SELECTORS`.
"""

from __future__ import annotations

from ..aopcore import ActionOperad
from .abelian import AbelianGroup, AbelianOperad, AbelianTuple
from .braid import BraidOperad, BraidWord, braid_beta, braid_delta, braid_is_trivial, garside_half_twist
from .cactus import (
    CactusOperad,
    CactusWord,
    cactus_beta,
    cactus_delta,
    cactus_equal,
    cactus_pi,
    coboundary_commutor,
)
from .ribbon import RibbonElement, RibbonOperad, ribbon_delta
from .sigma import SymmetricOperad
from .trivial import TrivialElement, TrivialOperad

__all__ = [
    "AbelianGroup",
    "AbelianOperad",
    "AbelianTuple",
    "BraidOperad",
    "BraidWord",
    "CactusOperad",
    "CactusWord",
    "RibbonElement",
    "RibbonOperad",
    "SymmetricOperad",
    "TrivialElement",
    "TrivialOperad",
    "SELECTORS",
    "get_instance",
    "braid_beta",
    "braid_delta",
    "braid_is_trivial",
    "garside_half_twist",
    "cactus_beta",
    "cactus_delta",
    "cactus_equal",
    "cactus_pi",
    "coboundary_commutor",
    "ribbon_delta",
]

SELECTORS = ("sigma", "trivial", "abelian:<m>", "braid", "ribbon", "cactus", "hyperoct:v1", "hyperoct:v2")


def get_instance(selector: str) -> ActionOperad:
    """Look up an instance by name, e.g. ``"abelian:3"`` for A-bullet with A = Z/3.

    ``"abelian:0"`` is the integers.  Unknown names raise ``KeyError``.
    """
    sel = selector.strip().lower()
    simple = {
        "sigma": SymmetricOperad,
        "trivial": TrivialOperad,
        "braid": BraidOperad,
        "ribbon": RibbonOperad,
        "cactus": CactusOperad,
    }
    if sel in simple:
        return simple[sel]()
    if sel.startswith("abelian:"):
        try:
            m = int(sel.split(":", 1)[1])
        except ValueError:
            raise KeyError(selector) from None
        if m < 0:
            raise KeyError(selector)
        return AbelianOperad(m)
    if sel in ("hyperoct:v1", "hyperoct:v2"):
        from ..nonexamples import HyperoctahedralCandidate

        return HyperoctahedralCandidate(1 if sel.endswith("1") else 2)
    raise KeyError(selector)
