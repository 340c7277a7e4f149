"""Engine selection for tableau normal forms."""

from __future__ import annotations

from .element import GdnElement
from .embed import nf_embed
from .rewrite import nf_rewrite

__all__ = ["METHODS", "EngineMismatch", "normal_form"]

METHODS = ("rewrite", "embed", "both")


class EngineMismatch(AssertionError):
    def __init__(self, source, by_rewrite: GdnElement, by_embed: GdnElement):
        super().__init__(f"engines disagree on {source}: rewrite gives {by_rewrite}, embed gives {by_embed}")
        self.source = source
        self.by_rewrite = by_rewrite
        self.by_embed = by_embed


def normal_form(e, method: str = "rewrite") -> GdnElement:
    """Normal form by ``method``; with ``"both"`` the engines must agree."""
    if method == "rewrite":
        return nf_rewrite(e)
    if method == "embed":
        return nf_embed(e)
    if method == "both":
        a, b = nf_rewrite(e), nf_embed(e)
        if a != b:
            raise EngineMismatch(e, a, b)
        return a
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
