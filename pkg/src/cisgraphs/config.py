"""Лимиты и параметры вычислений."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    family_cap: int = 1 << 20
    search_backtrack_cap: int = 200_000
    lp_max_n: int = 16
    perfect_max_n: int = 16
    matching_backend: str = "blossom"
    exhaustive_matching_max_edges: int = 24
    witness_retries: int = 32

    @classmethod
    def from_env(cls) -> "Limits":
        """Собирает лимиты с учётом переменных окружения CISGRAPHS_*."""
        limits = cls()
        if "CISGRAPHS_FAMILY_CAP" in os.environ:
            limits = replace(limits, family_cap=int(os.environ["CISGRAPHS_FAMILY_CAP"]))
        if "CISGRAPHS_BACKTRACK_CAP" in os.environ:
            limits = replace(
                limits, search_backtrack_cap=int(os.environ["CISGRAPHS_BACKTRACK_CAP"])
            )
        backend = os.environ.get("CISGRAPHS_MATCHING_BACKEND")
        if backend:
            if backend not in ("blossom", "exhaustive"):
                raise ValueError(f"неизвестный backend паросочетаний: {backend}")
            limits = replace(limits, matching_backend=backend)
        return limits


DEFAULT_LIMITS = Limits.from_env()
