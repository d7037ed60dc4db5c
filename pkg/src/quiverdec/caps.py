"""Resource caps for the enumeration and search routines.

Every brute-force sweep in the package is bounded by a :class:`Caps`
instance so that a typo in a dimension vector fails fast instead of
grinding through an astronomical box.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import ResourceLimit

ENV_MAX_BOX = "QUIVERDEC_MAX_BOX"
ENV_MAX_SUM = "QUIVERDEC_MAX_SUM"
ENV_MAX_STATES = "QUIVERDEC_MAX_STATES"


@dataclass(frozen=True)
class Caps:
    """Limits for box enumerations and pair-orbit searches."""

    max_box_volume: int = 2_000_000
    max_bound_sum: int = 24
    max_states: int = 100_000

    @classmethod
    def from_env(cls, base: "Caps" | None = None) -> "Caps":
        """Return ``base`` with any environment overrides applied."""
        caps = base or cls()
        updates = {}
        for env, field in (
            (ENV_MAX_BOX, "max_box_volume"),
            (ENV_MAX_SUM, "max_bound_sum"),
            (ENV_MAX_STATES, "max_states"),
        ):
            raw = os.environ.get(env)
            if raw is not None:
                updates[field] = int(raw)
        return replace(caps, **updates) if updates else caps

    def check_box(self, bound) -> None:
        """Reject a componentwise enumeration box that exceeds the caps."""
        total = sum(bound)
        if total > self.max_bound_sum:
            raise ResourceLimit(
                f"bound sum {total} exceeds cap {self.max_bound_sum}"
            )
        volume = 1
        for b in bound:
            volume *= b + 1
        if volume > self.max_box_volume:
            raise ResourceLimit(
                f"box volume {volume} exceeds cap {self.max_box_volume}"
            )


DEFAULT_CAPS = Caps()
