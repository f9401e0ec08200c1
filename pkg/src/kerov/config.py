from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    """Enumeration limits.

    ``max_map_k`` caps map enumeration (k! maps); ``max_kerov_k`` caps the
    linear solve for Kerov polynomials.  The hard caps reject values whose
    runtime is measured in hours rather than seconds.
    """

    max_map_k: int = 8
    max_kerov_k: int = 7

    HARD_MAX_MAP_K = 10
    HARD_MAX_KEROV_K = 10

    def __post_init__(self) -> None:
        if not 1 <= self.max_map_k <= self.HARD_MAX_MAP_K:
            raise ValueError(f"max_map_k must lie in 1..{self.HARD_MAX_MAP_K}")
        if not 1 <= self.max_kerov_k <= self.HARD_MAX_KEROV_K:
            raise ValueError(f"max_kerov_k must lie in 1..{self.HARD_MAX_KEROV_K}")


DEFAULT_BOUNDS = Bounds()
