from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class AnalysisConfig:
    precision_bits: int = 256
    # None means 8 * |G|
    max_conductor: Optional[int] = None
    height_bound: int = 10**12
    det_cap: int = 6

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if self.max_conductor is not None and self.max_conductor < 2:
            raise ValueError("max_conductor must be >= 2")
