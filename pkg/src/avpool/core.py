"""Grid geometry, cost rates, and scenario configuration shared by all modules."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import NamedTuple


class GridCoord(NamedTuple):
    """One block of the rectangular city grid, 0-based."""

    x: int
    y: int


def manhattan_distance(a: GridCoord, b: GridCoord) -> int:
    """Rectilinear block distance between two grid coordinates."""
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def travel_time(a: GridCoord, b: GridCoord, speed: int = 1) -> int:
    """Time units to drive from `a` to `b` at `speed` blocks per time unit.

    Rounds up, so a partial final block still costs a full time unit.
    At speed 1 travel time equals block distance.
    """
    if speed < 1:
        raise ValueError(f"speed must be >= 1, got {speed}")
    return -(-manhattan_distance(a, b) // speed)


@dataclass(frozen=True)
class CostParams:
    """Cost rates in exact integer currency units (smallest denomination)."""

    lost_sale_per_unit: int = 50
    travel_per_block: int = 1
    facility_open_per_time_unit: int = 0

    def __post_init__(self) -> None:
        for name in ("lost_sale_per_unit", "travel_per_block", "facility_open_per_time_unit"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class ScenarioConfig:
    """Full description of one simulated city and its demand regime.

    Defaults are the real-case benchmark parameters: a 7x7 grid, 49
    vehicles, 100 customers per 600-unit day generated by per-block
    Bernoulli(0.05) presence draws, patience radius 3, travel $1/block,
    lost sale $50, free facilities.
    """

    grid_width: int = 7
    grid_height: int = 7
    fleet_size: int = 49
    customers_per_day: int = 100
    time_units_per_day: int = 600
    demand_probability: float = 0.05
    patience_radius: int = 3
    vehicle_speed: int = 1
    costs: CostParams = field(default_factory=CostParams)
    facility_capacity: int = 49

    def __post_init__(self) -> None:
        if self.grid_width < 1 or self.grid_height < 1:
            raise ValueError("grid must contain at least one block")
        if self.fleet_size < 0:
            raise ValueError("fleet_size must be >= 0")
        if self.customers_per_day < 0:
            raise ValueError("customers_per_day must be >= 0")
        if self.time_units_per_day < 1:
            raise ValueError("time_units_per_day must be >= 1")
        if not 0.0 <= self.demand_probability <= 1.0:
            raise ValueError("demand_probability must lie in [0, 1]")
        if self.patience_radius < 0:
            raise ValueError("patience_radius must be >= 0")
        if self.vehicle_speed < 1:
            raise ValueError("vehicle_speed must be >= 1")
        if self.facility_capacity < 1:
            raise ValueError("facility_capacity must be >= 1")

    @property
    def num_blocks(self) -> int:
        return self.grid_width * self.grid_height

    def blocks_row_major(self) -> list[GridCoord]:
        """All grid blocks ordered by row (y) then column (x)."""
        return [
            GridCoord(x, y)
            for y in range(self.grid_height)
            for x in range(self.grid_width)
        ]

    def block_index(self, coord: GridCoord) -> int:
        """Row-major index of a block; inverse of blocks_row_major ordering."""
        if not self.contains(coord):
            raise ValueError(f"{coord} is outside the {self.grid_width}x{self.grid_height} grid")
        return coord.y * self.grid_width + coord.x

    def contains(self, coord: GridCoord) -> bool:
        return 0 <= coord.x < self.grid_width and 0 <= coord.y < self.grid_height

    def grid_diameter(self) -> int:
        """Largest block distance realizable on this grid."""
        return (self.grid_width - 1) + (self.grid_height - 1)

    def to_json_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json_dict(cls, data: dict) -> "ScenarioConfig":
        """Build a config from a parsed JSON object.

        Field names must match the dataclass exactly (snake_case); any
        unknown key is rejected. Missing fields keep their defaults.
        """
        if not isinstance(data, dict):
            raise ValueError("scenario config JSON must be an object")
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown scenario config fields: {sorted(unknown)}")
        kwargs = dict(data)
        if "costs" in kwargs:
            costs = kwargs["costs"]
            if not isinstance(costs, dict):
                raise ValueError("costs must be an object")
            cost_known = set(CostParams.__dataclass_fields__)
            cost_unknown = set(costs) - cost_known
            if cost_unknown:
                raise ValueError(f"unknown cost fields: {sorted(cost_unknown)}")
            kwargs["costs"] = CostParams(**costs)
        return cls(**kwargs)

    @classmethod
    def from_json_file(cls, path: str | Path) -> "ScenarioConfig":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_json_dict(json.load(handle))


def midpoint_block(config: ScenarioConfig) -> GridCoord:
    """Central block of the grid (lower coordinate on even dimensions)."""
    return GridCoord((config.grid_width - 1) // 2, (config.grid_height - 1) // 2)


# Cost rates of the benchmark with priced facilities (the randomized test
# family uses $5/$10/$15 per facility per time unit; $5 is the low point).
RANDOM_CASE_COSTS = CostParams(
    lost_sale_per_unit=5,
    travel_per_block=5,
    facility_open_per_time_unit=5,
)

# Real-case cost rates: free facilities, cheap travel, expensive lost sales.
REAL_CASE_COSTS = CostParams(
    lost_sale_per_unit=50,
    travel_per_block=1,
    facility_open_per_time_unit=0,
)


def ceil_div(numerator: int, denominator: int) -> int:
    """Exact integer ceiling division for non-negative operands."""
    if denominator < 1:
        raise ValueError("denominator must be >= 1")
    return -(-numerator // denominator)


__all__ = [
    "GridCoord",
    "CostParams",
    "ScenarioConfig",
    "manhattan_distance",
    "travel_time",
    "midpoint_block",
    "ceil_div",
    "RANDOM_CASE_COSTS",
    "REAL_CASE_COSTS",
]
