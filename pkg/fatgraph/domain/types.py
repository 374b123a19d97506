"""Domain types for fatgraph."""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Tuple

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.geometry.objects import ObjectSet

PROBLEMS = ("is", "vc", "ds", "rds", "steiner", "mif", "fvs", "cvc", "is-separator")
MINIMIZE = frozenset({"vc", "ds", "rds", "steiner", "fvs", "cvc"})
CONNECTIVITY = frozenset({"steiner", "cvc"})
SHAPE_MIXES = ("ball", "box", "mixed")


@dataclass
class ProblemInstance:
    """A graph problem with its parameters."""
    graph: IntersectionGraph
    problem: str
    r: int = 1
    terminals: Tuple[int, ...] = ()
    budget: Optional[int] = None
    objects: Optional[ObjectSet] = None

    def __post_init__(self):
        self.problem = self.problem.lower()
        if self.problem not in PROBLEMS:
            raise InvalidInputError(
                f"Unknown problem: {self.problem}. Available: {', '.join(PROBLEMS)}"
            )
        if self.problem == "ds":
            self.r = 1
        if self.r < 1:
            raise InvalidInputError(f"Domination radius must be at least 1, got {self.r}")
        self.terminals = tuple(sorted(set(self.terminals)))
        outside = [t for t in self.terminals if not 0 <= t < self.graph.n]
        if outside:
            raise InvalidInputError(f"Terminals {outside} are not vertices of the graph")
        if self.budget is not None and self.budget < 0:
            raise InvalidInputError(f"Budget must be non-negative, got {self.budget}")
        if self.objects is not None and len(self.objects) != self.graph.n:
            raise InvalidInputError(
                f"{len(self.objects)} objects given for a graph on {self.graph.n} vertices"
            )

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def minimize(self) -> bool:
        return self.problem in MINIMIZE


@dataclass
class SolveResult:
    """Optimum, witness and run statistics. optimum is None when infeasible."""
    problem: str
    optimum: Optional[int]
    witness: FrozenSet[int] = frozenset()
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.optimum is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.problem,
            "feasible": self.feasible,
            "optimum": self.optimum,
            "witness": sorted(self.witness),
            "stats": self.stats,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SolveResult":
        try:
            return cls(
                problem=str(data["problem"]),
                optimum=None if data.get("optimum") is None else int(data["optimum"]),
                witness=frozenset(int(v) for v in data.get("witness", [])),
                stats=dict(data.get("stats", {})),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"Malformed result document: {e}")


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of the seeded random instance generator."""
    dimension: int
    n: int
    shape_mix: str = "ball"
    size_ratio: float = 1.0
    region_side: Optional[float] = None
    seed: int = 0
    denominator_bits: int = 16

    def __post_init__(self):
        if self.dimension < 2:
            raise InvalidInputError(f"Dimension must be at least 2, got {self.dimension}")
        if self.n < 0:
            raise InvalidInputError(f"Object count must be non-negative, got {self.n}")
        if self.size_ratio < 1:
            raise InvalidInputError(f"Size ratio must be at least 1, got {self.size_ratio}")
        if self.shape_mix not in SHAPE_MIXES:
            raise InvalidInputError(
                f"Unknown shape mix: {self.shape_mix}. Available: {', '.join(SHAPE_MIXES)}"
            )
        if self.region_side is not None and self.region_side <= 0:
            raise InvalidInputError(f"Region side must be positive, got {self.region_side}")


@dataclass
class RunRecord:
    """One benchmark row."""
    suite: str
    command: str
    dimension: int
    n: int
    seed: int
    config_hash: str
    instance_hash: str
    result: Any = None
    seconds: float = 0.0
    metrics: Dict[str, Any] = field(default_factory=dict)

    def to_row(self) -> Dict[str, Any]:
        row = {
            "suite": self.suite,
            "command": self.command,
            "d": self.dimension,
            "n": self.n,
            "seed": self.seed,
            "config_hash": self.config_hash,
            "instance_hash": self.instance_hash,
            "result": self.result,
            "seconds": round(self.seconds, 6),
        }
        row.update(self.metrics)
        return row
