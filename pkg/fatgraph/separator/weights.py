"""Clique weight functions and their registry."""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List

from fatgraph.domain.errors import InvalidInputError


@dataclass(frozen=True)
class WeightFunction:
    """A named nondecreasing weight gamma(t) for cliques or classes of size t."""
    name: str
    evaluate: Callable[[int], float]

    def __call__(self, t: int) -> float:
        if t < 0:
            raise InvalidInputError(f"Weight function argument must be non-negative, got {t}")
        return self.evaluate(t)

    def ceil(self, t: int) -> int:
        """Integer blowup size, at least 1."""
        return max(1, math.ceil(self(t) - 1e-12))

    def total(self, sizes) -> float:
        return sum(self(t) for t in sizes)


class WeightRegistry:
    """Registry of weight functions by name."""

    _functions: Dict[str, WeightFunction] = {
        "log": WeightFunction("log", lambda t: math.log2(t + 1)),
        "unit": WeightFunction("unit", lambda t: 1.0 if t > 0 else 0.0),
        "sqrt": WeightFunction("sqrt", lambda t: math.sqrt(t)),
    }

    @classmethod
    def get(cls, name: str) -> WeightFunction:
        """Get a weight function by name.

        Raises:
            InvalidInputError: If no function is registered under the name.
        """
        key = name.lower()
        if key not in cls._functions:
            available = ", ".join(cls._functions)
            raise InvalidInputError(f"Unknown weight function: {name}. Available: {available}")
        return cls._functions[key]

    @classmethod
    def register(cls, function: WeightFunction) -> None:
        if not isinstance(function, WeightFunction):
            raise TypeError(f"{function!r} must be a WeightFunction")
        cls._functions[function.name.lower()] = function

    @classmethod
    def list_functions(cls) -> List[str]:
        return list(cls._functions.keys())


def get_weight_function(name_or_function) -> WeightFunction:
    if isinstance(name_or_function, WeightFunction):
        return name_or_function
    return WeightRegistry.get(name_or_function or "log")
