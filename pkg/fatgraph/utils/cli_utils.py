"""CLI helper functions."""

from pathlib import Path
from typing import List, Optional, Tuple

from fatgraph.domain.errors import InvalidInputError


def parse_int_list(text: Optional[str]) -> List[int]:
    """Parse "0,3,7" (or a path to a file holding such a list) into integers.

    Args:
        text: Comma or whitespace separated integers, or a file path.

    Returns:
        List of integers in the given order, or [] for None.

    Raises:
        InvalidInputError: If an entry is not an integer.
    """
    if not text:
        return []
    path = Path(text)
    if path.exists() and path.is_file():
        text = path.read_text(encoding="utf-8")
    tokens = [t for t in text.replace(",", " ").split() if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InvalidInputError(f"Expected a list of integers, got {text!r}")


def parse_int_vector(text: str, positive: bool = True) -> Tuple[int, ...]:
    """Parse a vector such as "8,8" into a tuple of integers.

    Raises:
        InvalidInputError: If the vector is empty or has non-positive entries.
    """
    values = parse_int_list(text)
    if not values:
        raise InvalidInputError(f"Expected a nonempty vector, got {text!r}")
    if positive and any(v <= 0 for v in values):
        raise InvalidInputError(f"Vector entries must be positive, got {text!r}")
    return tuple(values)
