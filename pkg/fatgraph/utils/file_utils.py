"""File operation utilities."""

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from fatgraph.domain.errors import InvalidInputError


def format_rational(value: Fraction):
    """Encode a rational as an int when integral, else as a "p/q" string."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def read_json(file_path: Path) -> Any:
    """Read a JSON document.

    Args:
        file_path: Path to file.

    Returns:
        Decoded JSON value.

    Raises:
        InvalidInputError: If the file is missing or is not valid JSON.
    """
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise InvalidInputError(f"File not found: {file_path}")
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Invalid JSON in {file_path}: {e}")


def write_json(file_path: Path, data: Any) -> None:
    """Write a JSON document, creating parent directories as needed."""
    file_path = Path(file_path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


def content_hash(data: Any) -> str:
    """Stable short hash of a JSON-serializable value (sorted keys)."""
    encoded = json.dumps(data, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(encoded.encode("utf-8")).hexdigest()[:16]
