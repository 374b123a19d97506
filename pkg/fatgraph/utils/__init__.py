"""Utility modules for file formats and CLI parsing."""

from fatgraph.utils.file_utils import (
    read_json,
    write_json,
    content_hash,
    format_rational,
)
from fatgraph.utils.cli_utils import (
    parse_int_list,
    parse_int_vector,
)

__all__ = [
    "read_json",
    "write_json",
    "content_hash",
    "format_rational",
    "parse_int_list",
    "parse_int_vector",
]
