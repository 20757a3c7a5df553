"""Exception types shared across the package.

Two failure modes are distinguished because the command line maps them to
different exit codes: bad arguments (exit 2) and oversized oracle requests
(exit 3).
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside an operation's documented domain."""


class SizeLimitError(RuntimeError):
    """A brute-force request exceeds the configured search-space cap."""
