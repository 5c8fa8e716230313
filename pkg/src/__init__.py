"""Idempotent semiring permanents - exact permanents, adjoints and identity checks over additively idempotent semirings."""

__version__ = "1.0.0"
