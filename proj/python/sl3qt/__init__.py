"""Exact SL3 quantum trace values and balanced quantum mutations."""

from ._sl3qt import InputError, consistency, flip_check, mutate, step1_table, trace, verify_all

__all__ = ["InputError", "consistency", "flip_check", "mutate", "step1_table", "trace", "verify_all"]
