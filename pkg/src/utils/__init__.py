"""Utility functions."""
from .logger import setup_logger
from .helpers import safe_get, free_reduce, parse_index_list

__all__ = ["setup_logger", "safe_get", "free_reduce", "parse_index_list"]
