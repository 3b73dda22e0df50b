"""Exact k-th binding numbers, k-factors and barrier certificates for small graphs."""
