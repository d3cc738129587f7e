"""Partition combinatorics and the triangular-sequence calculus."""
