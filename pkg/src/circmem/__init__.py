"""Circulant feedback-network memory capacity analysis."""
