"""Quantitative checks: Ackermann values, Busy Beaver search, frontier counts, co-simulation."""
