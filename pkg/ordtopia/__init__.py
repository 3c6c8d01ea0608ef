"""
ordtopia: order topologies and quasi-pseudo-metrics

Exhaustive and seeded verification of continuity for finite preorders,
quasi-pseudo-metric constructions, and welfare criteria on bounded
sequences, reported as deterministic JSON.
"""

__version__ = "1.0.0"
__description__ = "Verifier for order topologies, quasi-pseudo-metrics and sequence welfare criteria"
