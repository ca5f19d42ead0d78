"""Rank-metric codes, GPT public-key encryption, and its cryptanalysis.

Modules:
  fields     arithmetic in F_q and F_{q^m}
  linalg     matrices over F_{q^m} and F_q, subspace operations
  qpoly      the skew ring of linearized polynomials
  codes      Gabidulin / twisted Gabidulin codes, q-sums, duals, closures
  decoder    sequence-free rank decoder and the brute-force oracle
  gpt        the GPT encryption scheme
  attack     distinguisher, column-scrambler recovery, stabilizer attack
  cli        the `rankcrypt` command line tool
  rng        pinned deterministic randomness
  serialize  JSON schemas for every artifact
"""

from .fields import field, FieldCtx

__all__ = ["field", "FieldCtx"]
__version__ = "0.1.0"
