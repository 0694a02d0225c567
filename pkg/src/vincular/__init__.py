"""Avoidance of vincular (dashed) patterns in k-ary words.

Counting and classification, explicit bijections between avoidance
classes, and generating functions over exact truncated series.
"""
from .words import (Pattern, PatternError, PatternParseError, all_patterns, complement,
                    format_pattern, format_word, parse_pattern, parse_word, reduce, reverse,
                    symmetry_orbit)
from .matcher import (Occurrence, RoleConstraint, contains, count_occurrences,
                      find_occurrences, find_role_occurrences)
from .enumeration import (GuardrailError, count_avoiders, count_avoiders_prefix,
                          first_letter_counts, transfer_counts, verify_equivalence,
                          wilf_classify)
from .bijections import DomainError, thm21_map, thm25_map, THM33_MAPS
from .powerseries import SeriesPoly, TruncSeries
from .genfun import GFResult, THEOREMS, verify_gf

__version__ = "0.1.0"
