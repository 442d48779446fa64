"""Word problem tools for Adian inverse semigroups.

Stephen's procedure on birooted inverse word graphs, the subgraphs of a
Schützenberger graph generated by single R-word occurrences, and the
overlap classification of one-relation positive presentations.
"""

from .adian_analysis import (Classification, DecidableClass, OverlapType, build_left_graph,
                             build_right_graph, classify, cross_overlap, is_adian,
                             self_overlap_form)
from .oracles import munn_equal, positive_equal_bfs, rewrite_neighbors
from .presentation import (Presentation, PresentationError, Relation, Word, invert_word,
                           parse_presentation, parse_word)
from .rword_subgraph import (all_deltas_finite, delta, occurrences, special_regions,
                             special_vertices)
from .stephen import (Budget, BudgetExceeded, DecisionOutcome, Verdict, decide_equal,
                      elementary_expansion, find_unsaturated, full_expansion, is_idempotent,
                      membership, schutzenberger)
from .word_graph import (BirootedGraph, fold_to_deterministic, iso_birooted, linear_graph,
                         read_word, sew_segment, to_dot)

__version__ = "0.1.0"
