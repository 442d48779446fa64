import itertools

import pytest

from adian.adian_analysis import (CrossOverlap, DecidableClass, MultipleRelationsError,
                                  OverlapKind, OverlapType, border_array, build_left_graph,
                                  build_right_graph, classify, cross_overlap, is_adian,
                                  self_overlap_form, share_proper_subword)
from adian.presentation import Presentation


def P(alphabet, *rels):
    return Presentation.build(alphabet, rels)


def brute_borders(t):
    return [k for k in range(1, len(t)) if t[:k] == t[-k:]]


def brute_is_power(t):
    return any(len(t) % k == 0 and t == t[:k] * (len(t) // k) for k in range(1, len(t)))


def words(alphabet, max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


class TestSideGraphs:
    def test_left_commutation(self):
        assert build_left_graph(P("ab", ("ab", "ba"))).edges == (("a", "b"),)

    def test_left_self_loop(self):
        assert build_left_graph(P("ab", ("ab", "abb"))).edges == (("a", "a"),)

    def test_left_aba_cc(self):
        assert build_left_graph(P("abc", ("aba", "cc"))).edges == (("a", "c"),)

    def test_right_commutation(self):
        assert build_right_graph(P("ab", ("ab", "ba"))).edges == (("a", "b"),)

    def test_right_aba_cc(self):
        assert build_right_graph(P("abc", ("aba", "cc"))).edges == (("a", "c"),)

    def test_right_self_loop(self):
        assert build_right_graph(P("ab", ("aab", "b"))).edges == (("b", "b"),)

    def test_one_edge_per_relation(self):
        p = P("abcd", ("ab", "cd"), ("ac", "db"), ("bb", "cc"))
        assert len(build_left_graph(p).edges) == 3
        assert len(build_right_graph(p).edges) == 3


class TestAdian:
    def test_commutation(self):
        assert is_adian(P("ab", ("ab", "ba")))

    def test_shared_first_letter(self):
        assert not is_adian(P("ab", ("ab", "abba")))

    def test_aba_cc(self):
        assert is_adian(P("abc", ("aba", "cc")))

    def test_parallel_edges_form_a_cycle(self):
        assert not is_adian(P("ab", ("ab", "ba"), ("aa", "bb")))

    def test_triangle(self):
        assert not is_adian(P("abc", ("ab", "ba"), ("bc", "cb"), ("ca", "ac")))

    def test_forest_of_two_relations(self):
        assert is_adian(P("abcd", ("ab", "cd"), ("ca", "db")))

    def test_shared_end_letters_never_adian(self):
        for u, v in itertools.product(words("ab", 3), repeat=2):
            if u != v and (u[0] == v[0] or u[-1] == v[-1]):
                assert not is_adian(P("ab", (u, v)))


class TestSelfOverlap:
    def test_power(self):
        f = self_overlap_form("abab")
        assert (f.kind, f.x, f.n) == (OverlapKind.POWER, "ab", 2)

    def test_xsx(self):
        f = self_overlap_form("aba")
        assert (f.kind, f.x, f.s) == (OverlapKind.XSX, "a", "b")

    def test_xsxsx(self):
        # brute force: borders of ababa are a and aba; the longest, aba, overlaps
        # itself inside the word (2*3 > 5)
        assert brute_borders("ababa") == [1, 3]
        f = self_overlap_form("ababa")
        assert (f.kind, f.x, f.s) == (OverlapKind.XSXSX, "a", "b")

    def test_none(self):
        assert self_overlap_form("aab").kind is OverlapKind.NONE

    def test_periodic_beyond_three_forms(self):
        # abababa = (ab)^3 a: its longest border ababa is not of the shape xsx
        # with x a border of ababa and t = xsxsx, so it falls outside the
        # three classical forms.
        f = self_overlap_form("abababa")
        assert (f.kind, f.x, f.s, f.n) == (OverlapKind.PERIODIC, "a", "b", 3)

    def test_border_array_matches_brute_force(self):
        for t in words("ab", 9):
            b = border_array(t)
            for i in range(len(t)):
                pre = t[:i + 1]
                assert b[i] == max(brute_borders(pre), default=0)

    def test_exhaustive_forms(self):
        for t in words("ab", 10):
            f = self_overlap_form(t)
            borders = brute_borders(t)
            assert (f.kind is not OverlapKind.NONE) == bool(borders), t
            if f.kind is OverlapKind.NONE:
                continue
            assert f.expand() == t
            longest = max(borders)
            if f.kind is OverlapKind.POWER:
                assert f.n >= 2 and not brute_is_power(f.x)
            else:
                assert not brute_is_power(t)
                assert f.x and f.s
            if f.kind is OverlapKind.XSX:
                assert len(f.x) == longest and 2 * len(f.x) < len(t)
            if f.kind is OverlapKind.XSXSX:
                assert len(f.x + f.s + f.x) == longest
            if f.kind is OverlapKind.PERIODIC:
                assert f.n >= 3 and len(t) - longest == len(f.x + f.s)


class TestCrossOverlap:
    def test_two_way(self):
        assert cross_overlap("ab", "ba") is CrossOverlap.TWO_WAY

    def test_none(self):
        assert cross_overlap("aba", "cc") is CrossOverlap.NONE

    def test_one_way(self):
        assert cross_overlap("ab", "bc") is CrossOverlap.ONE_WAY_UV
        assert cross_overlap("bc", "ab") is CrossOverlap.ONE_WAY_VU

    def test_matches_brute_force(self):
        for u, v in itertools.product(words("ab", 4), repeat=2):
            if u in v or v in u:
                continue
            uv = any(u[-k:] == v[:k] for k in range(1, len(u)))
            vu = any(v[-k:] == u[:k] for k in range(1, len(v)))
            expected = {(True, True): CrossOverlap.TWO_WAY, (True, False): CrossOverlap.ONE_WAY_UV,
                        (False, True): CrossOverlap.ONE_WAY_VU, (False, False): CrossOverlap.NONE}
            assert cross_overlap(u, v) is expected[uv, vu]


class TestClassify:
    def test_aba_cc_is_2a_class3(self):
        c = classify(P("abc", ("aba", "cc")))
        assert c.overlap_type is OverlapType.TYPE2A
        assert c.decidable_class is DecidableClass.CLASS3
        assert c.record() == "adian=true subword=none overlap_type=2a class=3"

    def test_aba_bbb_is_2b(self):
        c = classify(P("ab", ("aba", "bbb")))
        assert c.overlap_type is OverlapType.TYPE2B
        assert c.decidable_class is DecidableClass.CLASS3

    def test_disjoint_is_class1(self):
        c = classify(P("abcd", ("ab", "cd")))
        assert c.overlap_type is OverlapType.NO_OVERLAP
        assert c.decidable_class is DecidableClass.CLASS1

    def test_commutation_is_type4_unknown(self):
        c = classify(P("ab", ("ab", "ba")))
        assert c.overlap_type is OverlapType.TYPE4
        assert c.decidable_class is DecidableClass.UNKNOWN

    def test_type1_class2(self):
        c = classify(P("abcd", ("aba", "cd")))
        assert c.overlap_type is OverlapType.TYPE1
        assert c.decidable_class is DecidableClass.CLASS2

    def test_type3_class4(self):
        c = classify(P("abc", ("ab", "bc")))
        assert c.overlap_type is OverlapType.TYPE3
        assert c.decidable_class is DecidableClass.CLASS4

    def test_type3_with_self_overlap_unknown(self):
        c = classify(P("abcd", ("abcab", "cabd")))
        assert c.is_adian
        assert c.overlap_type is OverlapType.TYPE3
        assert c.decidable_class is DecidableClass.UNKNOWN

    def test_two_powers_unknown(self):
        c = classify(P("abcd", ("abab", "cdcd")))
        assert c.overlap_type is OverlapType.TYPE2A
        assert c.decidable_class is DecidableClass.UNKNOWN

    def test_subword(self):
        c = classify(P("abc", ("ab", "cab")))
        assert c.rhs_subword_of_lhs is False and c.lhs_subword_of_rhs is True
        assert c.overlap_type is None
        assert c.decidable_class is DecidableClass.UNKNOWN
        assert "subword=lhs-in-rhs" in c.record()

    def test_non_adian_is_unknown(self):
        c = classify(P("ab", ("ab", "abb")))
        assert not c.is_adian
        assert c.decidable_class is DecidableClass.UNKNOWN

    def test_multiple_relations(self):
        with pytest.raises(MultipleRelationsError):
            classify(P("abcd", ("ab", "cd"), ("ac", "bd")))
        with pytest.raises(MultipleRelationsError):
            classify(P("ab"))

    def test_share_proper_subword(self):
        assert share_proper_subword("aba", "bbb")
        assert not share_proper_subword("aba", "cc")

    def test_totality_exhaustive(self):
        seen = set()
        for u, v in itertools.product(words("ab", 4), repeat=2):
            if u == v or u in v or v in u:
                continue
            c = classify(P("ab", (u, v)))
            assert c.overlap_type in set(OverlapType)
            seen.add(c.overlap_type)
        assert seen >= {OverlapType.TYPE3, OverlapType.TYPE4}
