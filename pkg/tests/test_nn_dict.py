from collections import Counter

import pytest
from hypothesis import given, strategies as st

from kopos.core import TagClass, TagClassMap
from kopos.corpus_io import read_korean_corpus
from kopos.lexicon import Lexicon
from kopos.nn_dict import (KorNounPairs, compile_pair_dict, extract_korean_pairs, pair_hit,
                           read_pairs, write_pairs)

from conftest import ECONOMY_KOREAN, SCIENCE_KOREAN
from strategies import korean_sentences, pair_dicts

COARSE = TagClassMap((("N", "noun"), ("V", "verb")))


def brute_force_noun_positions(corpus, tag_map, cross_eojeol):
    """Independent recount: walk every morpheme index and look one step right."""
    total = Counter()
    for sent in corpus:
        flat = []
        for e_index, eojeol in enumerate(sent.eojeols):
            for m in eojeol:
                flat.append((e_index, m))
        for i in range(len(flat) - 1):
            (e1, a), (e2, b) = flat[i], flat[i + 1]
            if not cross_eojeol and e1 != e2:
                continue
            nouns = [tag_map.classify(m.tag) is TagClass.NOUN
                     and any(ch.isalnum() for ch in m.surface) for m in (a, b)]
            if all(nouns):
                total[a.surface, b.surface] += 1
    return total


def test_economy_snippet(tag_map):
    corpus = list(read_korean_corpus(ECONOMY_KOREAN, lenient=True))
    pairs = extract_korean_pairs(corpus, tag_map)
    assert pairs.counts == {("상품", "생산"): 2, ("경제", "범주"): 1, ("가치", "문제"): 1}


def test_empty_corpus(tag_map):
    assert len(extract_korean_pairs([], tag_map)) == 0


def test_cross_eojeol_flag():
    corpus = list(read_korean_corpus("가/N 나/N 가/N 나/N"))
    assert extract_korean_pairs(corpus, COARSE).counts == {}
    assert extract_korean_pairs(corpus, COARSE, cross_eojeol=True).counts == {
        ("가", "나"): 2, ("나", "가"): 1}


def test_science_compound(tag_map, lex):
    pairs = extract_korean_pairs(read_korean_corpus(SCIENCE_KOREAN), tag_map)
    assert pairs.counts == {("과학", "연구"): 1}
    d = compile_pair_dict(pairs, lex)
    assert pair_hit(d, "科学", "研究") == 1
    assert pair_hit(d, "研究", "科学") == 0


@pytest.mark.parametrize("korean, lexicon, expected", [
    ({("조종", "기술"): 1}, {"控制": {"n": ["조종"]}, "技术": {"n": ["기술"]}},
     {("控制", "技术"): 1}),
    ({("과학", "연구"): 1}, {"科学": {"n": ["과학"]}, "研究": {"n": ["연구"]}},
     {("科学", "研究"): 1}),
    ({("조종", "기술"): 1}, {}, {}),
    # verb senses do not license a noun pair
    ({("조종", "기술"): 1}, {"控制": {"v": ["조종"]}, "技术": {"n": ["기술"]}}, {}),
])
def test_compile(korean, lexicon, expected):
    d = compile_pair_dict(KorNounPairs(korean), Lexicon.from_dict(lexicon))
    assert d.counts == expected


def test_compile_fans_out_and_thresholds():
    lex = Lexicon.from_dict({"热": {"n": ["열"]}, "十": {"n": ["열"]}, "传导": {"n": ["전도"]}})
    d = compile_pair_dict(KorNounPairs({("열", "전도"): 2}), lex)
    assert d.counts == {("热", "传导"): 2, ("十", "传导"): 2}
    assert len(compile_pair_dict(KorNounPairs({("열", "전도"): 2}), lex, min_count=3)) == 0


@given(st.lists(korean_sentences(), max_size=6), st.booleans())
def test_pair_count_conservation(corpus, cross):
    tag_map = TagClassMap((("N", "noun"), ("P", "verb")))
    pairs = extract_korean_pairs(corpus, tag_map, cross)
    assert pairs.counts == brute_force_noun_positions(corpus, tag_map, cross)


@given(st.lists(korean_sentences(), max_size=4), st.lists(korean_sentences(), max_size=4))
def test_compile_is_monotone(a, b):
    tag_map = TagClassMap((("N", "noun"),))
    lex = Lexicon.from_dict({"甲": {"n": ["가"]}, "乙": {"n": ["나", "가"]}, "丙": {"v": ["다"]}})
    small = compile_pair_dict(extract_korean_pairs(a, tag_map), lex)
    big = compile_pair_dict(extract_korean_pairs(a + b, tag_map), lex)
    for key, n in small.items():
        assert big.hit(*key) >= n
    for (z1, z2) in big:
        assert lex.has_noun(z1) and lex.has_noun(z2)


@given(pair_dicts())
def test_pairs_round_trip(d):
    text = write_pairs(d)
    assert read_pairs(text) == d
    assert write_pairs(read_pairs(text)) == text


def test_pairs_file_sorted_and_validated():
    assert write_pairs(KorNounPairs({("b", "a"): 1, ("a", "c"): 2})) == "a\tc\t2\nb\ta\t1\n"
    with pytest.raises(ValueError):
        read_pairs("a\tb\t0\n")
    with pytest.raises(ValueError):
        read_pairs("a\tb\n")
