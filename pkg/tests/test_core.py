import pytest
from hypothesis import given, strategies as st

from kopos.core import (UNRESOLVED, ChiSentence, DuplicateEntryError, KorMorpheme, KorSentence,
                        ParseError, Provenance, TagClass, TagClassMap, TaggedChiSentence,
                        TaggedWord, check_tag, classify_tag, parse_tag_class_map)

NN_PV = TagClassMap((("NN", "noun"), ("PV", "verb")))


@pytest.mark.parametrize("tag, expected", [
    ("NNGC", TagClass.NOUN),
    ("TCP", TagClass.OTHER),
    ("PVG", TagClass.VERB),
])
def test_classify_tag_examples(tag, expected):
    assert classify_tag(tag, NN_PV) is expected


def test_longest_prefix_wins():
    m = TagClassMap((("N", "verb"), ("NN", "noun")))
    assert m.classify("NNGC") is TagClass.NOUN
    assert m.classify("NP") is TagClass.VERB


def test_equal_length_prefers_earlier_entry():
    # identical prefixes are rejected, so equal length only happens for
    # different prefixes that cannot both match one tag
    m = TagClassMap((("NA", "noun"), ("NB", "verb")))
    assert m.classify("NAX") is TagClass.NOUN
    assert m.classify("NBX") is TagClass.VERB


def test_parse_tag_class_map():
    m = parse_tag_class_map("NN\tnoun\nPV\tverb")
    assert m.entries == (("NN", TagClass.NOUN), ("PV", TagClass.VERB))
    assert len(parse_tag_class_map("")) == 0
    assert parse_tag_class_map("").classify("NNG") is TagClass.OTHER
    assert len(parse_tag_class_map("# comment\n\nNN\tnoun\n")) == 1


def test_parse_tag_class_map_errors():
    with pytest.raises(DuplicateEntryError) as exc:
        parse_tag_class_map("NN\tnoun\nNN\tverb")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_tag_class_map("NN\tnoun\nPV verb")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_tag_class_map("NN\tadjective")


@given(st.text(alphabet="NPVTGC", min_size=1, max_size=6),
       st.lists(st.tuples(st.text(alphabet="NPVTGC", min_size=1, max_size=3),
                          st.sampled_from(["noun", "verb", "other"])),
                max_size=6, unique_by=lambda e: e[0]))
def test_classify_is_total_and_longest(tag, entries):
    m = TagClassMap(tuple(entries))
    cls = m.classify(tag)
    assert cls in set(TagClass)
    assert m.classify(tag) is cls
    matching = [(p, c) for p, c in entries if tag.startswith(p)]
    if not matching:
        assert cls is TagClass.OTHER
    else:
        longest = max(len(p) for p, _ in matching)
        assert cls is TagClass(next(c for p, c in matching if len(p) == longest))


@pytest.mark.parametrize("bad", ["", "N N", "a/b", "N+V", "\t"])
def test_check_tag_rejects(bad):
    with pytest.raises(ValueError):
        check_tag(bad)


def test_sentence_types():
    s = ChiSentence(["我", "学习"])
    assert len(s) == 2 and s[1] == "学习" and list(s) == ["我", "学习"]
    with pytest.raises(ValueError):
        ChiSentence(["我 们"])
    with pytest.raises(ValueError):
        KorMorpheme("", "N")
    ko = KorSentence(((KorMorpheme("과학", "NNG"), KorMorpheme("연구", "NNG")),
                      (KorMorpheme("기초", "NNG"),)))
    assert [m.surface for m in ko.morphemes] == ["과학", "연구", "기초"]
    assert str(ko) == "과학/NNG++연구/NNG 기초/NNG"
    with pytest.raises(ValueError):
        KorSentence(((),))


def test_tagged_word_provenance_invariant():
    assert not TaggedWord("学习").resolved
    assert TaggedWord("学习").tag is UNRESOLVED
    with pytest.raises(ValueError):
        TaggedWord("学习", "v")
    with pytest.raises(ValueError):
        TaggedWord("学习", UNRESOLVED, Provenance.RULE)
    t = TaggedChiSentence.unresolved(["我", "学习"]).with_tag(1, "v", Provenance.RULE)
    assert t.words == ("我", "学习")
    assert t.tags == (UNRESOLVED, "v")
    assert t[1].provenance is Provenance.RULE
