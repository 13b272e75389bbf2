import random

import pytest

from kopos.core import UNRESOLVED, ChiSentence, Provenance
from kopos.corpus_io import read_bilingual_corpus, read_lexicon
from kopos.lexicon import Lexicon
from kopos.miner import mine
from kopos.nn_dict import NounPairDict
from kopos.pipeline import STAGES, TaggerConfig, segment, tag_sentence, tag_text
from kopos.stat_tagger import ProbModel

from conftest import FRIEND_PAIR
from desk import desk_config

SCIENCE = "精密的观察是科学研究的基础"
FRIEND = "我的朋友学习中国语"


def test_segment_examples(lex):
    assert list(segment(lex, FRIEND)) == ["我", "的", "朋友", "学习", "中国语"]
    assert list(segment(lex, "")) == []
    assert list(segment(lex, SCIENCE)) == "精密 的 观察 是 科学 研究 的 基础".split()


def test_segment_unmatched_characters(lex):
    assert list(segment(lex, "我嘎嘣学习")) == ["我", "嘎", "嘣", "学习"]
    assert list(segment(Lexicon(), "你好")) == ["你", "好"]


def test_segment_reproduces_input(lex):
    rng = random.Random(1)
    alphabet = "".join(sorted(set("".join(lex)))) + "嘎嘣"
    for _ in range(200):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        assert "".join(segment(lex, text)) == text


def test_science_sentence(tag_map):
    cfg = desk_config(tag_map)
    out = tag_text(cfg, SCIENCE, presegmented=False)
    assert out.words == tuple("精密 的 观察 是 科学 研究 的 基础".split())
    by_word = {it.word: it for it in out}
    assert (by_word["研究"].tag, by_word["研究"].provenance) == ("n", Provenance.NN_DICT)
    assert (by_word["观察"].tag, by_word["观察"].provenance) == ("n", Provenance.RULE)
    assert by_word["精密"].provenance is Provenance.SINGLE_POS


def test_friend_sentence_via_model(tag_map):
    out = tag_text(desk_config(tag_map), FRIEND, presegmented=False)
    assert (out[3].word, out[3].tag, out[3].provenance) == ("学习", "v", Provenance.STATISTICAL)


def test_friend_sentence_via_mined_rule(tag_map, lex):
    corpus = list(read_bilingual_corpus("\n".join([FRIEND_PAIR] * 3)))
    mined, _ = mine(corpus, lex, tag_map)
    cfg = desk_config(tag_map, rulesets=[mined])
    out = tag_text(cfg, FRIEND, presegmented=False)
    assert (out[3].tag, out[3].provenance) == ("v", Provenance.RULE)


def test_single_pos_sentence_needs_no_model(lex):
    cfg = TaggerConfig(lex, NounPairDict(), (), model=None, disabled={"statistical"})
    out = tag_sentence(cfg, ["我", "的", "朋友"])
    assert out.tags == ("r", "u", "n")
    assert {it.provenance for it in out} == {Provenance.SINGLE_POS}


def test_right_pair_also_hits(lex):
    cfg = TaggerConfig(lex, NounPairDict({("研究", "基础"): 1}), (), model=None,
                       disabled={"statistical"})
    out = tag_sentence(cfg, ["研究", "基础"])
    assert (out[0].tag, out[0].provenance) == ("n", Provenance.NN_DICT)


def test_nn_dict_needs_noun_sense(lex):
    cfg = TaggerConfig(lex, NounPairDict({("是", "基础"): 1}), (), model=None,
                       disabled={"statistical", "single-pos"})
    out = tag_sentence(cfg, ["是", "基础"])
    assert out[0].tag is UNRESOLVED


def test_unknown_words_get_fallback(tag_map):
    out = tag_sentence(desk_config(tag_map), ["我", "嘎嘣", "学习"])
    assert out[1].provenance is Provenance.UNKNOWN_FALLBACK
    assert out.is_complete()


def test_config_validation(lex):
    with pytest.raises(ValueError):
        TaggerConfig(lex, NounPairDict(), (), model=None)
    with pytest.raises(ValueError):
        TaggerConfig(lex, NounPairDict(), (), model=ProbModel({"n": 1}), disabled={"bogus"})


SENTENCES = ["精密 的 观察 是 科学 研究 的 基础", "我 的 朋友 学习 中国语", "所 研究 的 问题",
             "研究 、 基础", "学习 了", "我 嘎嘣 学习 是 研究", "控制 技术 建设", "热 传导"]


@pytest.mark.parametrize("text", SENTENCES)
def test_stage_precedence_and_totality(tag_map, text):
    cfg = desk_config(tag_map)
    full = tag_sentence(cfg, text.split())
    assert full.words == tuple(text.split())
    assert full.is_complete()
    for it in full:
        if it.provenance is Provenance.NN_DICT:
            assert it.tag == "n" and cfg.lexicon.has_noun(it.word)
    order = [Provenance.SINGLE_POS, Provenance.NN_DICT, Provenance.RULE]
    for k, stage in enumerate(STAGES[1:], 1):
        cut = tag_sentence(desk_config(tag_map, disabled={stage}), text.split())
        for a, b in zip(full, cut):
            if a.provenance in order[:k]:
                assert a == b
