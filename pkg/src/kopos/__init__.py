"""Chinese part-of-speech decision using Korean translation information."""

from .core import (DEFAULT_INVENTORY, UNRESOLVED, ChiSentence, KorMorpheme, KorSentence,
                   ParseError, Provenance, TagClass, TagClassMap, TaggedChiSentence,
                   TaggedWord, classify_tag, parse_tag_class_map)
from .lexicon import Lexicon, LexiconEntry
from .pipeline import TaggerConfig, segment, tag_sentence

__version__ = "0.1.0"
