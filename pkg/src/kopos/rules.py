"""POS-decision rules.

A rule file holds one or more rulesets::

    <ruleset name="posdecpos" kind="vn">
      <rule cond="word(所)+any" main="1">
        setpos(1,v)
      </rule>
    </ruleset>

``cond`` is a ``+``-joined list of atoms: ``any`` (the ambiguous slot),
``word(X)`` (literal surface) and ``spos(T)`` (a single-POS word of tag T).
``cf`` and ``support`` are optional extension attributes carrying the
certainty factor and the number of agreeing training contexts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import DEFAULT_INVENTORY, ParseError, Provenance, check_tag

ANY = "any"
WORD = "word"
SPOS = "spos"

EXACT = "exact"
SUPERSET = "superset"

_BAD_LITERAL = re.compile(r'[\s()+"<>&]')


class RuleParseError(ParseError):
    pass


@dataclass(frozen=True)
class CondAtom:
    kind: str
    value: str | None = None

    def __post_init__(self):
        if self.kind == ANY:
            if self.value is not None:
                raise ValueError("any() takes no argument")
        elif self.kind == WORD:
            if not self.value or _BAD_LITERAL.search(self.value):
                raise ValueError(f"invalid word literal {self.value!r}")
        elif self.kind == SPOS:
            check_tag(self.value)
        else:
            raise ValueError(f"unknown atom {self.kind!r}")

    def __str__(self):
        return ANY if self.kind == ANY else f"{self.kind}({self.value})"


def any_atom():
    return CondAtom(ANY)


def word_atom(literal):
    return CondAtom(WORD, literal)


def spos_atom(tag):
    return CondAtom(SPOS, tag)


@dataclass(frozen=True)
class Rule:
    atoms: tuple
    tag: str
    main: int = 0
    cf: float = 1.0
    support: int = 0

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        check_tag(self.tag)
        if not atoms:
            raise ValueError("rule without condition atoms")
        if not 0 <= self.main < len(atoms):
            raise ValueError(f"main={self.main} outside the {len(atoms)}-atom pattern")
        if atoms[self.main].kind != ANY:
            raise ValueError(f"main atom {atoms[self.main]} is not 'any'")
        if not 0.0 <= self.cf <= 1.0:
            raise ValueError(f"cf={self.cf} outside [0, 1]")
        if self.support < 0:
            raise ValueError(f"negative support {self.support}")

    @property
    def cond(self) -> str:
        return "+".join(str(a) for a in self.atoms)

    @property
    def action_index(self) -> int:
        return self.main


@dataclass(frozen=True)
class RuleSet:
    name: str
    kind: str
    rules: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        tags = self.kind_tags
        if len(tags) < 2 or len(tags) != len(self.kind):
            raise ValueError(f"kind {self.kind!r} must name >= 2 distinct tags")
        for r in self.rules:
            if r.tag not in tags:
                raise ValueError(f"rule {r.cond} sets {r.tag!r}, outside kind {self.kind!r}")

    @property
    def kind_tags(self) -> frozenset:
        return frozenset(self.kind)

    def ordered_rules(self):
        """Rules in application order: cf desc, support desc, then document order."""
        order = sorted(range(len(self.rules)),
                       key=lambda i: (-self.rules[i].cf, -self.rules[i].support, i))
        return [self.rules[i] for i in order]


# -- parsing -----------------------------------------------------------------

_TAG = re.compile(r"<(/?)(ruleset|rule)\b([^>]*)>")
_ATTR = re.compile(r'(\w+)\s*=\s*"([^"]*)"')
_ATOM = re.compile(r"(any)|(word|spos)\(([^()]*)\)")
_SETPOS = re.compile(r"setpos\s*\(\s*(\d+)\s*,\s*([^\s,()]+)\s*\)")


def _attrs(text, where):
    attrs = {}
    pos = 0
    for m in _ATTR.finditer(text):
        if text[pos:m.start()].strip():
            raise RuleParseError(f"{where}: malformed attributes {text.strip()!r}")
        attrs[m.group(1)] = m.group(2)
        pos = m.end()
    if text[pos:].strip():
        raise RuleParseError(f"{where}: malformed attributes {text.strip()!r}")
    return attrs


def parse_cond(cond: str, inventory=DEFAULT_INVENTORY) -> tuple:
    atoms = []
    for part in cond.split("+"):
        part = part.strip()
        m = _ATOM.fullmatch(part)
        if not m:
            raise ValueError(f"unknown atom {part!r}")
        if m.group(1):
            atoms.append(any_atom())
        elif m.group(2) == WORD:
            atoms.append(word_atom(m.group(3)))
        else:
            if m.group(3) not in inventory:
                raise ValueError(f"spos tag {m.group(3)!r} not in the Chinese inventory")
            atoms.append(spos_atom(m.group(3)))
    return tuple(atoms)


def _build_rule(attrs, body, ordinal, inventory):
    where = f"rule {ordinal}"
    try:
        if "cond" not in attrs:
            raise ValueError("missing cond attribute")
        unknown = set(attrs) - {"cond", "main", "cf", "support"}
        if unknown:
            raise ValueError(f"unknown attribute(s) {sorted(unknown)}")
        atoms = parse_cond(attrs["cond"], inventory)
        main = int(attrs.get("main", 0))
        cf = float(attrs.get("cf", 1.0))
        support = int(attrs.get("support", 0))
        m = _SETPOS.fullmatch(body.strip())
        if not m:
            raise ValueError(f"expected a single setpos(K,POS) action, got {body.strip()!r}")
        index, tag = int(m.group(1)), m.group(2)
        if not 0 <= index < len(atoms):
            raise ValueError(f"setpos index {index} out of range")
        if index != main:
            raise ValueError(f"setpos index {index} differs from main={main}")
        return Rule(atoms, tag, main=main, cf=cf, support=support)
    except ValueError as exc:
        raise RuleParseError(f"{where}: {exc}") from None


def parse_rulesets(text: str, inventory=DEFAULT_INVENTORY) -> list:
    """Parse every ruleset in ``text``. A final unclosed ruleset is accepted."""
    result = []
    current = None  # [attrs, rules]
    rule = None     # [attrs, body]
    ordinal = 0
    pos = 0

    def close_ruleset():
        attrs, rules = current
        try:
            return RuleSet(attrs.get("name", ""), attrs["kind"], tuple(rules))
        except KeyError:
            raise RuleParseError("ruleset without kind attribute") from None
        except ValueError as exc:
            raise RuleParseError(str(exc)) from None

    def between(chunk):
        if rule is not None:
            rule[1] += chunk
        elif chunk.strip():
            raise RuleParseError(f"unexpected text {chunk.strip()[:40]!r}")

    for m in _TAG.finditer(text):
        between(text[pos:m.start()])
        pos = m.end()
        closing, name, rest = m.group(1), m.group(2), m.group(3)
        if name == "ruleset":
            if rule is not None:
                raise RuleParseError(f"rule {ordinal}: unterminated <rule>")
            if closing:
                if current is None:
                    raise RuleParseError("</ruleset> without <ruleset>")
                result.append(close_ruleset())
                current = None
            else:
                if current is not None:
                    result.append(close_ruleset())
                current = [_attrs(rest, "ruleset"), []]
        else:
            if current is None:
                raise RuleParseError("<rule> outside a ruleset")
            if closing:
                if rule is None:
                    raise RuleParseError("</rule> without <rule>")
                parsed = _build_rule(rule[0], rule[1], ordinal, inventory)
                if parsed.tag not in frozenset(current[0].get("kind", "")):
                    raise RuleParseError(
                        f"rule {ordinal}: action tag {parsed.tag!r} not in kind "
                        f"{current[0].get('kind')!r}")
                current[1].append(parsed)
                rule = None
            else:
                if rule is not None:
                    raise RuleParseError(f"rule {ordinal}: unterminated <rule>")
                ordinal += 1
                rule = [_attrs(rest, f"rule {ordinal}"), ""]
    if rule is not None:
        raise RuleParseError(f"rule {ordinal}: unterminated <rule>")
    between(text[pos:])
    if current is not None:
        result.append(close_ruleset())
    return result


def parse_ruleset(text: str, inventory=DEFAULT_INVENTORY) -> RuleSet:
    sets = parse_rulesets(text, inventory)
    if len(sets) != 1:
        raise RuleParseError(f"expected exactly one ruleset, found {len(sets)}")
    return sets[0]


def _format_float(x):
    return repr(float(x))


def serialize_rule(rule: Rule) -> str:
    attrs = [f'cond="{rule.cond}"']
    if rule.main:
        attrs.append(f'main="{rule.main}"')
    if rule.cf != 1.0:
        attrs.append(f'cf="{_format_float(rule.cf)}"')
    if rule.support:
        attrs.append(f'support="{rule.support}"')
    return (f"  <rule {' '.join(attrs)}>\n"
            f"    setpos({rule.main},{rule.tag})\n"
            f"  </rule>\n")


def serialize_ruleset(rs: RuleSet) -> str:
    """Canonical form. Attributes equal to their defaults are omitted, so
    hand-written rules print as written."""
    head = f'<ruleset name="{rs.name}" kind="{rs.kind}">'
    if not rs.rules:
        return head + "</ruleset>\n"
    return head + "\n" + "".join(serialize_rule(r) for r in rs.rules) + "</ruleset>\n"


def serialize_rulesets(rulesets) -> str:
    return "".join(serialize_ruleset(rs) for rs in rulesets)


# -- matching ----------------------------------------------------------------

def atom_matches(atom: CondAtom, word: str, lex) -> bool:
    if atom.kind == ANY:
        return True
    if atom.kind == WORD:
        return word == atom.value
    return lex.is_single_pos(word, atom.value)


def match_at(rule: Rule, sent, lex, i: int) -> bool:
    """Does ``rule`` match with its main atom on word ``i``? Patterns that
    would reach past either end of the sentence never match."""
    start = i - rule.main
    if start < 0 or start + len(rule.atoms) > len(sent):
        return False
    return all(atom_matches(a, sent[start + j], lex) for j, a in enumerate(rule.atoms))


def kind_matches(pos_set, kind_tags, mode=EXACT) -> bool:
    if pos_set is None:
        return False
    if mode == EXACT:
        return pos_set == kind_tags
    if mode == SUPERSET:
        return pos_set >= kind_tags
    raise ValueError(f"unknown kind-match mode {mode!r}")


def apply_ruleset(rs: RuleSet, sent, partial, lex, kind_match: str = EXACT):
    """Tag unresolved words of the ruleset's ambiguity class with the first
    matching rule; everything else is returned untouched."""
    ordered = rs.ordered_rules()
    kind_tags = rs.kind_tags
    result = partial
    for i, item in enumerate(partial):
        if item.resolved or not kind_matches(lex.pos_set(sent[i]), kind_tags, kind_match):
            continue
        for rule in ordered:
            if match_at(rule, sent, lex, i):
                result = result.with_tag(i, rule.tag, Provenance.RULE)
                break
    return result
