"""Atomic skill labels: grammar, verb registry, and plan similarity.

A skill label is ``Verb[obj]`` or ``Verb[obj1, obj2]``. Verbs are drawn from
an open registry: relational verbs take two object arguments (movable, target),
all others take one. Plan similarity compares two label sequences by Jaccard
overlap of their verb sets and of their verb-bigram sets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityMismatch, MalformedLabel, NonMovableGrasp

_VERB_RE = re.compile(r"[A-Z][A-Za-z]*")
_LABEL_RE = re.compile(r"\s*([A-Za-z][A-Za-z]*)\s*\[([^\[\]]*)\]\s*")


@dataclass(frozen=True)
class Verb:
    name: str
    relational: bool = False


class VerbRegistry:
    """Open verb vocabulary. Unknown verbs default to non-relational."""

    _SEED = {
        "Reach": False,
        "Move": False,
        "Grasp": False,
        "Release": False,
        "Place": True,
        "Insert": True,
        "Close": True,
        "Push": False,
        "Pull": False,
        "Lift": False,
        "Rotate": False,
    }

    def __init__(self):
        self._verbs = {name: Verb(name, rel) for name, rel in self._SEED.items()}

    def register(self, name: str, relational: bool = False) -> Verb:
        if not _VERB_RE.fullmatch(name):
            raise MalformedLabel(f"invalid verb name: {name!r}")
        verb = Verb(name, relational)
        self._verbs[name] = verb
        return verb

    def get(self, name: str) -> Verb:
        return self._verbs.get(name, Verb(name, relational=False))

    def known(self, name: str) -> bool:
        return name in self._verbs


DEFAULT_VERBS = VerbRegistry()


@dataclass(frozen=True)
class SkillLabel:
    verb: Verb
    args: tuple[str, ...]

    def __str__(self) -> str:
        return format_skill(self)


# Execution-ordered sequence of labels.
SkillSequence = tuple[SkillLabel, ...]


def parse_skill(text: str, registry: VerbRegistry = DEFAULT_VERBS) -> SkillLabel:
    """Parse ``Verb[obj]`` / ``Verb[obj1, obj2]``; surrounding whitespace is ok.

    Raises MalformedLabel on grammar violations and ArityMismatch when the
    argument count disagrees with the verb's registered arity.
    """
    m = _LABEL_RE.fullmatch(text)
    if m is None:
        raise MalformedLabel(f"not a skill label: {text!r}")
    name, body = m.group(1), m.group(2)
    if not _VERB_RE.fullmatch(name):
        raise MalformedLabel(f"invalid verb name: {name!r}")
    parts = body.split(",")
    args = tuple(p.strip() for p in parts)
    if any(not a for a in args):
        raise MalformedLabel(f"empty argument in {text!r}")
    if len(args) > 2:
        raise MalformedLabel(f"more than two arguments in {text!r}")
    verb = registry.get(name)
    expected = 2 if verb.relational else 1
    if len(args) != expected:
        raise ArityMismatch(
            f"{name} takes {expected} argument(s), got {len(args)}: {text!r}"
        )
    return SkillLabel(verb, args)


def format_skill(label: SkillLabel) -> str:
    """Canonical serialization; single space after the comma."""
    return f"{label.verb.name}[{', '.join(label.args)}]"


def parse_sequence(lines, registry: VerbRegistry = DEFAULT_VERBS) -> SkillSequence:
    """Parse an iterable of label strings into a sequence (strict)."""
    return tuple(parse_skill(line, registry) for line in lines)


def verb_set(seq: SkillSequence) -> frozenset[str]:
    return frozenset(label.verb.name for label in seq)


def bigrams(seq: SkillSequence) -> frozenset[tuple[str, str]]:
    """Distinct ordered pairs of adjacent verbs."""
    names = [label.verb.name for label in seq]
    return frozenset(zip(names, names[1:]))


def jaccard(a, b) -> float:
    """|a∩b| / |a∪b|, with the both-empty case defined as 1.0."""
    a, b = set(a), set(b)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def plan_similarity(a: SkillSequence, b: SkillSequence, lambda_: float) -> float:
    """Weighted Jaccard agreement of verb sets and verb-bigram sets."""
    if not 0.0 <= lambda_ <= 1.0:
        raise ValueError(f"lambda must be in [0, 1], got {lambda_}")
    return lambda_ * jaccard(verb_set(a), verb_set(b)) + (1.0 - lambda_) * jaccard(
        bigrams(a), bigrams(b)
    )


def normalize_skill(
    label: SkillLabel,
    movable_objects,
    gripper_open_throughout: bool = False,
    registry: VerbRegistry = DEFAULT_VERBS,
) -> SkillLabel:
    """Apply the post-processing rules to an annotated label.

    Relational args are reordered to (movable, target) when exactly one arg is
    movable; a relational label over an open-throughout segment downgrades to
    Move on the movable arg; Grasp/Release must target a movable object.
    Matching against ``movable_objects`` is case-insensitive exact.
    """
    movable = {m.lower() for m in movable_objects}
    args = label.args
    if label.verb.relational:
        flags = [a.lower() in movable for a in args]
        if len(args) == 2 and flags[1] and not flags[0]:
            args = (args[1], args[0])
        if gripper_open_throughout:
            return SkillLabel(registry.get("Move"), (args[0],))
        return SkillLabel(label.verb, args)
    if label.verb.name in ("Grasp", "Release") and args[0].lower() not in movable:
        raise NonMovableGrasp(
            f"{label.verb.name} target {args[0]!r} is not a movable object"
        )
    return SkillLabel(label.verb, args)
