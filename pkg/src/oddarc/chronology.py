"""Chronologies for contraction cobordisms and choices C of them.

A chronology for a triple ``(c, b, a)`` is an order on the arcs of ``b``
(the order in which each arc is contracted against its mirror) together
with an orientation per step.  Orientations only matter for steps that
turn out to be splits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .diagrams import Arc, Matching, SizeError, enumerate_matchings, matching_id, step_kinds

LR = "LR"
RL = "RL"


@dataclass(frozen=True)
class ContractionStep:
    arc: Arc
    orientation: str = LR

    def __post_init__(self):
        if self.orientation not in (LR, RL):
            raise ValueError(f"orientation must be LR or RL, got {self.orientation!r}")


@dataclass(frozen=True)
class Chronology:
    triple: Tuple[Matching, Matching, Matching]
    steps: Tuple[ContractionStep, ...]

    def __post_init__(self):
        c, b, a = self.triple
        if not (c.n == b.n == a.n):
            raise SizeError("triple mixes different n")
        order = [s.arc for s in self.steps]
        if sorted(order) != sorted(b.arcs) or len(set(order)) != len(order):
            raise ValueError(f"steps {order} are not a permutation of the arcs of {b}")

    @property
    def order(self) -> List[Arc]:
        return [s.arc for s in self.steps]

    def kinds(self) -> List[str]:
        return step_kinds(*self.triple, self.order)

    def to_json(self):
        return {"triple": [matching_id(m) for m in self.triple],
                "steps": [{"arc": list(s.arc), "or": s.orientation} for s in self.steps]}

    @classmethod
    def from_json(cls, n: int, data) -> "Chronology":
        B = enumerate_matchings(n)
        triple = tuple(B[k] for k in data["triple"])
        steps = tuple(ContractionStep(tuple(s["arc"]), s.get("or", LR)) for s in data["steps"])
        return cls(triple, steps)


def nesting_violation(b: Matching, order: Sequence[Arc]) -> Optional[Tuple[Arc, Arc, Arc]]:
    """First ``(alpha, beta1, beta2)`` with two side-by-side arcs inside
    ``alpha`` both contracted before it, or ``None``.

    Side by side means neither of ``beta1``, ``beta2`` contains the other.
    """
    pos = {arc: k for k, arc in enumerate(order)}
    for alpha in b.arcs:
        earlier = [beta for beta in b.nested_in(alpha) if pos[beta] < pos[alpha]]
        for b1, b2 in itertools.combinations(earlier, 2):
            if b1[1] < b2[0] or b2[1] < b1[0]:
                return alpha, b1, b2
    return None


def validate(ch: Chronology) -> Optional[Tuple[Arc, Arc, Arc]]:
    """``None`` if the chronology is admissible, else the offending arcs."""
    return nesting_violation(ch.triple[1], ch.order)


def canonical_chronology(c: Matching, b: Matching, a: Matching) -> Chronology:
    return Chronology((c, b, a), tuple(ContractionStep(arc, LR) for arc in b.arcs))


class ChoiceC:
    """A chronology for every triple of matchings with the same ``n``."""

    def __init__(self, n: int, chronologies: Optional[Dict[Tuple[int, int, int], Chronology]] = None,
                 name: str = "custom"):
        self.n = n
        self.name = name
        B = enumerate_matchings(n)
        self._chr: Dict[Tuple[int, int, int], Chronology] = {}
        for c, b, a in itertools.product(range(len(B)), repeat=3):
            ch = (chronologies or {}).get((c, b, a))
            self._chr[(c, b, a)] = ch if ch is not None else canonical_chronology(B[c], B[b], B[a])

    def __getitem__(self, triple: Tuple[int, int, int]) -> Chronology:
        return self._chr[triple]

    def items(self):
        return self._chr.items()

    def replace(self, updates: Dict[Tuple[int, int, int], Chronology], name: str = "custom") -> "ChoiceC":
        d = dict(self._chr)
        d.update(updates)
        return ChoiceC(self.n, d, name)

    def to_json(self):
        return {"n": self.n, "name": self.name,
                "chronologies": [self._chr[t].to_json() for t in sorted(self._chr)]}

    @classmethod
    def from_json(cls, data) -> "ChoiceC":
        n = data["n"]
        chs = {}
        for item in data["chronologies"]:
            ch = Chronology.from_json(n, item)
            chs[tuple(item["triple"])] = ch
        return cls(n, chs, data.get("name", "custom"))


def canonical_choice(n: int) -> ChoiceC:
    """Contract the arcs of ``b`` left to right, every split oriented left to right."""
    return ChoiceC(n, None, "canonical")


def reversed_choice(n: int) -> ChoiceC:
    """Canonical order with every split oriented right to left."""
    B = enumerate_matchings(n)
    chs = {}
    for (c, b, a) in itertools.product(range(len(B)), repeat=3):
        chs[(c, b, a)] = Chronology((B[c], B[b], B[a]), tuple(ContractionStep(arc, RL) for arc in B[b].arcs))
    return ChoiceC(n, chs, "reversed")


ENUMERATION_MAX_N = 3


def enumerate_choices(n: int, triple: Tuple[Matching, Matching, Matching]) -> List[Chronology]:
    """Every admissible order, times both orientations of each split step.

    Merge steps always carry ``LR`` since their orientation is irrelevant.
    """
    if n > ENUMERATION_MAX_N:
        raise SizeError(f"chronology enumeration is limited to n <= {ENUMERATION_MAX_N}")
    c, b, a = triple
    out = []
    for order in itertools.permutations(b.arcs):
        if nesting_violation(b, order) is not None:
            continue
        kinds = step_kinds(c, b, a, order)
        split_pos = [k for k, kind in enumerate(kinds) if kind == "split"]
        for orients in itertools.product((LR, RL), repeat=len(split_pos)):
            o = dict(zip(split_pos, orients))
            steps = tuple(ContractionStep(arc, o.get(k, LR)) for k, arc in enumerate(order))
            out.append(Chronology(triple, steps))
    return out


def iter_all_choices(n: int) -> Iterator[ChoiceC]:
    """Every choice C: the product over triples of :func:`enumerate_choices`."""
    B = enumerate_matchings(n)
    triples = list(itertools.product(range(len(B)), repeat=3))
    options = [enumerate_choices(n, (B[c], B[b], B[a])) for c, b, a in triples]
    for combo in itertools.product(*options):
        yield ChoiceC(n, dict(zip(triples, combo)))


def count_choices(n: int) -> int:
    B = enumerate_matchings(n)
    total = 1
    for c, b, a in itertools.product(range(len(B)), repeat=3):
        total *= len(enumerate_choices(n, (B[c], B[b], B[a])))
    return total
