from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from core.errors import ShapeError


# Подмножество [n] фиксированной мощности; все индексы 1-based
@dataclass(frozen=True)
class CardSubset:
    ground: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(x) for x in self.elements))
        if self.ground < 0:
            raise ShapeError(f"ground must be nonnegative, got {self.ground}")
        for i, x in enumerate(self.elements):
            if not 1 <= x <= self.ground:
                raise ShapeError(f"element {x} at index {i + 1} outside [1, {self.ground}]")
            if i and self.elements[i - 1] >= x:
                raise ShapeError(f"elements must be strictly increasing: {list(self.elements)}")

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def at(self, a: int) -> int:
        """I(a), 1-based."""
        return self.elements[a - 1]

    def sort_key(self):
        return self.elements

    def to_json(self) -> dict:
        return {"ground": self.ground, "elements": list(self.elements)}

    @staticmethod
    def from_json(data: dict) -> "CardSubset":
        return CardSubset(int(data["ground"]), tuple(data["elements"]))

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class PositionTuple:
    parts: Tuple[CardSubset, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ShapeError("a position tuple needs at least one part")
        first = self.parts[0]
        for k, part in enumerate(self.parts):
            if part.ground != first.ground or part.cardinality != first.cardinality:
                raise ShapeError(
                    f"part {k + 1} is {part.cardinality}⊂[{part.ground}], "
                    f"expected {first.cardinality}⊂[{first.ground}]"
                )

    @property
    def s(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return self.parts[0].cardinality

    @property
    def n(self) -> int:
        return self.parts[0].ground

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k: int) -> CardSubset:
        return self.parts[k]

    def sort_key(self):
        return tuple(p.elements for p in self.parts)

    def as_lists(self) -> List[List[int]]:
        return [list(p.elements) for p in self.parts]

    def to_json(self) -> dict:
        return {"n": self.n, "parts": self.as_lists()}

    @staticmethod
    def of(n: int, parts) -> "PositionTuple":
        return PositionTuple(tuple(CardSubset(n, tuple(p)) for p in parts))

    @staticmethod
    def from_json(data: dict) -> "PositionTuple":
        return PositionTuple.of(int(data["n"]), data["parts"])

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Weight:
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def at(self, a: int):
        return self.entries[a - 1]

    def is_dominant(self) -> bool:
        return all(x >= y for x, y in zip(self.entries, self.entries[1:]))

    def is_antidominant(self) -> bool:
        return all(x <= y for x, y in zip(self.entries, self.entries[1:]))

    def total(self):
        """|λ| = Σ λ(a)."""
        return sum(self.entries)

    def shifted(self, c) -> "Weight":
        return Weight(tuple(x + c for x in self.entries))

    def scaled(self, c) -> "Weight":
        return Weight(tuple(x * c for x in self.entries))

    def negated(self) -> "Weight":
        return Weight(tuple(-x for x in self.entries))

    def to_json(self) -> list:
        return [format_rational(x) if isinstance(x, Fraction) else int(x) for x in self.entries]

    @staticmethod
    def ones(r: int) -> "Weight":
        return Weight((1,) * r)

    @staticmethod
    def zero(r: int) -> "Weight":
        return Weight((0,) * r)


def format_rational(x):
    """Целые остаются целыми, остальные дроби -> [числитель, знаменатель]."""
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return [x.numerator, x.denominator]
