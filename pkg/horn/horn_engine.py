# horn_engine.py
"""
Inductive Horn recursion.

Horn(r, n, s) is the set of s-tuples T of r-subsets of [n] with edim(T) >= 0 and
edim(TJ) >= 0 for every J in Horn(d, r, s) with 0 < d < r and edim(J) == 0.
By Belkale's theorem this is exactly the set of intersecting tuples (s >= 2).
"""
import logging
import threading
from typing import Dict, List, Tuple

from combinatorics.subset_ops import (
    canonical_representatives,
    compose_tuple,
    edim,
    full_tuple,
    permutation_closure,
)
from core.combinatorics_model import PositionTuple
from core.errors import DomainError
from core.verdict_model import HornVerdict, HornViolation

logger = logging.getLogger(__name__)

Key = Tuple[int, int, int]


class HornTable:
    """
    Memo of Horn(d, r, s), keyed by (d, r, s).

    Each level is computed once on canonical representatives and then expanded
    to full permutation closures. A level only becomes visible after it is
    complete, and every level it depends on (smaller d, ground r) is complete
    before it.
    """

    def __init__(self):
        self._classes: Dict[Key, List[Tuple[PositionTuple, int, int]]] = {}
        self._entries: Dict[Key, List[Tuple[PositionTuple, int]]] = {}
        self._edim_zero: Dict[Key, List[PositionTuple]] = {}
        self._lock = threading.RLock()

    def __contains__(self, key: Key) -> bool:
        return key in self._entries

    def keys(self) -> List[Key]:
        return sorted(self._entries)

    def is_complete(self, d: int, r: int, s: int) -> bool:
        return (d, r, s) in self._entries

    def classes(self, d: int, r: int, s: int) -> List[Tuple[PositionTuple, int, int]]:
        """(canonical representative, edim, orbit size) for every class, sorted."""
        self._ensure(d, r, s)
        return self._classes[(d, r, s)]

    def entries(self, d: int, r: int, s: int) -> List[Tuple[PositionTuple, int]]:
        self._ensure(d, r, s)
        return self._entries[(d, r, s)]

    def edim_zero(self, d: int, r: int, s: int) -> List[PositionTuple]:
        self._ensure(d, r, s)
        return self._edim_zero[(d, r, s)]

    def _ensure(self, d: int, r: int, s: int):
        key = (d, r, s)
        if key in self._entries:
            return
        with self._lock:
            if key in self._entries:
                return
            # нижние уровни строятся раньше: horn_member сам запрашивает Horn0(d', d, s)
            for lower in range(1, d):
                self._ensure(lower, d, s)
            classes = []
            for rep in canonical_representatives(d, r, s):
                verdict = horn_member(rep, self)
                if verdict.member:
                    classes.append((rep, verdict.edim, len(permutation_closure(rep))))
            entries = sorted(
                ((T, e) for rep, e, _ in classes for T in permutation_closure(rep)),
                key=lambda item: item[0].sort_key(),
            )
            self._classes[key] = classes
            self._edim_zero[key] = [T for T, e in entries if e == 0]
            self._entries[key] = entries
            logger.debug("Horn(%d,%d,%d): %d classes, %d tuples", d, r, s, len(classes), len(entries))


def horn_member(T: PositionTuple, cache: HornTable) -> HornVerdict:
    """Decide T ∈ Horn(r, n, s); a negative verdict names the first failing inequality."""
    e = edim(T)
    if e < 0:
        return HornVerdict(T, False, e, HornViolation(0, None, e))
    r, s = T.r, T.s
    for d in range(1, r):
        for J in cache.edim_zero(d, r, s):
            value = edim(compose_tuple(T, J))
            if value < 0:
                return HornVerdict(T, False, e, HornViolation(d, J, value))
    return HornVerdict(T, True, e)


def horn_enumerate(r: int, n: int, s: int, cache: HornTable) -> List[Tuple[PositionTuple, int]]:
    """All of Horn(r, n, s) with edims, sorted lexicographically."""
    if not 1 <= r <= n or s < 1:
        raise DomainError(f"Horn({r},{n},{s}) needs 1 <= r <= n and s >= 1")
    return list(cache.entries(r, n, s))


def horn_classes(r: int, n: int, s: int, cache: HornTable) -> List[Tuple[PositionTuple, int, int]]:
    if not 1 <= r <= n or s < 1:
        raise DomainError(f"Horn({r},{n},{s}) needs 1 <= r <= n and s >= 1")
    return list(cache.classes(r, n, s))


def horn0(d: int, r: int, s: int, cache: HornTable) -> List[PositionTuple]:
    """Edim-zero slice of Horn(d, r, s); d == r gives the single tuple ([r], ..., [r])."""
    if not 0 < d <= r:
        raise DomainError(f"Horn0({d},{r},{s}) needs 0 < d <= r")
    if d == r:
        return [full_tuple(r, s)]
    return cache.edim_zero(d, r, s)


def is_intersecting_exact(T: PositionTuple, cache: HornTable) -> bool:
    """Decides T ∈ Intersecting(r, n, s) through the Horn recursion."""
    if T.s < 2:
        logger.debug("s = %d is outside the range of Belkale's theorem; evaluating the recursion as is", T.s)
    return horn_member(T, cache).member

