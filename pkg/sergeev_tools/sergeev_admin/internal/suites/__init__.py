"""
Identity suites. Every suite module exposes `run(context) -> List[Check]`.
"""

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from sergeev_tools.algebra.cycles import OrderedIndexSet
from sergeev_tools.algebra.element import Algebra, AlgebraConfig, Monomial

MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteContext:
    config: AlgebraConfig
    seed: int = 0
    random_samples: int = 200
    kernel_samples: int = 1000
    guard: int = 5000
    # Skip center computations above the guard instead of failing the run.
    skip_guarded: bool = False

    def guard_exceeded(self) -> Optional[str]:
        dimension = self.config.dimension
        if dimension > self.guard:
            return f"dimension {dimension} exceeds the guard {self.guard}"
        return None


@dataclass
class Check:
    """
    Outcome of one named identity over all its instances.

    Checks that are not gated are reported as observations and never fail the suite.
    """

    name: str
    gated: bool = True
    instances: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, ok: bool, instance: Any) -> bool:
        self.instances += 1
        if not ok:
            self.failures.append(str(instance))
        return ok

    def skip(self, reason: str) -> "Check":
        self.skipped = reason
        return self

    @property
    def passed(self) -> bool:
        return not self.gated or not self.failures

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "name": self.name,
            "gated": self.gated,
            "instances": self.instances,
            "failures": len(self.failures),
            "pass": self.passed,
        }
        if self.failures:
            result["failed_instances"] = self.failures[:MAX_REPORTED_FAILURES]
        if self.skipped:
            result["skipped"] = self.skipped
        if self.details:
            result["details"] = self.details
        return result


def ordered_sets(d: int, min_size: int = 1, max_size: Optional[int] = None) -> Iterator[OrderedIndexSet]:
    """
    All ordered index sets in 1..d, by size.
    """
    top = d if max_size is None else min(d, max_size)
    for size in range(min_size, top + 1):
        for entries in permutations(range(1, d + 1), size):
            yield OrderedIndexSet(entries)


def junction_pairs(d: int) -> Iterator[Tuple[OrderedIndexSet, OrderedIndexSet]]:
    """
    Pairs (A, B) meeting exactly at the last entry of A, which is the first entry of B.
    """
    for A in ordered_sets(d):
        free = [i for i in range(1, d + 1) if i not in A.entries]
        for size in range(0, len(free) + 1):
            for rest in permutations(free, size):
                yield A, OrderedIndexSet((A.entries[-1],) + rest)


def overlap_pairs(d: int, overlap: int) -> Iterator[Tuple[OrderedIndexSet, OrderedIndexSet]]:
    """
    Pairs of ordered index sets with exactly `overlap` common entries, each of size at
    least `overlap`.
    """
    sets = list(ordered_sets(d, min_size=max(overlap, 1)))
    for A in sets:
        for B in sets:
            if len(set(A.entries) & set(B.entries)) == overlap:
                yield A, B


def random_monomial(algebra: Algebra, rng: random.Random) -> Monomial:
    """
    Uniformly random PBW monomial, without enumerating the basis.
    """
    exponents = tuple(rng.randrange(algebra.l) for _ in range(algebra.d))
    perm = list(range(algebra.d))
    rng.shuffle(perm)
    return Monomial(exponents, tuple(perm), rng.randrange(2**algebra.d))
