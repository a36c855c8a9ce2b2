"""Counting homomorphisms from a finitely presented group into a finite group."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import FGToolError, TargetTooLarge
from .groups import Presentation, hom_budget


@dataclass(frozen=True)
class FiniteGroupTable:
    """Multiplication table on elements 0..n-1; element 0 is the identity."""

    name: str
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise FGToolError(f"{self.name}: table is not square")
        if tuple(self.table[0]) != tuple(range(n)) or tuple(r[0] for r in self.table) != tuple(range(n)):
            raise FGToolError(f"{self.name}: element 0 must be the identity")

    def __len__(self):
        return len(self.table)

    @property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def is_group(self) -> bool:
        n = len(self)
        t = self.table
        if any(sorted(row) != list(range(n)) for row in t):
            return False
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def _from_permutations(name, perms):
    perms = [tuple(p) for p in perms]
    ident = tuple(range(len(perms[0])))
    perms.remove(ident)
    perms = [ident] + perms
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(a[b[k]] for k in range(len(a)))] for b in perms) for a in perms
    )
    return FiniteGroupTable(name, table)


def cyclic_group(n: int) -> FiniteGroupTable:
    return FiniteGroupTable(f"C{n}", tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def symmetric_group(n: int) -> FiniteGroupTable:
    return _from_permutations(f"S{n}", itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def builtin_group(name: str) -> FiniteGroupTable:
    builders = {
        "C2": lambda: cyclic_group(2),
        "C3": lambda: cyclic_group(3),
        "C4": lambda: cyclic_group(4),
        "C6": lambda: cyclic_group(6),
        "S3": lambda: symmetric_group(3),
        "S4": lambda: symmetric_group(4),
    }
    if name not in builders:
        raise FGToolError(f"unknown built-in group {name!r}; choose from {sorted(builders)}")
    return builders[name]()


def constrained_generators(p: Presentation) -> list[str]:
    used = {g for r in p.relators for g, _e in r}
    return [g for g in p.generators if g in used]


def count_homs(p: Presentation, target: FiniteGroupTable, budget: int | None = None) -> int:
    """Number of generator assignments into ``target`` satisfying every relator.

    Generators that appear in no relator contribute a factor ``|target|`` each.
    The rest are assigned by depth-first search; a relator is checked as soon
    as all of its generators have images. The budget bounds
    ``|target| ** (number of generators occurring in relators)``.
    """
    budget = hom_budget() if budget is None else budget
    n = len(target)
    order = constrained_generators(p)
    free = len(p.generators) - len(order)
    if n ** len(order) > budget:
        raise TargetTooLarge(
            f"{n}^{len(order)} assignments into {target.name} exceed the budget {budget}"
        )
    position = {g: i for i, g in enumerate(order)}
    table = target.table
    inv = target.inverses
    checks: list[list[list[tuple[int, int]]]] = [[] for _ in order]
    for r in p.relators:
        if not r:
            continue
        letters = [(position[g], e) for g, e in r]
        checks[max(i for i, _e in letters)].append(letters)
    images = [0] * len(order)

    def holds(letters):
        x = 0
        for i, e in letters:
            y = images[i] if e == 1 else inv[images[i]]
            x = table[x][y]
        return x == 0

    def search(k):
        if k == len(order):
            return 1
        total = 0
        for v in range(n):
            images[k] = v
            if all(holds(letters) for letters in checks[k]):
                total += search(k + 1)
        return total

    return search(0) * n**free


def find_separating_hom(p: Presentation, w, target: FiniteGroupTable, budget: int | None = None):
    """A homomorphism into ``target`` sending ``w`` to a non-identity element, or None."""
    budget = hom_budget() if budget is None else budget
    n = len(target)
    if n ** len(p.generators) > budget:
        return None
    table = target.table
    inv = target.inverses
    gens = list(p.generators)
    rels = [r for r in p.relators if r]
    for images in itertools.product(range(n), repeat=len(gens)):
        img = dict(zip(gens, images))

        def value(letters):
            x = 0
            for g, e in letters:
                y = img[g] if e == 1 else inv[img[g]]
                x = table[x][y]
            return x

        if all(value(r) == 0 for r in rels) and value(w) != 0:
            return img
    return None
