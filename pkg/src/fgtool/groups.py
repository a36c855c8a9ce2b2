"""Finite group presentations: words, Tietze simplification, invariants.

A word is a tuple of ``(generator, sign)`` letters with sign +1 or -1; the
empty tuple is the identity. Group isomorphism is undecidable, so groups are
compared only through :class:`InvariantReport` values, except that a
presentation that simplifies to no generators is trivial and one that
simplifies to no relators is free.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .errors import FGToolError, TargetTooLarge

Letter = tuple[str, int]
Word = tuple[Letter, ...]

DEFAULT_HOM_BUDGET = 10**8
S4_MAX_GENERATORS = 6
MAX_TIETZE_PASSES = 1000
MAX_TOTAL_LENGTH = 200_000


def free_reduce(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def cyclic_reduce(w: Sequence[Letter]) -> Word:
    w = list(free_reduce(w))
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def word(*letters) -> Word:
    """Build a word from ``"a"``, ``"a^-1"`` style tokens or ``(g, e)`` pairs."""
    out = []
    for x in letters:
        if isinstance(x, tuple):
            out.append(x)
        elif x.endswith("^-1"):
            out.append((x[:-3], -1))
        else:
            out.append((x, 1))
    return tuple(out)


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


def parse_word(text: str) -> Word:
    return word(*text.split())


def exponent_sums(w: Sequence[Letter]) -> dict[str, int]:
    sums: dict[str, int] = {}
    for g, e in w:
        sums[g] = sums.get(g, 0) + e
    return sums


def _canonical_relator(w: Word) -> Word:
    """Representative of a relator up to cyclic rotation and inversion."""
    if not w:
        return w
    best = None
    for cand in (w, inverse(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            key = tuple((g, -e) for g, e in rot)  # prefer positive letters first
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise FGToolError("duplicate generator names")
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            for g, e in r:
                if g not in gens:
                    raise FGToolError(f"relator uses undeclared generator {g!r}")
                if e not in (1, -1):
                    raise FGToolError(f"bad exponent {e} in relator")
            rels.append(r)
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def is_trivial_form(self) -> bool:
        return not self.generators

    @property
    def is_free_form(self) -> bool:
        return all(not r for r in self.relators)

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __str__(self):
        rels = ", ".join(format_word(r) or "1" for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


# ---------------------------------------------------------------------------
# Tietze moves


def _substitute(w: Word, g: str, image: Word) -> Word:
    out = []
    inv = inverse(image)
    for h, e in w:
        if h == g:
            out.extend(image if e == 1 else inv)
        else:
            out.append((h, e))
    return free_reduce(out)


def _tidy(relators: Iterable[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = _canonical_relator(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(key)
    out.sort(key=lambda r: (len(r), r))
    return out


def tietze_reduce(p: Presentation, max_passes: int = MAX_TIETZE_PASSES):
    """Simplify ``p`` and record how removed generators are expressed.

    Returns ``(simplified, substitution)`` where ``substitution`` maps every
    original generator to a word over the simplified generators.
    """
    gens = list(p.generators)
    rels = _tidy(p.relators)
    subst: dict[str, Word] = {g: ((g, 1),) for g in gens}
    for _ in range(max_passes):
        total = sum(len(r) for r in rels)
        counts: dict[str, int] = {}
        for r in rels:
            for g, _e in r:
                counts[g] = counts.get(g, 0) + 1
        best = None
        for idx, r in enumerate(rels):
            local: dict[str, int] = {}
            for g, _e in r:
                local[g] = local.get(g, 0) + 1
            for g, n in local.items():
                if n != 1:
                    continue
                elsewhere = counts[g] - 1
                growth = elsewhere * (len(r) - 2) - len(r)
                if total + growth > max(total, MAX_TOTAL_LENGTH):
                    continue
                key = (len(r), elsewhere, gens.index(g))
                if best is None or key < best[0]:
                    best = (key, idx, g)
        if best is None:
            break
        _, idx, g = best
        r = rels[idx]
        pos = next(i for i, (h, _e) in enumerate(r) if h == g)
        e = r[pos][1]
        # r = u g^e v = 1  =>  g^e = u^-1 v^-1
        image = free_reduce(inverse(r[:pos]) + inverse(r[pos + 1 :]))
        if e == -1:
            image = inverse(image)
        gens.remove(g)
        rels = _tidy(_substitute(w, g, image) for i, w in enumerate(rels) if i != idx)
        for h in subst:
            subst[h] = _substitute(subst[h], g, image)
    return Presentation(tuple(gens), tuple(rels)), subst


def simplify_presentation(p: Presentation) -> Presentation:
    """Tietze-simplified presentation of the same group.

    Repeatedly drops empty and duplicate relators and eliminates a generator
    occurring exactly once in some relator, shortest relators first.
    """
    return tietze_reduce(p)[0]


def rewrite(w: Sequence[Letter], substitution: dict[str, Word]) -> Word:
    out = []
    for g, e in w:
        image = substitution[g]
        out.extend(image if e == 1 else inverse(image))
    return free_reduce(out)


# ---------------------------------------------------------------------------
# abelianization


def relation_matrix(p: Presentation) -> list[list[int]]:
    index = {g: i for i, g in enumerate(p.generators)}
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r:
            row[index[g]] += e
        rows.append(row)
    return rows


def abelianization_invariants(p: Presentation) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion divisor chain) of the abelianized group."""
    m = relation_matrix(p)
    diagonal, _, _ = linalg.smith_normal_form(m, cols=len(p.generators))
    nonzero = [d for d in diagonal if d]
    rank = len(p.generators) - len(nonzero)
    torsion = tuple(d for d in nonzero if d > 1)
    return rank, torsion


def abelian_image_in_lattice(p: Presentation, w: Sequence[Letter]) -> bool:
    """Whether ``w`` maps to the identity of the abelianization."""
    m = relation_matrix(p)
    n = len(p.generators)
    sums = exponent_sums(w)
    v = [sums.get(g, 0) for g in p.generators]
    if not m:
        return not any(v)
    diagonal, _, right = linalg.smith_normal_form(m, cols=n)
    # v lies in the row lattice of m iff v @ right lies in that of the diagonal
    vr = [sum(v[i] * right[i][j] for i in range(n)) for j in range(n)]
    for j, x in enumerate(vr):
        d = diagonal[j] if j < len(diagonal) else 0
        if d == 0 and x != 0:
            return False
        if d and x % d:
            return False
    return True


def hom_kplus_dimension(invariants, characteristic: int = 0) -> int:
    """Dimension of Hom(G, k+) from the abelianization invariants of G."""
    rank, torsion = invariants
    p = linalg.check_characteristic(characteristic)
    if p == 0:
        return rank
    return rank + sum(1 for d in torsion if d % p == 0)


# ---------------------------------------------------------------------------
# invariant suite


def hom_budget() -> int:
    raw = os.environ.get("FGTOOL_HOM_BUDGET")
    if raw is None:
        return DEFAULT_HOM_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise FGToolError(f"FGTOOL_HOM_BUDGET must be an integer, got {raw!r}") from None


SUITE_TARGETS = ("C2", "C3", "C4", "S3")


@dataclass(frozen=True)
class InvariantReport:
    abelian_rank: int
    torsion: tuple[int, ...]
    hom_counts: dict[str, int] = field(default_factory=dict)
    notices: tuple[str, ...] = field(default=(), compare=False)

    def differences(self, other: "InvariantReport") -> list[str]:
        out = []
        if self.abelian_rank != other.abelian_rank:
            out.append("abelian rank")
        if self.torsion != other.torsion:
            out.append("torsion")
        for name in sorted(set(self.hom_counts) | set(other.hom_counts)):
            if self.hom_counts.get(name) != other.hom_counts.get(name):
                out.append(f"homs into {name}")
        return out


def invariant_suite(p: Presentation, budget: int | None = None) -> InvariantReport:
    from .homcount import builtin_group, constrained_generators, count_homs

    budget = hom_budget() if budget is None else budget
    simple = simplify_presentation(p)
    rank, torsion = abelianization_invariants(simple)
    counts = {name: count_homs(simple, builtin_group(name), budget) for name in SUITE_TARGETS}
    notices = []
    s4 = builtin_group("S4")
    n_constrained = len(constrained_generators(simple))
    if len(simple.generators) > S4_MAX_GENERATORS:
        notices.append(f"S4 skipped: {len(simple.generators)} generators")
    elif len(s4) ** n_constrained > budget:
        notices.append("S4 skipped: over hom-count budget")
    else:
        counts["S4"] = count_homs(simple, s4, budget)
    return InvariantReport(rank, torsion, counts, tuple(notices))


def describe(p: Presentation) -> str:
    """Short human-readable identification, never claiming more than is known."""
    simple = simplify_presentation(p)
    if simple.is_trivial_form:
        return "trivial group"
    if simple.is_free_form:
        n = len(simple.generators)
        return "infinite cyclic group (free of rank 1)" if n == 1 else f"free group of rank {n}"
    rank, torsion = abelianization_invariants(simple)
    parts = [f"Z^{rank}" if rank else ""] + [f"Z/{d}" for d in torsion]
    ab = " + ".join(x for x in parts if x) or "0"
    return (
        f"group with {len(simple.generators)} generators and {len(simple.relators)} relators "
        f"after simplification; abelianization {ab}"
    )
