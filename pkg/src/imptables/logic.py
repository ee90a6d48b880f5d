"""Bracketed implication chains and their truth tables.

A formula here is one parenthesization of ``p1 => p2 => ... => pn``,
i.e. a full binary tree whose leaves carry the variable positions 1..n.
Truth values are plain ints: 0 (false), 1 (true), 2 (unknown).  The
three-valued implication restricts to classical material implication
on {0, 1}, so both semantics share one outcome table.

Everything in this module counts exactly, with Python integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

FALSE = 0
TRUE = 1
UNKNOWN = 2

# Outcome of ``a => b``, indexed [antecedent][consequent].
_IMPLIES_TABLE = (
    (1, 1, 1),  # antecedent 0: implication holds whatever the consequent
    (0, 1, 2),  # antecedent 1: implication takes the consequent's value
    (2, 1, 2),  # antecedent 2: true consequent rescues, otherwise unknown
)


class BudgetError(Exception):
    """Raised when a brute-force enumeration would exceed its budget."""


@dataclass(frozen=True)
class Semantics:
    """A truth-value domain: classical {0,1} or three-valued {0,1,2}."""

    name: str
    radix: int
    values: tuple[int, ...]
    brute_budget: int  # default max n for full tree x valuation iteration

    def __str__(self) -> str:
        return self.name


KLEENE = Semantics("kleene", 3, (0, 1, 2), brute_budget=8)
CLASSICAL = Semantics("classical", 2, (0, 1), brute_budget=10)


def semantics_from_radix(radix: int) -> Semantics:
    if radix == 2:
        return CLASSICAL
    if radix == 3:
        return KLEENE
    raise ValueError(f"radix must be 2 or 3, got {radix}")


def _check_value(v: int, sem: Semantics) -> None:
    if v not in sem.values:
        raise ValueError(f"truth value {v!r} is not legal in {sem.name} semantics")


def implies(a: int, b: int, sem: Semantics = KLEENE) -> int:
    """Value of ``a => b`` under the given semantics."""
    _check_value(a, sem)
    _check_value(b, sem)
    return _IMPLIES_TABLE[a][b]


@dataclass(frozen=True)
class Leaf:
    """A variable occurrence; ``index`` is its 1-based position."""

    index: int


@dataclass(frozen=True)
class Node:
    """An implication ``left => right``."""

    left: "Bracketing"
    right: "Bracketing"


Bracketing = Union[Leaf, Node]


def leaf_count(tree: Bracketing) -> int:
    if isinstance(tree, Leaf):
        return 1
    return leaf_count(tree.left) + leaf_count(tree.right)


def first_leaf_index(tree: Bracketing) -> int:
    while isinstance(tree, Node):
        tree = tree.left
    return tree.index


def format_formula(tree: Bracketing) -> str:
    """Fully parenthesized ASCII rendering, e.g. ``((p1=>p2)=>p3)``."""
    if isinstance(tree, Leaf):
        return f"p{tree.index}"
    return f"({format_formula(tree.left)}=>{format_formula(tree.right)})"


def catalan(n: int) -> int:
    """Number of bracketings of an n-variable chain: binom(2n-2, n-1)/n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return math.comb(2 * n - 2, n - 1) // n


def enumerate_bracketings(n: int) -> tuple[Bracketing, ...]:
    """All bracketings on n variables, in canonical order.

    Order: by root split k = size of the left subtree, ascending, then
    recursively by the left subtree's position, then the right's.  The
    result is deterministic, so trees are addressable by index.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _bracketings(1, n)


@lru_cache(maxsize=None)
def _bracketings(start: int, size: int) -> tuple[Bracketing, ...]:
    if size == 1:
        return (Leaf(start),)
    out = []
    for k in range(1, size):
        for left in _bracketings(start, k):
            for right in _bracketings(start + k, size - k):
                out.append(Node(left, right))
    return tuple(out)


def evaluate(tree: Bracketing, valuation: Sequence[int], sem: Semantics = KLEENE) -> int:
    """Evaluate ``tree`` under ``valuation`` (position i -> value of p_{i+1})."""
    if leaf_count(tree) != len(valuation):
        raise ValueError(
            f"valuation has {len(valuation)} entries but the formula has "
            f"{leaf_count(tree)} variables"
        )
    for v in valuation:
        _check_value(v, sem)
    return _eval(tree, valuation, first_leaf_index(tree))


def _eval(tree: Bracketing, valuation: Sequence[int], base: int) -> int:
    if isinstance(tree, Leaf):
        return valuation[tree.index - base]
    return _IMPLIES_TABLE[_eval(tree.left, valuation, base)][
        _eval(tree.right, valuation, base)
    ]


@dataclass(frozen=True)
class CountVector:
    """Exact entry tallies of all truth tables at one n.

    ``t``/``f``/``u`` count the entries with value true/false/unknown;
    ``g`` is the grand total (``u`` is 0 in classical semantics, where
    the counts are conventionally called r and s).
    """

    n: int
    t: int
    f: int
    u: int
    g: int

    def __post_init__(self) -> None:
        if self.t + self.f + self.u != self.g:
            raise ValueError(
                f"inconsistent counts at n={self.n}: "
                f"{self.t}+{self.f}+{self.u} != {self.g}"
            )

    @property
    def r(self) -> int:
        """Classical alias for the true-entry count."""
        return self.t

    @property
    def s(self) -> int:
        """Classical alias for the false-entry count."""
        return self.f


# --- brute-force path ------------------------------------------------------
#
# The reference semantics is `evaluate`.  Iterating radix**n valuations
# through a recursive evaluator is needlessly slow in CPython, so each
# tree is flattened once to a postorder program and run with an explicit
# stack.  tests assert this agrees with plain `evaluate`.


def _compile(tree: Bracketing, base: int) -> list[int]:
    ops: list[int] = []

    def walk(t: Bracketing) -> None:
        if isinstance(t, Leaf):
            ops.append(t.index - base)  # >= 0: push valuation[op]
        else:
            walk(t.left)
            walk(t.right)
            ops.append(-1)  # combine top two stack values

    walk(tree)
    return ops


def _run(ops: list[int], valuation: Sequence[int]) -> int:
    table = _IMPLIES_TABLE
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for op in ops:
        if op >= 0:
            push(valuation[op])
        else:
            b = pop()
            a = pop()
            push(table[a][b])
    return stack[0]


def _value_tally(tree: Bracketing, sem: Semantics) -> list[int]:
    """Outcome tally of one subtree over all valuations of its own leaves."""
    ops = _compile(tree, first_leaf_index(tree))
    n = leaf_count(tree)
    tally = [0, 0, 0]
    for valuation in itertools.product(sem.values, repeat=n):
        tally[_run(ops, valuation)] += 1
    return tally


def _check_budget(n: int, sem: Semantics, budget: int | None) -> None:
    limit = sem.brute_budget if budget is None else budget
    if n > limit:
        raise BudgetError(
            f"n={n} exceeds the brute-force budget ({limit}) for {sem.name} "
            f"semantics; raise the budget or use the tree_counts path"
        )


def brute_counts(n: int, sem: Semantics = KLEENE, budget: int | None = None) -> CountVector:
    """Tally outcomes over every (bracketing, valuation) pair at n.

    This is the ground-truth path: it actually evaluates all
    catalan(n) * radix**n table entries.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_budget(n, sem, budget)
    tally = [0, 0, 0]
    for tree in enumerate_bracketings(n):
        for value, count in enumerate(_value_tally(tree, sem)):
            tally[value] += count
    return CountVector(n=n, t=tally[1], f=tally[0], u=tally[2], g=sum(tally))


def tree_counts(tree: Bracketing, sem: Semantics = KLEENE) -> tuple[int, int, int]:
    """(true, false, unknown) tallies for a single tree, without iterating
    valuations: leaf tallies are all-ones, and an implication node combines
    its children's tallies through the outcome table.
    """
    counts = _dp_counts(tree, sem)
    return counts[1], counts[0], counts[2]


def _dp_counts(tree: Bracketing, sem: Semantics) -> list[int]:
    if isinstance(tree, Leaf):
        counts = [0, 0, 0]
        for v in sem.values:
            counts[v] = 1
        return counts
    left = _dp_counts(tree.left, sem)
    right = _dp_counts(tree.right, sem)
    out = [0, 0, 0]
    for a in sem.values:
        if not left[a]:
            continue
        row = _IMPLIES_TABLE[a]
        for b in sem.values:
            out[row[b]] += left[a] * right[b]
    return out


def color_class_counts(
    n: int, sem: Semantics = KLEENE, budget: int | None = None
) -> dict[tuple[int, int], int]:
    """Classify every (tree, valuation) entry at n by the pair

        (value of the root's left subformula, value of the root's right).

    In classical semantics the four classes are exactly the convolution
    decomposition of the total count.  Left and right subtrees read
    disjoint variables, so per tree the tally of a pair class factors
    into (left outcomes) x (right outcomes); the tallies themselves come
    from full valuation iteration.
    """
    if n < 2:
        raise ValueError(f"color classes need a root split, so n >= 2 (got {n})")
    _check_budget(n, sem, budget)
    classes = {(a, b): 0 for a in sem.values for b in sem.values}
    for tree in enumerate_bracketings(n):
        left = _value_tally(tree.left, sem)
        right = _value_tally(tree.right, sem)
        for a in sem.values:
            for b in sem.values:
                classes[(a, b)] += left[a] * right[b]
    return classes


def iter_valuations(n: int, sem: Semantics = KLEENE) -> Iterator[tuple[int, ...]]:
    """Valuations in table-row order: p1 most significant, digits 0,1,2."""
    return itertools.product(sem.values, repeat=n)
