"""Five families of combinatorial objects counted by normalized median Genocchi numbers.

For every order n >= 1 the families below all have normalized_genocchi(n)
elements, and each carries two statistics k, l in [n] whose marginal
distributions are both given by row n of the Kreweras triangle.

pd2n      normalized Dumont permutations of the second kind: words sigma of
          length 2n+2 with sigma(2i-1) > 2i-1, sigma(2i) < 2i, and each even
          value 2i appearing before 2i+1.  k: sigma(1) = 2k.  l: the last
          letter is 2l+1.
dellac    Dellac configurations: columns c_1 .. c_{2n} (c_i = column of the
          dot in row i) with every column used exactly twice and
          c_i <= i <= c_i + n.  k = c_{n+1}, l = c_n.
chain     increasing subset chains I_0 .. I_n of [n] with #I_i = i and
          I_{i-1} minus {i} contained in I_i.  k (resp. l): first index whose
          set contains 1 (resp. n).
settuple  tuples (S_1, .., S_n) of subsets of [n] with #S_i = #S_i^{-1} in
          {1, 2}, where S_i^{-1} = {j : i in S_j}, and two-element S_i^{-1}
          always straddling i.  k (resp. l): the unique j with 1 in S_j
          (resp. n in S_j).
hetyei    pair tuples ({u_1,v_1}, .., {u_n,v_n}) with u_l, v_l in [l] and the
          multiset of entries covering [n].  l: the last position whose pair
          contains 1 sits at n-l+1.  k: the largest redundant position sits
          at n-k+1 (see redundant_positions).

Canonical serializations (ASCII, no trailing whitespace):

    pd2n      "2 1 6 3 7 4 8 5"                   space-separated word
    dellac    "1 2 2 1 3 3"                       c_1 .. c_{2n}
    chain     ";3;1,3;1,3,4;1,2,3,5;1,2,3,4,5"    subsets I_0..I_n, ";"-separated,
                                                  values ascending, empty set = ""
    settuple  "2;1,3;2"                           subsets S_1..S_n
    hetyei    "1,1;1,2;2,2;3,4;3,5"               pairs "u,v" with u <= v

Enumeration emits each object exactly once, ordered lexicographically by
its canonical serialization, and refuses orders beyond a resource guard
(default n <= 8, overridable).  All objects are immutable and hashable;
enumerators are pure, so concurrent or repeated runs agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from itertools import combinations
from typing import Iterator

__all__ = [
    "ModelError",
    "ModelSyntaxError",
    "ModelInvariantError",
    "ResourceGuardError",
    "DumontPermutation",
    "DellacConfiguration",
    "FeiginChain",
    "SetTuple",
    "HetyeiTuple",
    "MODEL_NAMES",
    "parse",
    "serialize",
    "enumerate_model",
    "k_statistic",
    "l_statistic",
    "statistics",
    "redundancy_chain",
    "redundant_positions",
    "hetyei_pair_count",
    "DEFAULT_ENUMERATION_LIMIT",
    "DEFAULT_PAIR_COUNT_LIMIT",
]

DEFAULT_ENUMERATION_LIMIT = 8
DEFAULT_PAIR_COUNT_LIMIT = 5


class ModelError(ValueError):
    """Base class for rejected model objects."""


class ModelSyntaxError(ModelError):
    """Input text does not follow the canonical grammar."""


class ModelInvariantError(ModelError):
    """Well-formed input that violates a defining invariant."""


class ResourceGuardError(RuntimeError):
    """Requested order exceeds the configured enumeration guard."""


# ---------------------------------------------------------------------------
# object types


@dataclass(frozen=True)
class DumontPermutation:
    """Normalized Dumont permutation of the second kind, as a word of length 2n+2."""

    n: int
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        n, word = self.n, self.word
        if n < 1:
            raise ModelInvariantError(f"order must be >= 1, got {n}")
        m = 2 * n + 2
        if len(word) != m:
            raise ModelInvariantError(f"word length must be {m} for order {n}, got {len(word)}")
        if sorted(word) != list(range(1, m + 1)):
            raise ModelInvariantError(f"word is not a permutation of 1..{m}")
        for i in range(1, n + 2):
            if word[2 * i - 2] <= 2 * i - 1:
                raise ModelInvariantError(
                    f"excedance condition fails: sigma({2 * i - 1}) = {word[2 * i - 2]} is not > {2 * i - 1}"
                )
            if word[2 * i - 1] >= 2 * i:
                raise ModelInvariantError(
                    f"deficiency condition fails: sigma({2 * i}) = {word[2 * i - 1]} is not < {2 * i}"
                )
        pos = {v: p for p, v in enumerate(word)}
        for i in range(1, n + 1):
            if pos[2 * i] > pos[2 * i + 1]:
                raise ModelInvariantError(
                    f"normalization fails: value {2 * i} appears after value {2 * i + 1}"
                )

    def serialize(self) -> str:
        return " ".join(str(v) for v in self.word)

    @classmethod
    def from_text(cls, text: str) -> "DumontPermutation":
        values = _ints(text.split(" "), text)
        if len(values) < 4 or len(values) % 2:
            raise ModelSyntaxError(
                f"word length must be an even number >= 4, got {len(values)}"
            )
        return cls(len(values) // 2 - 1, tuple(values))


@dataclass(frozen=True)
class DellacConfiguration:
    """Dellac configuration stored as row_columns[i-1] = column of the dot in row i."""

    n: int
    row_columns: tuple[int, ...]

    def __post_init__(self) -> None:
        n, cols = self.n, self.row_columns
        if n < 1:
            raise ModelInvariantError(f"order must be >= 1, got {n}")
        if len(cols) != 2 * n:
            raise ModelInvariantError(f"need {2 * n} rows for order {n}, got {len(cols)}")
        counts = [0] * (n + 1)
        for i, c in enumerate(cols, 1):
            if not 1 <= c <= n:
                raise ModelInvariantError(f"row {i} uses column {c}, outside 1..{n}")
            if not c <= i <= c + n:
                raise ModelInvariantError(
                    f"band condition fails: row {i} dot in column {c} needs {c} <= {i} <= {c + n}"
                )
            counts[c] += 1
        for c in range(1, n + 1):
            if counts[c] != 2:
                raise ModelInvariantError(f"column {c} holds {counts[c]} dots, expected 2")

    def serialize(self) -> str:
        return " ".join(str(c) for c in self.row_columns)

    @classmethod
    def from_text(cls, text: str) -> "DellacConfiguration":
        values = _ints(text.split(" "), text)
        if len(values) < 2 or len(values) % 2:
            raise ModelSyntaxError(
                f"row count must be an even number >= 2, got {len(values)}"
            )
        return cls(len(values) // 2, tuple(values))


@dataclass(frozen=True)
class FeiginChain:
    """Subset chain I_0 .. I_n with #I_i = i and I_{i-1} minus {i} contained in I_i."""

    n: int
    subsets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, subsets = self.n, self.subsets
        if n < 1:
            raise ModelInvariantError(f"order must be >= 1, got {n}")
        if len(subsets) != n + 1:
            raise ModelInvariantError(f"need {n + 1} subsets for order {n}, got {len(subsets)}")
        prev: frozenset[int] = frozenset()
        for i, part in enumerate(subsets):
            if list(part) != sorted(set(part)):
                raise ModelInvariantError(f"subset {i} is not strictly ascending")
            cur = frozenset(part)
            if not all(1 <= v <= n for v in cur):
                raise ModelInvariantError(f"subset {i} has values outside 1..{n}")
            if len(cur) != i:
                raise ModelInvariantError(f"subset {i} has size {len(cur)}, expected {i}")
            if i and not (prev - {i}) <= cur:
                raise ModelInvariantError(
                    f"chain condition fails at step {i}: only {i} may leave the previous subset"
                )
            prev = cur

    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(part) for part in self.subsets)

    def serialize(self) -> str:
        return ";".join(",".join(str(v) for v in part) for part in self.subsets)

    @classmethod
    def from_text(cls, text: str) -> "FeiginChain":
        parts = text.split(";")
        if len(parts) < 2:
            raise ModelSyntaxError("chain needs at least subsets I_0 and I_1")
        return cls(len(parts) - 1, tuple(_subset(p, text) for p in parts))


@dataclass(frozen=True)
class SetTuple:
    """Tuple (S_1, .., S_n) with #S_i = #S_i^{-1} in {1, 2} and straddling preimages."""

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, sets = self.n, self.sets
        if n < 1:
            raise ModelInvariantError(f"order must be >= 1, got {n}")
        if len(sets) != n:
            raise ModelInvariantError(f"need {n} sets for order {n}, got {len(sets)}")
        occ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for j, part in enumerate(sets, 1):
            if list(part) != sorted(set(part)):
                raise ModelInvariantError(f"set {j} is not strictly ascending")
            if not 1 <= len(part) <= 2:
                raise ModelInvariantError(f"set {j} has size {len(part)}, expected 1 or 2")
            for v in part:
                if not 1 <= v <= n:
                    raise ModelInvariantError(f"set {j} has value {v} outside 1..{n}")
                occ[v].append(j)
        for i in range(1, n + 1):
            size = len(sets[i - 1])
            if len(occ[i]) != size:
                raise ModelInvariantError(
                    f"value {i} occurs {len(occ[i])} times but #S_{i} = {size}"
                )
            if size == 2 and not occ[i][0] < i < occ[i][1]:
                raise ModelInvariantError(
                    f"occurrences of value {i} at positions {occ[i]} do not straddle {i}"
                )

    def serialize(self) -> str:
        return ";".join(",".join(str(v) for v in part) for part in self.sets)

    @classmethod
    def from_text(cls, text: str) -> "SetTuple":
        parts = text.split(";")
        return cls(len(parts), tuple(_subset(p, text) for p in parts))


@dataclass(frozen=True)
class HetyeiTuple:
    """Pair tuple ({u_1,v_1}, .., {u_n,v_n}), u_l <= v_l in [l], entries covering [n]."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n, pairs = self.n, self.pairs
        if n < 1:
            raise ModelInvariantError(f"order must be >= 1, got {n}")
        if len(pairs) != n:
            raise ModelInvariantError(f"need {n} pairs for order {n}, got {len(pairs)}")
        seen: set[int] = set()
        for l, (u, v) in enumerate(pairs, 1):
            if u > v:
                raise ModelInvariantError(f"pair {l} is not sorted: {u} > {v}")
            if not (1 <= u and v <= l):
                raise ModelInvariantError(f"pair {l} = ({u},{v}) has entries outside 1..{l}")
            seen.update((u, v))
        missing = set(range(1, n + 1)) - seen
        if missing:
            raise ModelInvariantError(f"entries do not cover 1..{n}: missing {sorted(missing)}")

    def serialize(self) -> str:
        return ";".join(f"{u},{v}" for u, v in self.pairs)

    @classmethod
    def from_text(cls, text: str) -> "HetyeiTuple":
        parts = text.split(";")
        pairs = []
        for part in parts:
            pieces = part.split(",")
            if len(pieces) != 2:
                raise ModelSyntaxError(f"pair {part!r} in {text!r} is not of the form u,v")
            u, v = (_int(p, text) for p in pieces)
            if u > v:
                raise ModelSyntaxError(f"pair {part!r} must be written with u <= v")
            pairs.append((u, v))
        return cls(len(pairs), tuple(pairs))


ModelObject = (
    DumontPermutation | DellacConfiguration | FeiginChain | SetTuple | HetyeiTuple
)


def _int(piece: str, text: str) -> int:
    if not piece.isdigit():
        raise ModelSyntaxError(f"expected an unsigned integer, got {piece!r} in {text!r}")
    return int(piece)


def _ints(pieces: list[str], text: str) -> list[int]:
    return [_int(p, text) for p in pieces]


def _subset(part: str, text: str) -> tuple[int, ...]:
    if part == "":
        return ()
    values = _ints(part.split(","), text)
    if values != sorted(set(values)):
        raise ModelSyntaxError(f"subset {part!r} must list distinct ascending values")
    return tuple(values)


# ---------------------------------------------------------------------------
# registry, parse, serialize

_MODEL_CLASSES: dict[str, type] = {
    "pd2n": DumontPermutation,
    "dellac": DellacConfiguration,
    "chain": FeiginChain,
    "settuple": SetTuple,
    "hetyei": HetyeiTuple,
}

MODEL_NAMES: tuple[str, ...] = tuple(_MODEL_CLASSES)


def parse(model: str, text: str):
    """Parse a canonical serialization into a validated object of the named family."""
    try:
        cls = _MODEL_CLASSES[model]
    except KeyError:
        raise ModelSyntaxError(f"unknown model {model!r}; choose from {MODEL_NAMES}") from None
    return cls.from_text(text)


def serialize(obj) -> str:
    """Canonical serialization of any model object."""
    return obj.serialize()


# ---------------------------------------------------------------------------
# statistics


@singledispatch
def k_statistic(obj) -> int:
    raise TypeError(f"no k statistic for {type(obj).__name__}")


@singledispatch
def l_statistic(obj) -> int:
    raise TypeError(f"no l statistic for {type(obj).__name__}")


@k_statistic.register
def _(obj: DumontPermutation) -> int:
    return obj.word[0] // 2


@l_statistic.register
def _(obj: DumontPermutation) -> int:
    return (obj.word[-1] - 1) // 2


@k_statistic.register
def _(obj: DellacConfiguration) -> int:
    return obj.row_columns[obj.n]


@l_statistic.register
def _(obj: DellacConfiguration) -> int:
    return obj.row_columns[obj.n - 1]


@k_statistic.register
def _(obj: FeiginChain) -> int:
    return next(i for i, part in enumerate(obj.subsets) if 1 in part)


@l_statistic.register
def _(obj: FeiginChain) -> int:
    return next(i for i, part in enumerate(obj.subsets) if obj.n in part)


@k_statistic.register
def _(obj: SetTuple) -> int:
    return next(j for j, part in enumerate(obj.sets, 1) if 1 in part)


@l_statistic.register
def _(obj: SetTuple) -> int:
    return next(j for j, part in enumerate(obj.sets, 1) if obj.n in part)


@k_statistic.register
def _(obj: HetyeiTuple) -> int:
    return obj.n + 1 - max(redundant_positions(obj))


@l_statistic.register
def _(obj: HetyeiTuple) -> int:
    return obj.n + 1 - max(i for i, (u, v) in enumerate(obj.pairs, 1) if 1 in (u, v))


def statistics(obj) -> tuple[int, int]:
    """The pair (k, l) for any model object."""
    return k_statistic(obj), l_statistic(obj)


def redundancy_chain(m: HetyeiTuple) -> tuple[int, ...]:
    """Descending positions n = l_1 > l_2 > ... > l_m traced through the pairs.

    Start at l_1 = n; stop at the first l_i whose pair is {l_i, l_i};
    otherwise continue with l_{i+1} = min of the pair at l_i.  Terminates
    because the pair at position 1 is always {1, 1}.
    """
    chain = [m.n]
    while True:
        u, v = m.pairs[chain[-1] - 1]
        if u == v == chain[-1]:
            return tuple(chain)
        chain.append(min(u, v))


def redundant_positions(m: HetyeiTuple) -> frozenset[int]:
    """Redundant positions of a pair tuple.

    With chain values l_m < ... < l_1 = n, a position l in [l_m, n-1] is
    redundant when c(l) is an entry of the pair at l, where c(l) is the
    largest chain value <= l.  Position n itself is redundant only when its
    pair is {n, n}.  The result always contains l_m.
    """
    chain = redundancy_chain(m)
    lowest = chain[-1]
    out = []
    if m.pairs[m.n - 1] == (m.n, m.n):
        out.append(m.n)
    cursor = len(chain) - 1
    for l in range(lowest, m.n):
        while cursor > 0 and chain[cursor - 1] <= l:
            cursor -= 1
        if chain[cursor] in m.pairs[l - 1]:
            out.append(l)
    return frozenset(out)


# ---------------------------------------------------------------------------
# enumeration


def _iter_dumont(n: int) -> Iterator[DumontPermutation]:
    m = 2 * n + 2
    word = [0] * m
    used = [False] * (m + 1)

    def extend(pos: int) -> Iterator[DumontPermutation]:
        if pos == m:
            yield DumontPermutation(n, tuple(word))
            return
        p = pos + 1
        candidates = range(p + 1, m + 1) if p % 2 else range(1, p)
        for v in candidates:
            # placing odd 2i+1 before its mate 2i would break normalization
            if used[v] or (v % 2 and v > 1 and not used[v - 1]):
                continue
            used[v] = True
            word[pos] = v
            yield from extend(pos + 1)
            used[v] = False

    yield from extend(0)


def _iter_dellac(n: int) -> Iterator[DellacConfiguration]:
    rows = 2 * n
    cols = [0] * rows
    load = [0] * (n + 1)

    def extend(i: int) -> Iterator[DellacConfiguration]:
        if i > rows:
            yield DellacConfiguration(n, tuple(cols))
            return
        closing = i - n  # column whose band ends at row i
        for c in range(max(1, closing), min(i, n) + 1):
            if load[c] == 2:
                continue
            load[c] += 1
            cols[i - 1] = c
            if closing < 1 or load[closing] == 2:
                yield from extend(i + 1)
            load[c] -= 1

    yield from extend(1)


def _iter_chains(n: int) -> Iterator[FeiginChain]:
    full = (1 << n) - 1
    acc: list[int] = [0]

    def to_subsets(masks: list[int]) -> FeiginChain:
        subsets = tuple(
            tuple(v for v in range(1, n + 1) if mask >> (v - 1) & 1) for mask in masks
        )
        return FeiginChain(n, subsets)

    def extend(i: int) -> Iterator[FeiginChain]:
        if i > n:
            yield to_subsets(acc)
            return
        prev = acc[-1]
        comp = full & ~prev
        free = [v for v in range(1, n + 1) if comp >> (v - 1) & 1]
        for x in free:
            acc.append(prev | 1 << (x - 1))
            yield from extend(i + 1)
            acc.pop()
        if prev >> (i - 1) & 1:
            base = prev & ~(1 << (i - 1))
            for x, y in combinations(free, 2):
                acc.append(base | 1 << (x - 1) | 1 << (y - 1))
                yield from extend(i + 1)
                acc.pop()

    yield from extend(1)


def _iter_settuples(n: int) -> Iterator[SetTuple]:
    # occ[v]: occurrences of value v placed so far; target[v]: #S_v once step v
    # has chosen its set (0 while undecided).
    occ = [0] * (n + 1)
    target = [0] * (n + 1)
    acc: list[tuple[int, ...]] = []

    def may_use(v: int, j: int) -> bool:
        if v > j:
            return occ[v] == 0  # a second early occurrence could never straddle v
        if v == j:
            return occ[v] == 0  # only as the sole occurrence of a singleton S_v
        return occ[v] < target[v]

    def feasible(j: int) -> bool:
        need = 0
        for v in range(1, n + 1):
            if target[v]:
                need += target[v] - occ[v]
            elif occ[v] == 0:
                need += 1
        return need <= 2 * (n - j)

    def extend(j: int) -> Iterator[SetTuple]:
        if j > n:
            if all(occ[v] == target[v] for v in range(1, n + 1)):
                yield SetTuple(n, tuple(acc))
            return
        choices: list[tuple[int, ...]] = []
        usable = [v for v in range(1, n + 1) if may_use(v, j)]
        choices.extend((v,) for v in usable)
        if occ[j] == 1:  # straddle needs one occurrence of j strictly before j
            choices.extend(
                (x, y) for x, y in combinations(usable, 2) if x != j and y != j
            )
        for chosen in choices:
            target[j] = len(chosen)
            for v in chosen:
                occ[v] += 1
            if feasible(j):
                acc.append(chosen)
                yield from extend(j + 1)
                acc.pop()
            for v in chosen:
                occ[v] -= 1
            target[j] = 0

    yield from extend(1)


def _iter_hetyei(n: int) -> Iterator[HetyeiTuple]:
    pairs: list[tuple[int, int]] = [(0, 0)] * n

    def extend(l: int, covered: int) -> Iterator[HetyeiTuple]:
        if l == 0:
            yield HetyeiTuple(n, tuple(pairs))
            return
        for u in range(1, l + 1):
            for v in range(u, l + 1):
                new = covered | 1 << (u - 1) | 1 << (v - 1)
                if not new >> (l - 1) & 1:
                    continue  # value l can only come from pairs at positions >= l
                pairs[l - 1] = (u, v)
                yield from extend(l - 1, new)

    yield from extend(n, 0)


_ENUMERATORS = {
    "pd2n": _iter_dumont,
    "dellac": _iter_dellac,
    "chain": _iter_chains,
    "settuple": _iter_settuples,
    "hetyei": _iter_hetyei,
}


def enumerate_model(model: str, n: int, limit: int | None = DEFAULT_ENUMERATION_LIMIT):
    """All order-n objects of the named family, in canonical order.

    Canonical order is lexicographic on the serialization string.  Orders
    beyond `limit` are refused (pass a larger limit, or None, to override).
    """
    if model not in _ENUMERATORS:
        raise ValueError(f"unknown model {model!r}; choose from {MODEL_NAMES}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if limit is not None and n > limit:
        raise ResourceGuardError(
            f"order {n} exceeds the enumeration guard {limit}; raise the limit to proceed"
        )
    objects = sorted(_ENUMERATORS[model](n), key=serialize)
    return iter(objects)


def hetyei_pair_count(n: int, limit: int | None = DEFAULT_PAIR_COUNT_LIMIT) -> int:
    """Count coordinate tuples ((a_i), (b_i)), a_i in [0, i], b_i in [i],
    whose entries cover [n].

    Counts by backtracking from position n down to 1 with an
    uncovered-values bound: position i contributes values <= i only, so a
    branch dies once a value >= i is uncovered below position i, or once
    the uncovered values outnumber the remaining slots.  The total equals
    median_genocchi(n).  Guarded (default n <= 5) because the tree grows
    factorially in n.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if limit is not None and n > limit:
        raise ResourceGuardError(
            f"order {n} exceeds the pair-count guard {limit}; raise the limit to proceed"
        )
    full = (1 << n) - 1

    def count(i: int, covered: int) -> int:
        if i == 0:
            return 1 if covered == full else 0
        cap = 2 * (i - 1)  # entries still to come below this position
        total = 0
        for a in range(i + 1):
            ca = covered | (1 << (a - 1) if a else 0)
            for b in range(1, i + 1):
                cb = ca | 1 << (b - 1)
                left = full & ~cb
                # positions below i only provide values < i
                if left >> (i - 1) or left.bit_count() > cap:
                    continue
                total += count(i - 1, cb)
        return total

    return count(n, 0)
