"""Bijections, involutions, and order reductions between the five families.

Everything here preserves or transports the (k, l) statistics in a
controlled way:

    chain_to_settuple / settuple_to_chain   k -> k, l -> l
    phi / phi_inverse (chain <-> hetyei)    k -> k, l -> l
    involution_t (pd2n, dellac, settuple)   (k, l) -> (l, k)
    involution_r (pd2n, dellac, settuple)   (k, l) -> (n+1-l, n+1-k)
    reduce / lift                           l = n objects <-> order n-1
    embed_permutation                       S_n into the singleton settuples

The chain <-> pair-tuple bijection phi walks k = 1 .. n and maintains a
pool: a sequence L_k listing [n] minus I_k, started at L_0 = (n, .., 1).
Step k consumes the pair slot at position n-k+1 and updates the pool:

  growth step, I_k = I_{k-1} + {j_p} (j_p = p-th pool entry):
      pair = {p, p} if k is already in I_{k-1}, else {p, n-k+1};
      the pool's last entry moves into the vacated position p and the pool
      shrinks by one (pure truncation when p is the last position).
  swap step, I_k = (I_{k-1} - {k}) + {j_p, j_q}, p < q:
      pair = {p, q}; the last entry moves into position p, k moves into
      position q, and the pool shrinks by one (when q is the last
      position, k moves into position p instead).

phi_inverse replays the pairs from slot n down to slot 1.  A slot whose
pair {u, v} has u = v, or whose position n-k+1 never occurs among the
already-replayed pairs, is a growth step (the pair is then {p, p} or
{p, n-k+1}, which pins p); every other slot is a swap step with
{p, q} = {u, v}.  The pool invariant (pool contents = complement of the
current subset) is asserted at every step and any violation aborts with
the step number and pool, since it can only mean an implementation bug.
"""

from __future__ import annotations

from functools import singledispatch
from itertools import chain as _chain
from typing import Sequence

from .models import (
    DellacConfiguration,
    DumontPermutation,
    FeiginChain,
    HetyeiTuple,
    ModelInvariantError,
    SetTuple,
    k_statistic,
    l_statistic,
)

__all__ = [
    "chain_to_settuple",
    "settuple_to_chain",
    "closed_form_chain",
    "phi",
    "phi_trace",
    "phi_inverse",
    "involution_t",
    "involution_r",
    "reduce",
    "lift",
    "embed_permutation",
]


# ---------------------------------------------------------------------------
# chain <-> settuple


def chain_to_settuple(chain: FeiginChain) -> SetTuple:
    """S_i = I_i minus I_{i-1}."""
    sets = chain.sets()
    parts = tuple(
        tuple(sorted(sets[i] - sets[i - 1])) for i in range(1, chain.n + 1)
    )
    return SetTuple(chain.n, parts)


def settuple_to_chain(s: SetTuple) -> FeiginChain:
    """Rebuild the chain: grow by S_i, dropping i first whenever #S_i = 2."""
    cur: set[int] = set()
    acc: list[tuple[int, ...]] = [()]
    for i, part in enumerate(s.sets, 1):
        if len(part) == 2:
            if i not in cur:
                raise ModelInvariantError(
                    f"set {i} has two elements but {i} is absent from I_{i - 1}"
                )
            cur.discard(i)
        cur.update(part)
        acc.append(tuple(sorted(cur)))
    return FeiginChain(s.n, tuple(acc))


def closed_form_chain(s: SetTuple) -> FeiginChain:
    """Direct expression for the same chain, used as a cross-check:

    I_i = union of S_1..S_i, minus the values j <= i whose two occurrence
    positions straddle i.
    """
    n = s.n
    positions = {v: [j for j, part in enumerate(s.sets, 1) if v in part] for v in range(1, n + 1)}
    acc: list[tuple[int, ...]] = [()]
    for i in range(1, n + 1):
        members = set(_chain.from_iterable(s.sets[:i]))
        for j in range(1, i + 1):
            pos = positions[j]
            if len(pos) == 2 and pos[0] < i < pos[1]:
                members.discard(j)
        acc.append(tuple(sorted(members)))
    return FeiginChain(n, tuple(acc))


# ---------------------------------------------------------------------------
# phi: chains <-> pair tuples


def _grow_pool(pool: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = list(pool)
    out[p - 1] = out[-1]  # no-op when p is the last position
    out.pop()
    return tuple(out)


def _swap_pool(pool: tuple[int, ...], p: int, q: int, k: int) -> tuple[int, ...]:
    out = list(pool)
    if q == len(out):
        out[p - 1] = k
    else:
        out[p - 1] = out[-1]
        out[q - 1] = k
    out.pop()
    return tuple(out)


def _check_pool(pool: tuple[int, ...], members: frozenset[int], n: int, k: int) -> None:
    if set(pool) != set(range(1, n + 1)) - members or len(pool) != n - k:
        raise RuntimeError(
            f"pool invariant broken at step {k}: pool={pool}, subset={sorted(members)}"
        )


def phi_trace(chain: FeiginChain) -> tuple[HetyeiTuple, tuple[tuple[int, ...], ...]]:
    """phi plus its intermediate pools (L_0, L_1, .., L_n)."""
    n = chain.n
    sets = chain.sets()
    pool = tuple(range(n, 0, -1))
    pools = [pool]
    pairs: list[tuple[int, int]] = [(0, 0)] * n
    for k in range(1, n + 1):
        prev, cur = sets[k - 1], sets[k]
        slot = n - k + 1
        if prev <= cur:
            (added,) = cur - prev
            p = pool.index(added) + 1
            pairs[slot - 1] = (p, p) if k in prev else tuple(sorted((p, slot)))
            pool = _grow_pool(pool, p)
        else:
            x, y = cur - (prev - {k})
            p, q = sorted((pool.index(x) + 1, pool.index(y) + 1))
            pairs[slot - 1] = (p, q)
            pool = _swap_pool(pool, p, q, k)
        _check_pool(pool, cur, n, k)
        pools.append(pool)
    return HetyeiTuple(n, tuple(pairs)), tuple(pools)


def phi(chain: FeiginChain) -> HetyeiTuple:
    """The chain -> pair-tuple bijection; preserves k and l."""
    return phi_trace(chain)[0]


def phi_inverse(m: HetyeiTuple) -> FeiginChain:
    """Inverse of phi, replaying pair slots from n down to 1."""
    n = m.n
    pool = tuple(range(n, 0, -1))
    cur: set[int] = set()
    acc: list[tuple[int, ...]] = [()]
    replayed: set[int] = set()
    for k in range(1, n + 1):
        slot = n - k + 1
        u, v = m.pairs[slot - 1]
        if u == v or slot not in replayed:
            # growth step: the pair must be {p, p} or {p, slot}
            if u != v and v != slot:
                raise RuntimeError(
                    f"pair ({u},{v}) at slot {slot} fits no growth form; tuple is corrupt"
                )
            p = u
            added = pool[p - 1]
            if added in cur:
                raise RuntimeError(f"replay error at step {k}: {added} already present")
            cur.add(added)
            pool = _grow_pool(pool, p)
        else:
            if k not in cur:
                raise RuntimeError(
                    f"swap step at slot {slot} but {k} is absent from the subset"
                )
            x, y = pool[u - 1], pool[v - 1]
            cur.discard(k)
            cur.update((x, y))
            pool = _swap_pool(pool, u, v, k)
        _check_pool(pool, frozenset(cur), n, k)
        replayed.update((u, v))
        acc.append(tuple(sorted(cur)))
    return FeiginChain(n, tuple(acc))


# ---------------------------------------------------------------------------
# involutions


@singledispatch
def involution_t(obj):
    """Exchange the two statistics: maps a (k, l) object to an (l, k) object."""
    raise TypeError(f"involution_t is not defined for {type(obj).__name__}")


@involution_t.register
def _(obj: DumontPermutation) -> DumontPermutation:
    k, l = k_statistic(obj), l_statistic(obj)
    if k == l:
        return obj
    cycle = {2 * k: 2 * l, 2 * l: 2 * l + 1, 2 * l + 1: 2 * k + 1, 2 * k + 1: 2 * k}
    return DumontPermutation(obj.n, tuple(cycle.get(v, v) for v in obj.word))


@involution_t.register
def _(obj: DellacConfiguration) -> DellacConfiguration:
    # swap the dots of rows n and n+1
    cols = list(obj.row_columns)
    cols[obj.n - 1], cols[obj.n] = cols[obj.n], cols[obj.n - 1]
    return DellacConfiguration(obj.n, tuple(cols))


@involution_t.register
def _(obj: SetTuple) -> SetTuple:
    swap = {1: obj.n, obj.n: 1}
    parts = tuple(
        tuple(sorted(swap.get(v, v) for v in part)) for part in obj.sets
    )
    return SetTuple(obj.n, parts)


@singledispatch
def involution_r(obj):
    """Half-turn symmetry: maps a (k, l) object to an (n+1-l, n+1-k) object."""
    raise TypeError(f"involution_r is not defined for {type(obj).__name__}")


@involution_r.register
def _(obj: DumontPermutation) -> DumontPermutation:
    # sigma^r(i) = 2n+3 - sigma(2n+3-i)
    m = 2 * obj.n + 3
    return DumontPermutation(obj.n, tuple(m - v for v in reversed(obj.word)))


@involution_r.register
def _(obj: DellacConfiguration) -> DellacConfiguration:
    # half-turn of the board: the dot (j, i) moves to (n+1-j, 2n+1-i)
    n = obj.n
    return DellacConfiguration(n, tuple(n + 1 - c for c in reversed(obj.row_columns)))


@involution_r.register
def _(obj: SetTuple) -> SetTuple:
    n = obj.n
    parts = tuple(
        tuple(sorted(n + 1 - v for v in part)) for part in reversed(obj.sets)
    )
    return SetTuple(n, parts)


# ---------------------------------------------------------------------------
# order reduction and lift


@singledispatch
def reduce(obj):
    """Strip an l = n object down to order n-1 (defined for n >= 2)."""
    raise TypeError(f"reduce is not defined for {type(obj).__name__}")


def _require_primed(obj, l: int) -> None:
    if l != obj.n:
        raise ModelInvariantError(
            f"reduce needs l = n, but this object has l = {l} at order {obj.n}"
        )
    if obj.n < 2:
        raise ModelInvariantError("order 0 objects are not representable; need n >= 2")


@reduce.register
def _(obj: DumontPermutation) -> DumontPermutation:
    _require_primed(obj, l_statistic(obj))
    # positions 2n+1, 2n+2 then necessarily hold 2n+2, 2n+1
    return DumontPermutation(obj.n - 1, obj.word[: 2 * obj.n])


@reduce.register
def _(obj: DellacConfiguration) -> DellacConfiguration:
    _require_primed(obj, l_statistic(obj))
    n = obj.n
    # column n holds exactly the dots of rows n and 2n; drop them with it
    cols = tuple(c for i, c in enumerate(obj.row_columns, 1) if i not in (n, 2 * n))
    return DellacConfiguration(n - 1, cols)


@reduce.register
def _(obj: SetTuple) -> SetTuple:
    _require_primed(obj, l_statistic(obj))
    # l = n forces S_n = {n}
    return SetTuple(obj.n - 1, obj.sets[:-1])


@singledispatch
def lift(obj):
    """Inverse of reduce: embed an order n-1 object as an l = n object of order n."""
    raise TypeError(f"lift is not defined for {type(obj).__name__}")


@lift.register
def _(obj: DumontPermutation) -> DumontPermutation:
    m = 2 * obj.n + 2
    return DumontPermutation(obj.n + 1, obj.word + (m + 2, m + 1))


@lift.register
def _(obj: DellacConfiguration) -> DellacConfiguration:
    n = obj.n + 1
    old = obj.row_columns
    cols = old[: n - 1] + (n,) + old[n - 1 :] + (n,)
    return DellacConfiguration(n, cols)


@lift.register
def _(obj: SetTuple) -> SetTuple:
    n = obj.n + 1
    return SetTuple(n, obj.sets + ((n,),))


def embed_permutation(word: Sequence[int]) -> SetTuple:
    """Embed a permutation word of [n] as the singleton tuple ({w_1}, .., {w_n}).

    The image is exactly the set of settuples whose parts are all singletons.
    """
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ModelInvariantError(f"{tuple(word)} is not a permutation of 1..{n}")
    return SetTuple(n, tuple((v,) for v in word))
