"""Forward-motion encoding of gap-condition partitions.

A partition satisfying the gap conditions (difference >= 3, and >= 6 when
both parts are multiples of 3) is built from a minimal configuration by
three waves of motions: the m singletons move first (largest first, each
by a non-negative amount, weakly increasing toward the top), then the
floor(n2/2) pairs split off the top of the 2 mod 3 chain, then the
floor(n1/2) pairs off the 1 mod 3 chain.  Each pair step adds exactly 6
to the size and advances the pair bottom by 3(1 + number of crossed
parts).  `apply_motions` plays the motions forward, `decode` inverts
them, and `certify_range` sweeps every budget up to a size bound and
checks the two against brute-force enumeration.

The crossing rules are keyed on part values, not on the role (singleton
or chain member) a part had at dock time; runs of one or two chain parts
are crossed by the same rules as one or two singletons, and only runs of
three or more get the dedicated chain rule.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Any, Iterator

from .partitions import Partition, enumerate_schur, is_schur_admissible
from .schur_sums import weight_a


class MotionRuleError(RuntimeError):
    """No forwards motion applies to the pair in the current state.

    The offending state is reported verbatim so uncovered configurations
    can be inspected rather than silently patched over.
    """

    def __init__(self, family: int, bottom: int, state: tuple[int, ...]):
        self.family = family
        self.bottom = bottom
        self.state = state
        super().__init__(
            "no forwards motion applies: family=%d pair=(%d,%d) state=%s"
            % (family, bottom, bottom + 3, state))


class DecodeError(ValueError):
    """The partition has no (or no unique) motion pre-image."""


@dataclass(frozen=True)
class MinimalConfig:
    """Chain lengths and singleton count of a minimal configuration."""
    n1: int
    n2: int
    m: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.m < 0:
            raise ValueError("chain lengths and singleton count must be >= 0")

    def partition(self) -> Partition:
        return minimal_configuration(self.n1, self.n2, self.m)

    @property
    def size(self) -> int:
        return weight_a(self.n1, self.n2, self.m)


def minimal_configuration(n1: int, n2: int, m: int) -> Partition:
    """n1 consecutive 1 mod 3 parts, then n2 consecutive 2 mod 3 parts,
    then m parts exactly 4 apart; the unique smallest admissible
    partition with these block sizes, of size weight_a(n1, n2, m)."""
    if n1 < 0 or n2 < 0 or m < 0:
        raise ValueError("chain lengths and singleton count must be >= 0")
    parts = [3 * i + 1 for i in range(n1)]
    parts += [3 * n1 + 2 + 3 * i for i in range(n2)]
    base = 3 * (n1 + n2) + 3
    parts += [base + 4 * i for i in range(m)]
    out = tuple(parts)
    assert sum(out) == weight_a(n1, n2, m)
    return out


@dataclass(frozen=True)
class MotionData:
    """A minimal configuration plus its motion budgets.

    r[i] is the forward displacement of the (i+1)-th smallest singleton,
    rho2[j] / rho1[j] the step count of the (j+1)-th smallest pair of the
    2 mod 3 / 1 mod 3 chain.  All three lists are weakly increasing, so
    the top mover always moves the most.
    """
    n1: int
    n2: int
    m: int
    r: tuple[int, ...] = ()
    rho2: tuple[int, ...] = ()
    rho1: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "rho2", tuple(self.rho2))
        object.__setattr__(self, "rho1", tuple(self.rho1))
        if self.n1 < 0 or self.n2 < 0 or self.m < 0:
            raise ValueError("chain lengths and singleton count must be >= 0")
        for name, lst, want in (("r", self.r, self.m),
                                ("rho2", self.rho2, self.n2 // 2),
                                ("rho1", self.rho1, self.n1 // 2)):
            if len(lst) != want:
                raise ValueError("%s must have length %d" % (name, want))
            if any(v < 0 for v in lst):
                raise ValueError("%s entries must be >= 0" % name)
            if any(a > b for a, b in zip(lst, lst[1:])):
                raise ValueError("%s must be weakly increasing" % name)

    @property
    def config(self) -> MinimalConfig:
        return MinimalConfig(self.n1, self.n2, self.m)

    @property
    def size(self) -> int:
        return (weight_a(self.n1, self.n2, self.m) + sum(self.r)
                + 6 * (sum(self.rho2) + sum(self.rho1)))

    def as_dict(self) -> dict[str, Any]:
        return {"n1": self.n1, "n2": self.n2, "m": self.m,
                "r": list(self.r), "rho2": list(self.rho2),
                "rho1": list(self.rho1)}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "MotionData":
        try:
            return cls(n1=int(d["n1"]), n2=int(d["n2"]), m=int(d["m"]),
                       r=tuple(int(v) for v in d.get("r", ())),
                       rho2=tuple(int(v) for v in d.get("rho2", ())),
                       rho1=tuple(int(v) for v in d.get("rho1", ())))
        except KeyError as exc:
            raise ValueError("motion data needs n1, n2, m") from exc


# ---------------------------------------------------------------------------
# forward motions

def _advance_pair(state: list[int], bottom: int, strict: bool) -> int:
    """Apply one forwards motion to the pair (bottom, bottom+3) inside
    state (a sorted list, mutated in place).  Returns the new bottom.

    Rule order: the free motion if nothing sits within [top+3, top+5],
    otherwise the smallest crossing (one part, two parts, three parts,
    then the long-run rule for 1 mod 3 pairs) whose outcome satisfies
    the gap conditions.  Raises MotionRuleError when nothing applies.
    """
    top = bottom + 3
    family = bottom % 3
    before = tuple(state)
    blockers = [z for z in state if top + 3 <= z <= top + 5]

    candidates: list[tuple[list[int], int, int]] = []
    if not blockers:
        moved = [z for z in state if z != bottom and z != top]
        moved += [bottom + 3, top + 3]
        moved.sort()
        candidates.append((moved, bottom + 3, 0))
    else:
        u = blockers[0]
        above = [z for z in state if z > u]
        # one crossed part
        moved = [z for z in state if z not in (bottom, top, u)]
        moved += [u - 6, bottom + 6, top + 6]
        moved.sort()
        candidates.append((moved, bottom + 6, 1))
        # two crossed parts
        if above and top + 7 <= above[0] <= top + 9 \
                and (above[0] - (top + 7)) - (u - (top + 3)) <= 1:
            w = above[0]
            moved = [z for z in state if z not in (bottom, top, u, w)]
            moved += [u - 6, w - 6, bottom + 9, top + 9]
            moved.sort()
            candidates.append((moved, bottom + 9, 2))
            # three crossed parts
            if u <= top + 4 and w <= top + 8 and len(above) >= 2 \
                    and top + 11 <= above[1] <= top + 12 \
                    and (above[1] - (top + 11)) - (w - (top + 7)) <= 1:
                x = above[1]
                moved = [z for z in state if z not in (bottom, top, u, w, x)]
                moved += [u - 6, w - 6, x - 6, bottom + 12, top + 12]
                moved.sort()
                candidates.append((moved, bottom + 12, 3))
        # a long run of consecutive 2 mod 3 parts, 1 mod 3 pairs only
        if family == 1 and u == top + 4:
            run = 1
            while top + 4 + 3 * run in state:
                run += 1
            if run >= 3:
                crossed = [top + 4 + 3 * i for i in range(run)]
                moved = [z for z in state
                         if z not in crossed and z not in (bottom, top)]
                moved += [z - 6 for z in crossed]
                moved += [bottom + 3 * (run + 1), top + 3 * (run + 1)]
                moved.sort()
                candidates.append((moved, bottom + 3 * (run + 1), run))

    for moved, new_bottom, crossed in candidates:
        if not is_schur_admissible(tuple(moved)):
            continue
        assert sum(moved) == sum(before) + 6
        assert new_bottom - bottom == 3 * (1 + crossed)
        if strict:
            assert len(moved) == len(before)
        state[:] = moved
        return new_bottom
    raise MotionRuleError(family, bottom, before)


def apply_motions(data: MotionData, strict: bool = False) -> Partition:
    """Play the motion budgets forward from the minimal configuration.

    Singletons move first (largest first), then the 2 mod 3 pairs (top
    pair first), then the 1 mod 3 pairs.  With strict=True every
    intermediate state is re-checked against the gap conditions; the
    per-step size and displacement contracts are asserted regardless.
    """
    state = list(minimal_configuration(data.n1, data.n2, data.m))
    base = 3 * (data.n1 + data.n2)
    for i in range(data.m, 0, -1):
        ri = data.r[i - 1]
        if ri:
            dock = base + 3 + 4 * (i - 1)
            state.remove(dock)
            insort(state, dock + ri)
        if strict:
            assert is_schur_admissible(tuple(state))
    assert sum(state) == weight_a(data.n1, data.n2, data.m) + sum(data.r)

    for family, chain_base, count, steps_list in (
            (2, 3 * data.n1 + 2, data.n2, data.rho2),
            (1, 1, data.n1, data.rho1)):
        k = count // 2
        for j in range(1, k + 1):
            bottom = chain_base + 3 * (count - 2 * j)
            for _ in range(steps_list[k - j]):
                bottom = _advance_pair(state, bottom, strict)
                if strict:
                    assert is_schur_admissible(tuple(state))
    result = tuple(state)
    assert sum(result) == data.size
    return result


# ---------------------------------------------------------------------------
# inverse motions

def _replay_matches(pre: list[int], pre_bottom: int,
                    post: tuple[int, ...], post_bottom: int) -> bool:
    # A pre-state is only accepted if the forward rules, with their own
    # precedence, reproduce the post-state exactly.
    probe = list(pre)
    try:
        nb = _advance_pair(probe, pre_bottom, strict=False)
    except MotionRuleError:
        return False
    return nb == post_bottom and tuple(probe) == post


def _unstep_candidates(state: list[int], bottom: int) -> Iterator[tuple[list[int], int]]:
    """All (pre_state, pre_bottom) whose forward step reproduces state."""
    post = tuple(state)
    top = bottom + 3
    in_state = set(state)

    def others(*removed: int) -> list[int]:
        return [z for z in state if z not in removed]

    # free motion undone
    pre = others(bottom, top) + [bottom - 3, top - 3]
    pre.sort()
    if is_schur_admissible(tuple(pre)) and _replay_matches(pre, bottom - 3, post, bottom):
        yield pre, bottom - 3
    # one part crossed
    for z in state:
        if bottom - 6 <= z <= bottom - 4:
            pre = others(bottom, top, z) + [z + 6, bottom - 6, top - 6]
            pre.sort()
            if is_schur_admissible(tuple(pre)) and _replay_matches(pre, bottom - 6, post, bottom):
                yield pre, bottom - 6
    # two parts crossed
    z1s = [z for z in state if bottom - 9 <= z <= bottom - 7]
    z2s = [z for z in state if bottom - 5 <= z <= bottom - 3]
    for z1 in z1s:
        for z2 in z2s:
            pre = others(bottom, top, z1, z2) + [z1 + 6, z2 + 6, bottom - 9, top - 9]
            pre.sort()
            if is_schur_admissible(tuple(pre)) and _replay_matches(pre, bottom - 9, post, bottom):
                yield pre, bottom - 9
    # three parts crossed
    z1s = [z for z in state if bottom - 12 <= z <= bottom - 11]
    z2s = [z for z in state if bottom - 8 <= z <= bottom - 7]
    z3s = [z for z in state if bottom - 4 <= z <= bottom - 3]
    for z1 in z1s:
        for z2 in z2s:
            for z3 in z3s:
                pre = others(bottom, top, z1, z2, z3) \
                    + [z1 + 6, z2 + 6, z3 + 6, bottom - 12, top - 12]
                pre.sort()
                if is_schur_admissible(tuple(pre)) and _replay_matches(pre, bottom - 12, post, bottom):
                    yield pre, bottom - 12
    # a long run crossed (1 mod 3 pairs only)
    if bottom % 3 == 1:
        run = 0
        while bottom - 5 - 3 * run in in_state:
            run += 1
        for l in range(3, run + 1):
            crossed = [bottom - 5 - 3 * i for i in range(l)]
            pre = others(bottom, top, *crossed) + [z + 6 for z in crossed]
            pre += [bottom - 3 * (l + 1), top - 3 * (l + 1)]
            pre.sort()
            if is_schur_admissible(tuple(pre)) and _replay_matches(pre, bottom - 3 * (l + 1), post, bottom):
                yield pre, bottom - 3 * (l + 1)


def _unwind_pairs(state: list[int], pair_bottoms: list[int],
                  docks: list[int]) -> Iterator[tuple[list[int], tuple[int, ...]]]:
    """Backtracking search over inverse motions for one family.

    pair_bottoms and docks are aligned, lowest pair first (the last pair
    to have moved forward, so the first to be undone).  Yields every
    (state_after_unwinding, step_counts) reachable; step counts come out
    lowest pair first and must be weakly increasing to be consistent
    with the forward ordering.
    """
    if not pair_bottoms:
        yield list(state), ()
        return
    bottom, dock = pair_bottoms[0], docks[0]

    def dfs(cur: list[int], b: int, steps: int) -> Iterator[tuple[list[int], int]]:
        # forward motion strictly raises the bottom, so reaching the dock
        # pins the step count; below the dock is unreachable
        if b == dock:
            yield list(cur), steps
            return
        if b < dock:
            return
        for pre, pre_b in _unstep_candidates(cur, b):
            yield from dfs(pre, pre_b, steps + 1)

    for unwound, sigma in dfs(list(state), bottom, 0):
        for rest_state, rest_sigmas in _unwind_pairs(unwound, pair_bottoms[1:], docks[1:]):
            combined = (sigma,) + rest_sigmas
            if all(a <= b for a, b in zip(combined, combined[1:])):
                yield rest_state, combined


def _pair_labelings(values: list[int], k: int, reserved: int | None) -> Iterator[list[int]]:
    """Choose k disjoint (v, v+3) pairs among same-residue values; yields
    the list of pair bottoms, ascending.  reserved is a value that must
    stay unpaired (the immobile chain remainder), or None."""
    usable = [v for v in values if v != reserved]

    def rec(idx: int, need: int, acc: list[int]) -> Iterator[list[int]]:
        if need == 0:
            yield list(acc)
            return
        if idx >= len(usable):
            return
        # pair usable[idx] with its +3 neighbor if present
        v = usable[idx]
        if idx + 1 < len(usable) and usable[idx + 1] == v + 3:
            acc.append(v)
            yield from rec(idx + 2, need - 1, acc)
            acc.pop()
        # or leave it as a singleton
        yield from rec(idx + 1, need, acc)

    yield from rec(0, k, [])


def decode(partition: Partition, strict: bool = False) -> MotionData:
    """Invert apply_motions: recover the unique motion data whose forward
    replay produces the given admissible partition.

    Every candidate split into chain lengths, pair labelings, and
    inverse-motion paths is explored; each survivor is gated by a full
    forward replay, and more than one distinct survivor is an error (as
    is none).
    """
    p = tuple(partition)
    if not is_schur_admissible(p):
        raise ValueError("partition violates the gap conditions: %s" % (p,))
    n = len(p)
    size = sum(p)
    pset = set(p)
    zeros = sum(1 for v in p if v % 3 == 0)

    found: list[MotionData] = []
    for n1 in range(n + 1):
        for n2 in range(n + 1 - n1):
            m = n - n1 - n2
            if weight_a(n1, n2, m) > size or zeros > m:
                continue
            rem1 = 1 if n1 % 2 else None
            rem2 = 3 * n1 + 2 if n2 % 2 else None
            # the low chain remainder has nothing beneath it and stays
            # put; the high one can be crossed by lower pairs, dropping
            # 6 per crossing, so only its residue and a ceiling survive
            if rem1 is not None and rem1 not in pset:
                continue
            if rem2 is not None and not any(
                    v <= rem2 and v % 6 == rem2 % 6 for v in p):
                continue
            res1 = [v for v in p if v % 3 == 1]
            res2 = [v for v in p if v % 3 == 2]
            k1, k2 = n1 // 2, n2 // 2
            have1 = len(res1) - (rem1 is not None)
            have2 = len(res2) - (rem2 is not None)
            if have1 < 2 * k1 or have2 < 2 * k2:
                continue
            for bottoms1 in _pair_labelings(res1, k1, rem1):
                for d in _decode_labeled(p, n1, n2, m, bottoms1, rem2):
                    if apply_motions(d, strict=strict) == p:
                        found.append(d)
    distinct = set(found)
    if not distinct:
        raise DecodeError("no motion pre-image for %s" % (p,))
    if len(distinct) > 1:
        raise DecodeError("ambiguous motion pre-image for %s: %s"
                          % (p, [d.as_dict() for d in sorted(distinct, key=repr)]))
    return found[0]


def _decode_labeled(p: Partition, n1: int, n2: int, m: int,
                    bottoms1: list[int], rem2: int | None) -> Iterator[MotionData]:
    k1, k2 = n1 // 2, n2 // 2
    docks1 = [3 * (n1 - 2 * j) + 1 for j in range(k1, 0, -1)]
    docks2 = [3 * (n1 + n2 - 2 * j) + 2 for j in range(k2, 0, -1)]
    chain = set(range(1, 3 * n1 - 2 + 1, 3)) if n1 else set()
    chain |= set(range(3 * n1 + 2, 3 * (n1 + n2 - 1) + 2 + 1, 3)) if n2 else set()
    base = 3 * (n1 + n2)

    # 1 mod 3 pairs were the last to move forward, so they unwind first.
    # Their crossings can have displaced whole 2 mod 3 pairs, so those
    # pairs are only identified afterwards, in the intermediate state.
    for state1, rho1 in _unwind_pairs(list(p), sorted(bottoms1), docks1):
        res2 = [v for v in state1 if v % 3 == 2]
        for bottoms2 in _pair_labelings(res2, k2, rem2):
            for state0, rho2 in _unwind_pairs(state1, sorted(bottoms2), docks2):
                if not chain <= set(state0):
                    continue
                singles = sorted(v for v in state0 if v not in chain)
                if len(singles) != m:
                    continue
                r = tuple(v - (base + 3 + 4 * i) for i, v in enumerate(singles))
                if any(v < 0 for v in r):
                    continue
                if any(a > b for a, b in zip(r, r[1:])):
                    continue
                yield MotionData(n1, n2, m, r=r, rho2=rho2, rho1=rho1)


# ---------------------------------------------------------------------------
# bounds and sweeps

def max_motions(config: MinimalConfig, N: int) -> dict[str, int | None]:
    """Largest admissible motion values under a largest-part bound N:
    caps for the top singleton displacement and for any single pair's
    step count, or None for an absent component.  A negative cap means
    the component cannot fit under the bound at all."""
    if N < 0:
        raise ValueError("largest-part bound must be >= 0")
    n1, n2, m = config.n1, config.n2, config.m
    r_cap = N - (3 * (n1 + n2) + 3 + 4 * (m - 1)) if m else None
    rho2_cap = (N - (3 * (n1 + n2 - 1) + 2)) // 3 - m if n2 >= 2 else None
    rho1_cap = (N - (3 * (n1 - 1) + 1)) // 3 - m - n2 if n1 >= 2 else None
    return {"r": r_cap, "rho2": rho2_cap, "rho1": rho1_cap}


def _weakly_increasing(count: int, total: int,
                       max_value: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly increasing tuples of the given length, entries >= 0, sum
    <= total, optionally with entries <= max_value."""
    if total < 0 or (max_value is not None and max_value < 0 and count > 0):
        return

    def rec(left: int, budget: int, lo: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield tuple(acc)
            return
        hi = budget // left
        if max_value is not None:
            hi = min(hi, max_value)
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(left - 1, budget - v, v, acc)
            acc.pop()

    yield from rec(count, total, 0, [])


def enumerate_motion_data(max_size: int,
                          largest_part: int | None = None) -> Iterator[MotionData]:
    """All motion data whose resulting partition has size <= max_size;
    with largest_part given, also restrict every budget to the caps of
    max_motions, which bounds the resulting largest part."""
    n1 = 0
    while weight_a(n1, 0, 0) <= max_size:
        n2 = 0
        while weight_a(n1, n2, 0) <= max_size:
            m = 0
            while True:
                a = weight_a(n1, n2, m)
                if a > max_size:
                    break
                if largest_part is not None:
                    caps = max_motions(MinimalConfig(n1, n2, m), largest_part)
                    # immobile chain remainders are not covered by any cap
                    if (n1 % 2 and largest_part < 1) or \
                            (n2 % 2 and largest_part < 3 * n1 + 2):
                        m += 1
                        continue
                else:
                    caps = {"r": None, "rho2": None, "rho1": None}
                budget = max_size - a
                for r in _weakly_increasing(m, budget, caps["r"]):
                    left = budget - sum(r)
                    for rho2 in _weakly_increasing(n2 // 2, left // 6, caps["rho2"]):
                        left2 = left - 6 * sum(rho2)
                        for rho1 in _weakly_increasing(n1 // 2, left2 // 6, caps["rho1"]):
                            yield MotionData(n1, n2, m, r, rho2, rho1)
                m += 1
            n2 += 1
        n1 += 1


def certify_range(max_size: int, strict: bool = True) -> dict[str, Any]:
    """Encode every motion budget with size <= max_size, then check the
    round trip: results are admissible and pairwise distinct, they cover
    exactly the brute-force admissible set, and decode returns the exact
    budgets.  Returns a summary; the first failure is described instead
    of raised so sweeps can be reported."""
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    image: dict[Partition, MotionData] = {}
    for data in enumerate_motion_data(max_size):
        try:
            result = apply_motions(data, strict=strict)
        except MotionRuleError as exc:
            return {"max_size": max_size, "status": "failed",
                    "failure": {"kind": "no-rule", "data": data.as_dict(),
                                "detail": str(exc)}}
        if not is_schur_admissible(result):
            return {"max_size": max_size, "status": "failed",
                    "failure": {"kind": "inadmissible-image",
                                "data": data.as_dict(),
                                "partition": list(result)}}
        if result in image:
            return {"max_size": max_size, "status": "failed",
                    "failure": {"kind": "collision", "data": data.as_dict(),
                                "other": image[result].as_dict(),
                                "partition": list(result)}}
        image[result] = data

    expected = {p for rows in enumerate_schur(max_size).values() for p in rows}
    missing = expected - set(image)
    extra = set(image) - expected
    if missing or extra:
        return {"max_size": max_size, "status": "failed",
                "failure": {"kind": "coverage",
                            "missing": sorted(missing)[:5],
                            "extra": sorted(extra)[:5]}}

    for result, data in image.items():
        try:
            back = decode(result, strict=False)
        except DecodeError as exc:
            return {"max_size": max_size, "status": "failed",
                    "failure": {"kind": "decode", "partition": list(result),
                                "detail": str(exc)}}
        if back != data:
            return {"max_size": max_size, "status": "failed",
                    "failure": {"kind": "round-trip",
                                "partition": list(result),
                                "encoded": data.as_dict(),
                                "decoded": back.as_dict()}}

    return {"max_size": max_size, "status": "verified",
            "partitions": len(image), "failure": None}
