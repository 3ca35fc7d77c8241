"""Feasible-valence intervals and constructions that realize every value in them.

For a crown over an odd cycle of length m with n pendants per core vertex the
super-edge-magic interval is [(3+5m)/2 + 2mn, (3+5m)/2 + 3mn] and the full
magic interval is [(3+5m)/2 + 2mn, (3+7m)/2 + 4mn].  When m is the product of
two distinct odd primes every integer in both intervals is realized: shifted
canonical labelings cover all non-exceptional shifts, the composite-cycle
labeling rescues one exceptional family, and complements plus the odd/even
doubling transforms fill the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arithmetic import bounded_bezout, is_odd_prime
from .exceptions import (
    CoverConstructionError,
    CrownMagicError,
    EmptyInterval,
    InvalidInput,
)
from .graph_core import CrownSpec, Digraph, Graph, build_crown, is_single_cycle, underlying
from .labeling import (
    TotalLabeling,
    canonical_cycle,
    em_complement,
    extend_sem,
    odd_even,
    sem_complement,
)
from .product import (
    ArcAssignment,
    induced_product_labeling,
    product_cycle_labeling,
    star_member,
)
from .translation import gcd_exception, sign_for_shift, translated_labeling

SEM = "sem"
EM = "em"


@dataclass(frozen=True)
class MagicInterval:
    """Closed integer interval of feasible valences."""

    lo: int
    hi: int
    mode: str

    def __post_init__(self):
        if self.lo > self.hi:
            raise EmptyInterval(f"interval [{self.lo}, {self.hi}] is empty")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    def values(self) -> range:
        return range(self.lo, self.hi + 1)


def _interval_from_weights(weights: list[int], labels: range, q: int, mode: str) -> MagicInterval:
    ws = sorted(weights, reverse=True)
    asc = list(labels)
    lo_dot = sum(w * lab for w, lab in zip(ws, asc))
    hi_dot = sum(w * lab for w, lab in zip(ws, reversed(asc)))
    lo = -((-lo_dot) // q)
    hi = hi_dot // q
    if lo > hi:
        raise EmptyInterval(f"no integer valence is feasible ({lo_dot}/{q} .. {hi_dot}/{q})")
    return MagicInterval(lo, hi, mode)


def sem_interval(g: Graph) -> MagicInterval:
    """Exact [ceil(min), floor(max)] of the vertex-side valence average.

    The free part is the pairing of degrees with vertex labels 1..p; edge
    labels p+1..p+q contribute a constant.
    """
    if g.size == 0:
        raise InvalidInput("interval needs at least one edge")
    p, q = g.order, g.size
    degs = list(g.degrees().values())
    edge_const = q * (2 * p + q + 1) // 2
    ws = sorted(degs, reverse=True)
    lo_dot = sum(w * lab for w, lab in zip(ws, range(1, p + 1))) + edge_const
    hi_dot = sum(w * lab for w, lab in zip(ws, range(p, 0, -1))) + edge_const
    lo = -((-lo_dot) // q)
    hi = hi_dot // q
    if lo > hi:
        raise EmptyInterval(f"no integer valence is feasible ({lo_dot}/{q} .. {hi_dot}/{q})")
    return MagicInterval(lo, hi, SEM)


def em_interval(g: Graph) -> MagicInterval:
    """Exact [ceil(min), floor(max)] over total bijections: degree-weighted vertices, unit edges."""
    if g.size == 0:
        raise InvalidInput("interval needs at least one edge")
    weights = list(g.degrees().values()) + [1] * g.size
    return _interval_from_weights(weights, range(1, g.order + g.size + 1), g.size, EM)


def crown_graph(m: int, n: int) -> Graph:
    return underlying(build_crown(CrownSpec(m, n)))


@dataclass
class ValenceCover:
    """Interval plus one verified labeling per achieved valence."""

    m: int
    n: int
    mode: str
    interval: MagicInterval
    achieved: dict[int, TotalLabeling] = field(default_factory=dict)

    @property
    def missing(self) -> list[int]:
        return [k for k in self.interval.values() if k not in self.achieved]

    @property
    def complete(self) -> bool:
        return not self.missing

    def add(self, labeling: TotalLabeling):
        k = labeling.valence
        if k in self.interval and k not in self.achieved:
            self.achieved[k] = labeling


def _coprime_splits(m: int) -> list[tuple[int, int]]:
    """Ordered pairs (outer, inner), both odd >= 3 and coprime, with outer*inner = m."""
    out = []
    for a in range(3, m):
        if m % a == 0:
            b = m // a
            if b >= 3 and a % 2 == 1 and b % 2 == 1 and gcd(a, b) == 1:
                out.append((a, b))
    return out


def _distinct_prime_split(m: int) -> tuple[int, int] | None:
    """(p, q) when m is a product of two distinct odd primes, else None."""
    for p, q in _coprime_splits(m):
        if p < q and is_odd_prime(p) and is_odd_prime(q):
            return p, q
    return None


def crown_sem_cover(m: int, n: int, strict: bool | None = None) -> ValenceCover:
    """Super-edge-magic labelings of the crown over C_m, one per feasible valence.

    Non-exceptional shifts come from the canonical cycle labeling; exceptional
    shifts are rescued by the composite-cycle labeling and its vertex
    complement.  For m a product of two distinct odd primes the cover is
    complete and a rescue failure raises (strict); for other odd m the
    remaining valences are reported as missing.
    """
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"covers need odd m >= 3, got {m}")
    if n < 1:
        raise InvalidInput(f"covers need n >= 1, got {n}")

    primes = _distinct_prime_split(m)
    if strict is None:
        strict = primes is not None

    interval = sem_interval(crown_graph(m, n))
    lo = 2 * m * n + (5 * m + 3) // 2
    assert (interval.lo, interval.hi) == (lo, lo + m * n)
    cover = ValenceCover(m, n, SEM, interval)
    canonical = extend_sem(canonical_cycle(m))

    exceptional = [r for r in range(1, m * n + 2) if gcd_exception(m, r)]
    plain = [r for r in range(1, m * n + 2) if r not in set(exceptional)]

    for r in plain:
        sign = sign_for_shift(m, r)
        result = translated_labeling(canonical, n, sign, r)
        if not result.single_cycle:
            raise CoverConstructionError(
                f"coprime-step core at shift {r} failed to be one cycle (m={m})"
            )
        cover.add(result.labeling)

    if not exceptional:
        return cover

    rescued: dict[int, TotalLabeling] = {}
    if primes is not None:
        p, q = primes
        data = bounded_bezout(p, q)
        inner = data.positive_prime
        outer = m // inner
        family_a = ((m + 1) // 2 - data.x) % m
        rescue = product_cycle_labeling(outer, inner)
        for r in exceptional:
            if (r - 1) % m != family_a:
                continue
            result = translated_labeling(rescue, n, "+", r)
            if not result.single_cycle:
                raise CoverConstructionError(
                    f"rescue core at shift {r} is not one cycle (m={m}): "
                    "either an implementation bug or a counterexample to guaranteed coverage"
                )
            rescued[r] = result.labeling
    else:
        candidates = []
        for outer, inner in _coprime_splits(m):
            try:
                candidates.append(product_cycle_labeling(outer, inner))
            except CrownMagicError:
                continue
        for r in exceptional:
            for cand in candidates:
                for sign in ("+", "-"):
                    try:
                        result = translated_labeling(cand, n, sign, r)
                    except CrownMagicError:
                        continue
                    if result.single_cycle:
                        rescued[r] = result.labeling
                        break
                if r in rescued:
                    break

    for r, labeling in rescued.items():
        cover.add(labeling)
    for r in exceptional:
        if r in rescued:
            continue
        partner = m * n + 2 - r  # (partner-1) = mn - (r-1)
        if partner in rescued:
            flipped = sem_complement(rescued[partner])
            assert flipped.valence == interval.lo + r - 1
            cover.add(flipped)
        elif strict:
            raise CoverConstructionError(
                f"no labeling for exceptional shift {r} (m={m}, n={n})"
            )

    if strict and not cover.complete:
        raise CoverConstructionError(f"cover incomplete for m={m}, n={n}: {cover.missing}")
    return cover


def perfect_sem_cover(p: int, q: int, n: int) -> ValenceCover:
    """Complete super-edge-magic cover of the crown over C_pq, p and q distinct odd primes."""
    if not is_odd_prime(p) or not is_odd_prime(q) or p == q:
        raise InvalidInput(f"need distinct odd primes, got {p} and {q}")
    return crown_sem_cover(p * q, n, strict=True)


def crown_em_cover(m: int, n: int, strict: bool | None = None) -> ValenceCover:
    """Edge-magic labelings of the crown over C_m, one per feasible valence.

    Assembled from the super-edge-magic cover, its label complements, and the
    odd/even doubling transforms; earlier sources win when valences collide.
    """
    sem = crown_sem_cover(m, n, strict=strict)
    interval = em_interval(crown_graph(m, n))
    assert (interval.lo, interval.hi) == (
        2 * m * n + (5 * m + 3) // 2,
        4 * m * n + (7 * m + 3) // 2,
    )
    cover = ValenceCover(m, n, EM, interval)
    for v in sorted(sem.achieved):
        f = sem.achieved[v]
        cover.add(f)
        cover.add(em_complement(f))
        cover.add(odd_even(f, "odd"))
        cover.add(odd_even(f, "even"))
    if strict or (strict is None and _distinct_prime_split(m) is not None):
        if not cover.complete:
            raise CoverConstructionError(
                f"edge-magic cover incomplete for m={m}, n={n}: {cover.missing}"
            )
    return cover


def perfect_em_cover(p: int, q: int, n: int) -> ValenceCover:
    """Complete edge-magic cover of the crown over C_pq, p and q distinct odd primes."""
    if not is_odd_prime(p) or not is_odd_prime(q) or p == q:
        raise InvalidInput(f"need distinct odd primes, got {p} and {q}")
    return crown_em_cover(p * q, n, strict=True)


def _oriented_cycle_digraph(g: TotalLabeling) -> Digraph:
    """Forward orientation of a labeled cycle in vertex-id walk order."""
    graph = g.graph
    order = [1, min(graph.neighbors(1))]
    while len(order) < graph.order:
        nxt = [w for w in graph.neighbors(order[-1]) if w != order[-2]]
        order.append(nxt[0])
    arcs = tuple(
        (order[t], order[(t + 1) % len(order)]) for t in range(len(order))
    )
    return Digraph(graph.order, arcs)


def star_product_valences(cycle_labelings: list[TotalLabeling], n: int) -> list[TotalLabeling]:
    """Crown labelings from edge-magic cycle labelings composed with looped stars.

    Each input labeling g of C_m yields n+1 labelings of the crown with
    valences (n+1)(val(g)-2)+r+1 for r = 1..n+1; inputs with distinct valences
    yield pairwise disjoint valence blocks.
    """
    if n < 1:
        raise InvalidInput(f"need n >= 1, got {n}")
    if not cycle_labelings:
        raise InvalidInput("need at least one cycle labeling")
    orders = {g.order for g in cycle_labelings}
    if len(orders) != 1:
        raise InvalidInput(f"mixed cycle lengths: {sorted(orders)}")
    for g in cycle_labelings:
        if not is_single_cycle(g.graph):
            raise InvalidInput("inputs must be labelings of a single cycle")

    out = []
    for g in cycle_labelings:
        outer = _oriented_cycle_digraph(g)
        for r in range(1, n + 2):
            h = ArcAssignment.constant(outer, star_member(n, r))
            result = induced_product_labeling(outer, g, h)
            assert result.valence == (n + 1) * (g.valence - 2) + r + 1
            out.append(result)
    return sorted(out, key=lambda f: f.valence)


def _sem_labeling_for_shift(m: int, n: int, r: int) -> TotalLabeling | None:
    """Super-edge-magic crown labeling with valence lo + r - 1, or None."""
    sign = sign_for_shift(m, r)
    if sign is not None:
        result = translated_labeling(extend_sem(canonical_cycle(m)), n, sign, r)
        return result.labeling if result.single_cycle else None
    primes = _distinct_prime_split(m)
    if primes is not None:
        p, q = primes
        data = bounded_bezout(p, q)
        inner = data.positive_prime
        family_a = ((m + 1) // 2 - data.x) % m
        if (r - 1) % m == family_a:
            result = translated_labeling(
                product_cycle_labeling(m // inner, inner), n, "+", r
            )
            if not result.single_cycle:
                raise CoverConstructionError(
                    f"rescue core at shift {r} is not one cycle (m={m})"
                )
            return result.labeling
        partner = m * n + 2 - r
        direct = _sem_labeling_for_shift(m, n, partner)
        return sem_complement(direct) if direct is not None else None
    # Experiment route: try composite-cycle rescues, then the partner complement.
    def try_rescues(shift: int) -> TotalLabeling | None:
        for outer, inner in _coprime_splits(m):
            try:
                cand = product_cycle_labeling(outer, inner)
            except CrownMagicError:
                continue
            for sign in ("+", "-"):
                try:
                    result = translated_labeling(cand, n, sign, shift)
                except CrownMagicError:
                    continue
                if result.single_cycle:
                    return result.labeling
        return None

    direct = try_rescues(r)
    if direct is not None:
        return direct
    partner = m * n + 2 - r
    if sign_for_shift(m, partner) is None and partner != r:
        flipped = try_rescues(partner)
        if flipped is not None:
            return sem_complement(flipped)
    return None


def crown_labeling_for_valence(m: int, n: int, k: int) -> TotalLabeling | None:
    """One labeling of the crown over C_m with valence exactly k, or None.

    Valences inside the super-edge-magic interval come from the shifted
    constructions; the rest of the magic interval is reached through the label
    complement or the odd/even transforms.  None means the valence lies in the
    magic interval but no implemented construction reaches it (possible only
    for composite non-pq m); valences outside the interval raise.
    """
    if m < 3 or m % 2 == 0:
        raise InvalidInput(f"generation needs odd m >= 3, got {m}")
    if n < 1:
        raise InvalidInput(f"generation needs n >= 1, got {n}")
    interval = em_interval(crown_graph(m, n))
    if k not in interval:
        raise InvalidInput(f"valence {k} outside the magic interval [{interval.lo}, {interval.hi}]")
    sem = sem_interval(crown_graph(m, n))

    if k in sem:
        direct = _sem_labeling_for_shift(m, n, k - sem.lo + 1)
        if direct is not None:
            return direct

    p_g = m * (n + 1)
    complement_source = 3 * (2 * p_g + 1) - k
    if complement_source in sem:
        base = _sem_labeling_for_shift(m, n, complement_source - sem.lo + 1)
        if base is not None:
            return em_complement(base)

    # the odd transform yields even valences (2v-2p-2), the even transform odd ones
    parity = "odd" if k % 2 == 0 else "even"
    source = (k + 2 * p_g + 2) // 2 if parity == "odd" else (k + 2 * p_g + 1) // 2
    if source in sem:
        base = _sem_labeling_for_shift(m, n, source - sem.lo + 1)
        if base is not None:
            return odd_even(base, parity)
    return None


def _factor(m: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    x = m
    d = 2
    while d * d <= x:
        while x % d == 0:
            fac[d] = fac.get(d, 0) + 1
            x //= d
        d += 1
    if x > 1:
        fac[x] = fac.get(x, 0) + 1
    return fac


def cycle_valence_lower_bound(m: int) -> int:
    """Guaranteed number of distinct edge-magic valences of C_m, from its factorization."""
    if m < 3:
        raise InvalidInput(f"need m >= 3, got {m}")
    fac = _factor(m)
    alpha = fac.pop(2, 0)
    odd_sum = sum(fac.values())
    if m % 2 == 1 or alpha >= 2:
        return 1 + odd_sum
    return odd_sum


def crown_valence_lower_bound(m: int, n: int) -> int:
    """Guaranteed number of distinct edge-magic valences of the crown over C_m."""
    if n < 1:
        raise InvalidInput(f"need n >= 1, got {n}")
    return cycle_valence_lower_bound(m) * (n + 1)
