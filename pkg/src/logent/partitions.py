"""Finite-set partitions and their distinction structure.

The carrier is always the index set {0, .., n-1}.  A partition's information
content lives in its dit set: the set of ordered pairs (u, v) whose endpoints
fall in different blocks.  Complements of dit sets are exactly the equivalence
relations, so every lattice operation (join, meet, implication, refinement)
can be computed either on blocks or on pair relations; both routes are
provided so they can be cross-checked.

Pair relations are stored densely as n*n-bit integers, bit ``u*n + v``
encoding membership of (u, v).  That keeps the set algebra branch-free and
exact, and for the default cap of n <= 12 a relation fits in 144 bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    DomainError,
    InvalidPartitionError,
    LimitExceededError,
    NotEquivalenceError,
    SizeMismatchError,
)

DEFAULT_ENUMERATION_LIMIT = 12


@dataclass(frozen=True)
class Universe:
    """The carrier set {0, .., size-1}."""

    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or isinstance(self.size, bool) or self.size < 1:
            raise DomainError(f"universe size must be a positive integer, got {self.size!r}")

    @property
    def pair_count(self) -> int:
        return self.size * self.size


@dataclass(frozen=True)
class PairRelation:
    """A subset of U x U held as a dense bitmask.

    ``is_partition_relation`` marks values produced as open sets (dit sets and
    interiors); it is advisory metadata and does not take part in equality.
    The three defining properties (irreflexive, symmetric, anti-transitive)
    are checkable by enumeration via the predicates below.
    """

    universe: Universe
    bits: int
    is_partition_relation: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        n = self.universe.size
        if self.bits < 0 or self.bits >> (n * n):
            raise DomainError("relation bits fall outside the universe's pair grid")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "PairRelation":
        return cls(Universe(n), 0)

    @classmethod
    def full(cls, n: int) -> "PairRelation":
        return cls(Universe(n), (1 << (n * n)) - 1)

    @classmethod
    def diagonal(cls, n: int) -> "PairRelation":
        bits = 0
        for u in range(n):
            bits |= 1 << (u * n + u)
        return cls(Universe(n), bits)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PairRelation":
        bits = 0
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"pair ({u}, {v}) outside universe of size {n}")
            bits |= 1 << (u * n + v)
        return cls(Universe(n), bits)

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def __contains__(self, pair: tuple[int, int]) -> bool:
        u, v = pair
        n = self.universe.size
        if not (0 <= u < n and 0 <= v < n):
            return False
        return bool((self.bits >> (u * n + v)) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Member pairs in ascending (u, v) order."""
        n = self.universe.size
        b = self.bits
        while b:
            pos = (b & -b).bit_length() - 1
            yield divmod(pos, n)
            b &= b - 1

    def row(self, u: int) -> int:
        """Successor set of u as an n-bit mask: {v : (u, v) in R}."""
        n = self.universe.size
        return (self.bits >> (u * n)) & ((1 << n) - 1)

    # ------------------------------------------------------------------
    # set algebra
    # ------------------------------------------------------------------

    def _like(self, bits: int) -> "PairRelation":
        return PairRelation(self.universe, bits)

    def _check_same(self, other: "PairRelation") -> None:
        if self.universe != other.universe:
            raise SizeMismatchError(
                f"relations on universes of size {self.universe.size} and {other.universe.size}"
            )

    def union(self, other: "PairRelation") -> "PairRelation":
        self._check_same(other)
        return self._like(self.bits | other.bits)

    def intersection(self, other: "PairRelation") -> "PairRelation":
        self._check_same(other)
        return self._like(self.bits & other.bits)

    def difference(self, other: "PairRelation") -> "PairRelation":
        self._check_same(other)
        return self._like(self.bits & ~other.bits)

    def complement(self) -> "PairRelation":
        n = self.universe.size
        return self._like(((1 << (n * n)) - 1) ^ self.bits)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement

    def issubset(self, other: "PairRelation") -> bool:
        self._check_same(other)
        return self.bits & ~other.bits == 0

    def transpose(self) -> "PairRelation":
        n = self.universe.size
        bits = 0
        for u, v in self.pairs():
            bits |= 1 << (v * n + u)
        return self._like(bits)

    # ------------------------------------------------------------------
    # structural predicates, all by enumeration
    # ------------------------------------------------------------------

    def is_reflexive(self) -> bool:
        n = self.universe.size
        return all((self.bits >> (u * n + u)) & 1 for u in range(n))

    def is_irreflexive(self) -> bool:
        n = self.universe.size
        return not any((self.bits >> (u * n + u)) & 1 for u in range(n))

    def is_symmetric(self) -> bool:
        return self.bits == self.transpose().bits

    def is_transitive(self) -> bool:
        n = self.universe.size
        for u in range(n):
            reach = self.row(u)
            m = reach
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if self.row(v) & ~reach:
                    return False
        return True

    def is_anti_transitive(self) -> bool:
        """Whenever (u, w) is a member, every v satisfies (u, v) or (v, w)."""
        n = self.universe.size
        everyone = (1 << n) - 1
        cols = [self.transpose().row(w) for w in range(n)]
        for u, w in self.pairs():
            if (self.row(u) | cols[w]) != everyone:
                return False
        return True

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()


@dataclass(frozen=True)
class Partition:
    """A partition of {0, .., n-1} in canonical form.

    Canonical form: elements ascend within each block, and blocks are ordered
    by their least element.  Construction through :func:`make_partition`
    canonicalizes arbitrary block collections; the invariants are re-checked
    here so that equality of values is exactly equality of partitions.
    """

    universe: Universe
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.universe.size
        seen: set[int] = set()
        previous_least = -1
        for block in self.blocks:
            if not block:
                raise InvalidPartitionError("empty block")
            if list(block) != sorted(block):
                raise InvalidPartitionError(f"block {block} not in ascending order")
            if block[0] <= previous_least:
                raise InvalidPartitionError("blocks not ordered by least element")
            previous_least = block[0]
            for u in block:
                if not (0 <= u < n):
                    raise InvalidPartitionError(f"element {u} outside universe of size {n}")
                if u in seen:
                    raise InvalidPartitionError(f"element {u} appears in more than one block")
                seen.add(u)
        if len(seen) != n:
            missing = min(set(range(n)) - seen)
            raise InvalidPartitionError(f"element {missing} not covered by any block")

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def is_discrete(self) -> bool:
        return self.n_blocks == self.universe.size

    @property
    def is_indiscrete(self) -> bool:
        return self.n_blocks == 1

    def block_index_of(self) -> list[int]:
        """Map element -> index of its block, as a list over 0..n-1."""
        out = [0] * self.universe.size
        for i, block in enumerate(self.blocks):
            for u in block:
                out[u] = i
        return out

    def block_masks(self) -> list[int]:
        """Each block as an n-bit element mask."""
        masks = []
        for block in self.blocks:
            m = 0
            for u in block:
                m |= 1 << u
            masks.append(m)
        return masks


def make_partition(blocks: Iterable[Iterable[int]], n: int) -> Partition:
    """Validate and canonicalize a collection of blocks into a Partition.

    Raises :class:`InvalidPartitionError` on overlap, a missing element, or
    an empty block.
    """
    universe = Universe(n)
    seen: set[int] = set()
    normalized: list[tuple[int, ...]] = []
    for raw in blocks:
        block = sorted(set(raw))
        if not block:
            raise InvalidPartitionError("empty block")
        for u in block:
            if not isinstance(u, int) or isinstance(u, bool):
                raise InvalidPartitionError(f"element {u!r} is not an integer index")
            if not (0 <= u < n):
                raise InvalidPartitionError(f"element {u} outside universe of size {n}")
            if u in seen:
                raise InvalidPartitionError(f"element {u} appears in more than one block")
            seen.add(u)
        normalized.append(tuple(block))
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise InvalidPartitionError(f"element {missing} not covered by any block")
    normalized.sort(key=lambda b: b[0])
    return Partition(universe, tuple(normalized))


def discrete_partition(n: int) -> Partition:
    """All singletons: the top of the refinement order."""
    return Partition(Universe(n), tuple((u,) for u in range(n)))


def indiscrete_partition(n: int) -> Partition:
    """One block: the bottom of the refinement order."""
    return Partition(Universe(n), (tuple(range(n)),))


def _check_same_universe(p: Partition, s: Partition) -> Universe:
    if p.universe != s.universe:
        raise SizeMismatchError(
            f"partitions on universes of size {p.universe.size} and {s.universe.size}"
        )
    return p.universe


# ----------------------------------------------------------------------
# dit / indit sets
# ----------------------------------------------------------------------


def indit_set(partition: Partition) -> PairRelation:
    """Pairs identified by the partition: the union of B x B over blocks.

    Always an equivalence relation.
    """
    n = partition.universe.size
    bits = 0
    for mask in partition.block_masks():
        m = mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            bits |= mask << (u * n)
    return PairRelation(partition.universe, bits)


def dit_set(partition: Partition) -> PairRelation:
    """Pairs distinguished by the partition: the complement of the indit set."""
    n = partition.universe.size
    full = (1 << (n * n)) - 1
    return PairRelation(partition.universe, full ^ indit_set(partition).bits, is_partition_relation=True)


# ----------------------------------------------------------------------
# closure and interior
# ----------------------------------------------------------------------


def rst_closure(relation: PairRelation) -> PairRelation:
    """Smallest equivalence relation containing the given relation.

    Reflexive and symmetric closure first, then transitive closure by
    row-propagation (Warshall) to the fixed point.
    """
    n = relation.universe.size
    rows = [relation.row(u) | (1 << u) for u in range(n)]
    for u in range(n):
        m = rows[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            rows[v] |= 1 << u
    for k in range(n):
        for u in range(n):
            if (rows[u] >> k) & 1:
                rows[u] |= rows[k]
    bits = 0
    for u in range(n):
        bits |= rows[u] << (u * n)
    return PairRelation(relation.universe, bits)


def interior(relation: PairRelation) -> PairRelation:
    """Largest partition relation contained in the given relation.

    Computed as the complement of the rst-closure of the complement.
    """
    closed = rst_closure(relation.complement())
    return PairRelation(relation.universe, closed.complement().bits, is_partition_relation=True)


def partition_from_equivalence(relation: PairRelation) -> Partition:
    """The partition whose blocks are the classes of an equivalence relation.

    Inverse of :func:`indit_set`; raises :class:`NotEquivalenceError` when
    the relation is not reflexive, symmetric, and transitive.
    """
    if not relation.is_reflexive():
        raise NotEquivalenceError("relation is not reflexive")
    if not relation.is_symmetric():
        raise NotEquivalenceError("relation is not symmetric")
    if not relation.is_transitive():
        raise NotEquivalenceError("relation is not transitive")
    n = relation.universe.size
    visited = 0
    blocks: list[tuple[int, ...]] = []
    for u in range(n):
        if (visited >> u) & 1:
            continue
        mask = relation.row(u)
        members = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            members.append(v)
        blocks.append(tuple(members))
        visited |= mask
    return Partition(relation.universe, tuple(blocks))


# ----------------------------------------------------------------------
# lattice operations
# ----------------------------------------------------------------------


def join(p: Partition, s: Partition) -> Partition:
    """Blockwise join: the nonempty intersections B & C.

    Its dit set is exactly dit(p) | dit(s); the equality is enforced by the
    verification suites.
    """
    _check_same_universe(p, s)
    pa = p.block_index_of()
    sa = s.block_index_of()
    groups: dict[tuple[int, int], list[int]] = {}
    for u in range(p.universe.size):
        groups.setdefault((pa[u], sa[u]), []).append(u)
    blocks = sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])
    return Partition(p.universe, tuple(blocks))


def meet(p: Partition, s: Partition) -> Partition:
    """Partition meet: classes of the closure of indit(p) | indit(s).

    Merging blocks with a union-find computes that closure directly; the
    equivalent definition through the interior of dit(p) & dit(s) is kept as
    the checked specification in the test suites.
    """
    _check_same_universe(p, s)
    n = p.universe.size
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in p.blocks + s.blocks:
        root = find(block[0])
        for u in block[1:]:
            r = find(u)
            if r != root:
                parent[r] = root
    groups: dict[int, list[int]] = {}
    for u in range(n):
        groups.setdefault(find(u), []).append(u)
    blocks = sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])
    return Partition(p.universe, tuple(blocks))


def implication(s: Partition, p: Partition) -> Partition:
    """The implication s => p: discretize blocks of p contained in a block of s.

    Every block of p that sits inside some block of s is replaced by its
    singletons; other blocks are kept.  The result equals the partition whose
    dit set is interior(complement(dit(s)) | dit(p)), and s => p is discrete
    exactly when p refines s.
    """
    _check_same_universe(s, p)
    s_index = s.block_index_of()
    blocks: list[tuple[int, ...]] = []
    for block in p.blocks:
        container = set(s.blocks[s_index[block[0]]])
        if set(block) <= container:
            blocks.extend((u,) for u in block)
        else:
            blocks.append(block)
    blocks.sort(key=lambda b: b[0])
    return Partition(p.universe, tuple(blocks))


def refines(s: Partition, p: Partition) -> bool:
    """True when p refines s: each block of p lies inside some block of s.

    Equivalent to dit(s) being a subset of dit(p), which the verification
    suites check pair by pair.
    """
    _check_same_universe(s, p)
    s_index = s.block_index_of()
    for block in p.blocks:
        container = set(s.blocks[s_index[block[0]]])
        if not set(block) <= container:
            return False
    return True


def mutual_dit_set(p: Partition, s: Partition) -> PairRelation:
    """Pairs distinguished by both partitions: dit(p) & dit(s)."""
    _check_same_universe(p, s)
    return dit_set(p).intersection(dit_set(s))


def mutual_dit_set_blockform(p: Partition, s: Partition) -> PairRelation:
    """The same set assembled blockwise as the union of (B - C) x (C - B)."""
    _check_same_universe(p, s)
    n = p.universe.size
    bits = 0
    for b in p.blocks:
        bset = set(b)
        for c in s.blocks:
            cset = set(c)
            c_minus_b = 0
            for v in cset - bset:
                c_minus_b |= 1 << v
            if not c_minus_b:
                continue
            for u in bset - cset:
                bits |= c_minus_b << (u * n)
    return PairRelation(p.universe, bits)


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------


def enumerate_partitions(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> Iterator[Partition]:
    """All partitions of {0, .., n-1}, each exactly once.

    Order is the lexicographic order of restricted-growth strings, which is
    deterministic and starts at the one-block partition and ends at the
    all-singletons partition.  The count is the Bell number B(n).
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"need a positive integer carrier size, got {n!r}")
    if n > limit:
        raise LimitExceededError(f"enumeration of {n} elements exceeds the cap of {limit}")
    return _generate_partitions(n)


def _generate_partitions(n: int) -> Iterator[Partition]:
    universe = Universe(n)
    labels = [0] * n
    caps = [1] * n  # caps[i] = 1 + max(labels[:i]); position i may take 0..caps[i]
    while True:
        groups: dict[int, list[int]] = {}
        for u, a in enumerate(labels):
            groups.setdefault(a, []).append(u)
        yield Partition(universe, tuple(tuple(groups[a]) for a in sorted(groups)))
        j = n - 1
        while j > 0 and labels[j] == caps[j]:
            j -= 1
        if j == 0:
            return
        labels[j] += 1
        rising_cap = max(caps[j], labels[j] + 1)
        for i in range(j + 1, n):
            labels[i] = 0
            caps[i] = rising_cap


def bell_number(n: int) -> int:
    """Bell number B(n) via the Bell triangle recurrence."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"need a nonnegative integer, got {n!r}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def lattice_cover_edges(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> list[tuple[int, int]]:
    """Cover edges of the refinement order, as index pairs into the enumeration.

    An edge (i, j) means partition j covers partition i: j refines i and has
    exactly one more block (one block of i split in two).
    """
    parts = list(enumerate_partitions(n, limit=limit))
    edges = []
    for i, coarser in enumerate(parts):
        for j, finer in enumerate(parts):
            if finer.n_blocks == coarser.n_blocks + 1 and refines(coarser, finer):
                edges.append((i, j))
    return edges
