"""Finite posets and lattices.

Elements are opaque string identifiers; the order is always an explicit
relation.  Internally every element gets an index and the up-set of each
element is stored as an integer bitmask, which keeps the exhaustive
subset enumerations (the way-below oracle, completeness checks) cheap
enough for carriers of a dozen elements.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from . import limits
from .errors import MalformedInputError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite partially ordered set.

    ``leq`` is either a callable ``leq(a, b) -> bool`` or an iterable of
    pairs ``(a, b)`` meaning ``a <= b``.  Pairs need not list reflexive
    entries but must already be transitive; the relation is validated
    exhaustively and never silently closed.
    """

    def __init__(self, elements: Sequence[str], leq: Callable[[str, str], bool] | Iterable[tuple[str, str]]):
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        if len(index) != len(elems):
            raise MalformedInputError("poset element identifiers must be unique")
        n = len(elems)
        up = [1 << i for i in range(n)]
        if callable(leq):
            for i, a in enumerate(elems):
                for j, b in enumerate(elems):
                    if leq(a, b):
                        up[i] |= 1 << j
                    elif i == j:
                        raise MalformedInputError(f"order is not reflexive at {a!r}")
        else:
            for a, b in leq:
                if a not in index or b not in index:
                    raise MalformedInputError(f"order pair ({a!r}, {b!r}) names an unknown element")
                up[index[a]] |= 1 << index[b]
        for i in range(n):
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise MalformedInputError(f"order is not antisymmetric: {elems[i]!r} and {elems[j]!r}")
                if up[j] & ~up[i]:
                    k = next(_bits(up[j] & ~up[i]))
                    raise MalformedInputError(
                        f"order is not transitive: {elems[i]!r} <= {elems[j]!r} <= {elems[k]!r}"
                    )
        self.elements: tuple[str, ...] = elems
        self.index: dict[str, int] = index
        self._up = up
        self._full = (1 << n) - 1

    # --- basic access -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: object) -> bool:
        return a in self.index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    __hash__ = None  # type: ignore[assignment]

    def _idx(self, a: str) -> int:
        try:
            return self.index[a]
        except KeyError:
            raise MalformedInputError(f"unknown element {a!r}") from None

    def _mask(self, subset: Iterable[str]) -> int:
        m = 0
        for a in subset:
            m |= 1 << self._idx(a)
        return m

    def _names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in _bits(mask))

    def leq(self, a: str, b: str) -> bool:
        return bool(self._up[self._idx(a)] >> self._idx(b) & 1)

    def strict_pairs(self) -> list[tuple[str, str]]:
        """All pairs ``a < b`` in element order."""
        return [
            (a, self.elements[j])
            for i, a in enumerate(self.elements)
            for j in _bits(self._up[i])
            if j != i
        ]

    @cached_property
    def _down(self) -> list[int]:
        down = [0] * len(self)
        for i, m in enumerate(self._up):
            for j in _bits(m):
                down[j] |= 1 << i
        return down

    # --- bounds -------------------------------------------------------

    def _lub_mask(self, mask: int) -> int | None:
        upper = self._full
        for i in _bits(mask):
            upper &= self._up[i]
        for u in _bits(upper):
            if upper & ~self._up[u] == 0:
                return u
        return None

    def _glb_mask(self, mask: int) -> int | None:
        lower = self._full
        for i in _bits(mask):
            lower &= self._down[i]
        for u in _bits(lower):
            if lower & ~self._down[u] == 0:
                return u
        return None

    def lub(self, subset: Iterable[str]) -> str | None:
        """Least upper bound, or ``None`` when it does not exist.

        The empty set's lub is the bottom element when there is one.
        """
        u = self._lub_mask(self._mask(subset))
        return None if u is None else self.elements[u]

    def glb(self, subset: Iterable[str]) -> str | None:
        u = self._glb_mask(self._mask(subset))
        return None if u is None else self.elements[u]

    @cached_property
    def bottom(self) -> str | None:
        return self.lub(())

    @cached_property
    def top(self) -> str | None:
        return self.glb(())

    # --- directed sets ------------------------------------------------

    def _is_directed_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        members = list(_bits(mask))
        for a, b in combinations(members, 2):
            if self._up[a] & self._up[b] & mask == 0:
                return False
        return True

    def is_directed(self, subset: Iterable[str]) -> bool:
        return self._is_directed_mask(self._mask(subset))

    def _all_subset_masks(self, within: int | None = None) -> Iterator[int]:
        within = self._full if within is None else within
        limits.require_enumerable(bin(within).count("1"), "subset enumeration domain")
        # standard submask walk, yields every submask of `within` (including 0)
        sub = within
        while True:
            yield sub
            if sub == 0:
                return
            sub = (sub - 1) & within

    def directed_subsets(self, within: Iterable[str] | None = None) -> list[tuple[tuple[str, ...], str | None]]:
        """Every directed subset (as names) paired with its lub (or ``None``)."""
        w = None if within is None else self._mask(within)
        out = []
        for m in self._all_subset_masks(w):
            if self._is_directed_mask(m):
                u = self._lub_mask(m)
                out.append((self._names(m), None if u is None else self.elements[u]))
        out.sort(key=lambda p: [self.index[a] for a in p[0]])
        return out

    @cached_property
    def _directed_with_lub(self) -> list[tuple[int, int]]:
        out = []
        for m in self._all_subset_masks():
            if self._is_directed_mask(m):
                u = self._lub_mask(m)
                if u is not None:
                    out.append((m, u))
        return out

    @cached_property
    def _way_below(self) -> list[int]:
        """``_way_below[a]`` is the mask of all ``b`` with ``a << b``."""
        n = len(self)
        rows = []
        for a in range(n):
            row = 0
            for b in range(n):
                ok = True
                for m, u in self._directed_with_lub:
                    if self._up[b] >> u & 1 and not (self._up[a] & m):
                        ok = False
                        break
                if ok:
                    row |= 1 << b
            rows.append(row)
        return rows

    def way_below(self, a: str, b: str) -> bool:
        """``a << b`` by brute force over every directed subset."""
        i, j = self._idx(a), self._idx(b)
        limits.require_enumerable(len(self), "way-below oracle poset")
        return bool(self._way_below[i] >> j & 1)

    def way_below_set(self, a: str) -> tuple[str, ...]:
        """All ``b`` with ``b << a``."""
        i = self._idx(a)
        limits.require_enumerable(len(self), "way-below oracle poset")
        return tuple(self.elements[b] for b in range(len(self)) if self._way_below[b] >> i & 1)


def is_directed(subset: Iterable[str], poset: Poset) -> bool:
    return poset.is_directed(subset)


def lub(subset: Iterable[str], poset: Poset) -> str | None:
    return poset.lub(subset)


def way_below(a: str, b: str, poset: Poset) -> bool:
    return poset.way_below(a, b)


def is_complete_lattice(poset: Poset) -> bool:
    """Every subset (the empty one included) has a least upper bound."""
    return all(poset._lub_mask(m) is not None for m in poset._all_subset_masks())


def is_sup_semilattice(poset: Poset) -> bool:
    n = len(poset)
    return all(poset._lub_mask(1 << i | 1 << j) is not None for i in range(n) for j in range(i + 1, n))


def complete_via_directed(poset: Poset) -> bool:
    """Completeness decided through the directed-sup characterisation.

    True iff the poset is a sup-semilattice with a bottom element and every
    directed subset has a lub.
    """
    if poset.bottom is None or not is_sup_semilattice(poset):
        return False
    return all(
        poset._lub_mask(m) is not None
        for m in poset._all_subset_masks()
        if poset._is_directed_mask(m)
    )


def is_continuous_lattice(poset: Poset) -> bool:
    if not is_complete_lattice(poset):
        return False
    return all(poset.lub(poset.way_below_set(a)) == a for a in poset.elements)


def is_algebraic_lattice(poset: Poset) -> bool:
    if not is_complete_lattice(poset):
        return False
    compact = [b for b in poset.elements if poset.way_below(b, b)]
    return all(poset.lub(b for b in compact if poset.leq(b, a)) == a for a in poset.elements)


class FiniteLattice(Poset):
    """A finite poset with all binary joins and meets.

    Supplied ``join``/``meet`` tables are validated against the order;
    absent ones are computed.
    """

    def __init__(
        self,
        elements: Sequence[str],
        leq: Callable[[str, str], bool] | Iterable[tuple[str, str]],
        join: Mapping[tuple[str, str], str] | None = None,
        meet: Mapping[tuple[str, str], str] | None = None,
    ):
        super().__init__(elements, leq)
        if not self.elements:
            raise MalformedInputError("a lattice needs at least one element")
        jt: dict[tuple[str, str], str] = {}
        mt: dict[tuple[str, str], str] = {}
        for a in self.elements:
            for b in self.elements:
                j, m = Poset.lub(self, (a, b)), Poset.glb(self, (a, b))
                if j is None or m is None:
                    raise MalformedInputError(f"{a!r} and {b!r} lack a {'join' if j is None else 'meet'}")
                jt[a, b], mt[a, b] = j, m
        for given, table, label in ((join, jt, "join"), (meet, mt, "meet")):
            if given is not None:
                for key, val in table.items():
                    if given.get(key) != val:
                        raise MalformedInputError(f"supplied {label} table is wrong at {key}: {given.get(key)!r} != {val!r}")
        self._join = jt
        self._meet = mt

    def __repr__(self) -> str:
        return f"FiniteLattice({list(self.elements)!r})"

    def join(self, a: str, b: str) -> str:
        try:
            return self._join[a, b]
        except KeyError:
            raise MalformedInputError(f"unknown lattice element in ({a!r}, {b!r})") from None

    def meet(self, a: str, b: str) -> str:
        try:
            return self._meet[a, b]
        except KeyError:
            raise MalformedInputError(f"unknown lattice element in ({a!r}, {b!r})") from None

    @cached_property
    def top(self) -> str:  # type: ignore[override]
        return Poset.glb(self, ())  # type: ignore[return-value]

    @cached_property
    def bottom(self) -> str:  # type: ignore[override]
        return Poset.lub(self, ())  # type: ignore[return-value]


def pair_name(x: str, y: str) -> str:
    return f"({x},{y})"


def product_lattice(d: FiniteLattice, e: FiniteLattice) -> FiniteLattice:
    """Componentwise product; element ``(x, y)`` is named ``"(x,y)"``."""
    names = {}
    for x in d.elements:
        for y in e.elements:
            names[pair_name(x, y)] = (x, y)
    if len(names) != len(d) * len(e):
        raise MalformedInputError("product element names collide; rename the factor elements")

    def leq(p: str, q: str) -> bool:
        (x1, y1), (x2, y2) = names[p], names[q]
        return d.leq(x1, x2) and e.leq(y1, y2)

    lat = FiniteLattice(list(names), leq)
    lat.factors = names  # type: ignore[attr-defined]
    return lat


def chain(n: int, names: Sequence[str] | None = None) -> FiniteLattice:
    """The ``n``-element chain ``names[0] < names[1] < ...``."""
    names = [str(i) for i in range(n)] if names is None else list(names)
    if len(names) != n:
        raise MalformedInputError("chain needs exactly n names")
    pos = {a: i for i, a in enumerate(names)}
    return FiniteLattice(names, lambda a, b: pos[a] <= pos[b])


def set_name(items: Iterable[str]) -> str:
    return "{" + ",".join(sorted(items)) + "}"


def powerset_lattice(items: Sequence[str]) -> tuple[FiniteLattice, dict[str, frozenset[str]]]:
    """Subsets of ``items`` under inclusion, named like ``"{a,b}"``.

    Returns the lattice and the name-to-subset map.
    """
    items = sorted(items)
    subsets: dict[str, frozenset[str]] = {}
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            subsets[set_name(combo)] = frozenset(combo)
    lat = FiniteLattice(list(subsets), lambda a, b: subsets[a] <= subsets[b])
    return lat, subsets
