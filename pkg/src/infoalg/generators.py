"""Seeded generators of small posets and algebras for exhaustive testing.

Two families of domain-free algebras are produced:

* relational: sets of tuples over a tiny frame, combined by intersection
  and focused by cylindrification, closed from random generators;
* lattice-based: a random finite lattice under join with a focusing map
  drawn uniformly from all valid deflationary maps onto a 2-chain domain.

Everything is deterministic given the seed.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .domain_free import DomainFreeAlgebra, check_df_axioms
from .errors import MalformedInputError
from .labeled import LabeledAlgebra
from .order import FiniteLattice, Poset, chain, powerset_lattice, set_name
from .transforms import associated_labeled


# --- posets -----------------------------------------------------------------


def all_posets(n: int) -> Iterator[Poset]:
    """Every partial order on ``"p0".."p{n-1}"`` (labelled, not up to isomorphism)."""
    names = [f"p{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        yield Poset(names, [(names[i], names[j]) for i, j in sorted(rel)])


def random_poset(n: int, rng: random.Random, density: float = 0.4) -> Poset:
    """Transitive closure of a random DAG on a random linear extension."""
    names = [f"p{i}" for i in range(n)]
    rng.shuffle(names)
    rel = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density}
    changed = True
    while changed:
        changed = False
        for i, j in list(rel):
            for j2, k in list(rel):
                if j == j2 and (i, k) not in rel:
                    rel.add((i, k))
                    changed = True
    return Poset(sorted(names), [(names[i], names[j]) for i, j in rel])


def poset_corpus(seed: int = 0, random_count: int = 60) -> list[Poset]:
    """All posets up to four elements plus random ones on five and six."""
    out = [p for n in range(1, 5) for p in all_posets(n)]
    rng = random.Random(seed)
    for k in range(random_count):
        out.append(random_poset(5 + k % 2, rng, density=rng.choice((0.2, 0.4, 0.6, 0.8))))
    return out


def random_lattice(n: int, rng: random.Random, tries: int = 500) -> FiniteLattice:
    """Rejection-sample a random poset on ``n`` elements that is a lattice."""
    for _ in range(tries):
        p = random_poset(n, rng, density=rng.choice((0.3, 0.5, 0.7)))
        try:
            return FiniteLattice(p.elements, p.strict_pairs())
        except MalformedInputError:
            continue
    return chain(n, [f"p{i}" for i in range(n)])


# --- relational algebras ----------------------------------------------------


def _cylinder(s: frozenset, keep: frozenset, variables: tuple[str, ...], frame: list[tuple]) -> frozenset:
    idx = [i for i, v in enumerate(variables) if v in keep]
    seen = {tuple(t[i] for i in idx) for t in s}
    return frozenset(t for t in frame if tuple(t[i] for i in idx) in seen)


def relational_algebra(
    generators: list[frozenset], variables: tuple[str, ...], values: tuple[str, ...], max_carrier: int = 6
) -> DomainFreeAlgebra | None:
    """The closure of ``generators`` under intersection and cylindrification.

    Returns ``None`` if the closure exceeds ``max_carrier``.
    """
    frame = list(itertools.product(values, repeat=len(variables)))
    lat, subsets = powerset_lattice(variables)
    full = frozenset(frame)
    found = {full} | set(generators)
    frontier = list(found)
    while frontier:
        new = set()
        for s in frontier:
            for t in list(found):
                new.add(s & t)
            for sub in subsets.values():
                new.add(_cylinder(s, sub, variables, frame))
        frontier = [s for s in new if s not in found]
        found |= new
        if len(found) > max_carrier:
            return None
    ordered = sorted(found, key=lambda s: (-len(s), sorted(s)))

    def ident(s):
        return set_name("".join(t) for t in s)

    return DomainFreeAlgebra.from_functions(
        ordered,
        lat,
        frozenset.intersection,
        lambda s, x: _cylinder(s, subsets[x], variables, frame),
        full,
        ident,
        f"relational({'|'.join(sorted(ident(g) for g in generators))})",
    )


# --- lattice-based algebras -------------------------------------------------


def _valid_focus_maps(lat: FiniteLattice) -> list[dict[str, str]]:
    """All maps ``f`` with ``f(f(a)) = f(a) <= a``, ``f(bottom) = bottom`` and
    ``f(f(a) v b) = f(a) v f(b)``."""
    els = lat.elements
    choices = [[b for b in els if lat.leq(b, a)] for a in els]
    out = []
    for images in itertools.product(*choices):
        f = dict(zip(els, images))
        if f[lat.bottom] != lat.bottom:
            continue
        if any(f[f[a]] != f[a] for a in els):
            continue
        if all(f[lat.join(f[a], b)] == lat.join(f[a], f[b]) for a in els for b in els):
            out.append(f)
    return out


def lattice_algebra(lat: FiniteLattice, focus0: dict[str, str], name: str = "") -> DomainFreeAlgebra:
    """Join as combination over the domain chain ``"0" < "1"``; ``focus0`` is
    the focusing onto ``"0"`` and ``"1"`` acts as the identity."""
    d = chain(2, ["0", "1"])
    ct = {(a, b): lat.join(a, b) for a in lat.elements for b in lat.elements}
    ft = {}
    for a in lat.elements:
        ft[a, "1"] = a
        ft[a, "0"] = focus0[a]
    return DomainFreeAlgebra(lat.elements, d, ct, ft, lat.bottom, name)


def random_df_algebras(count: int = 120, seed: int = 0, max_carrier: int = 6) -> list[DomainFreeAlgebra]:
    """Half relational, half lattice-based; every result passes the axioms."""
    rng = random.Random(seed)
    out: list[DomainFreeAlgebra] = []
    frames = [(("a",), ("0", "1", "2")), (("a", "b"), ("0", "1"))]
    while len(out) < count:
        if len(out) % 2 == 0:
            variables, values = rng.choice(frames)
            frame = list(itertools.product(values, repeat=len(variables)))
            gens = [frozenset(t for t in frame if rng.random() < 0.5) for _ in range(rng.randint(1, 2))]
            alg = relational_algebra(gens, variables, values, max_carrier)
            if alg is None:
                continue
        else:
            lat = random_lattice(rng.randint(2, max_carrier), rng)
            maps = _valid_focus_maps(lat)
            alg = lattice_algebra(lat, rng.choice(maps), f"lattice#{len(out)}")
        if not check_df_axioms(alg).passed:
            raise AssertionError(f"generator produced an invalid algebra {alg.name}")
        out.append(alg)
    return out


def random_labeled_algebras(count: int = 40, seed: int = 0, max_carrier: int = 12) -> list[LabeledAlgebra]:
    """Associated labeled algebras of random domain-free ones, size-filtered."""
    out: list[LabeledAlgebra] = []
    k = 0
    while len(out) < count:
        for df in random_df_algebras(count, seed=seed + k, max_carrier=6):
            lab = associated_labeled(df)
            if len(lab.carrier) <= max_carrier:
                out.append(lab)
                if len(out) == count:
                    break
        k += 1
    return out
