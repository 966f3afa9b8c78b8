"""Finite permutation groups by full element materialization.

Points are 0-based and a permutation is stored as its image tuple.  Groups
are small (a few hundred elements at most), so every group keeps its whole
element list plus an index-based multiplication table; nothing here uses
stabilizer chains.
"""

from __future__ import annotations

import hashlib
import math
import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_CAP = 20000


class GroupError(ValueError):
    """Malformed permutation or group input."""


class CapExceeded(RuntimeError):
    """A closure grew past the configured element cap."""


class Permutation:
    """A bijection of ``{0, ..., n-1}``.

    Products compose as functions: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            cycle = [int(c) for c in cycle]
            for c in cycle:
                if not 0 <= c < degree:
                    raise GroupError(f"point {c} outside 0..{degree - 1}")
                if c in seen:
                    raise GroupError(f"point {c} repeated in cycle notation")
                seen.add(c)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise GroupError("degree mismatch")
        mine = self.images
        return Permutation(mine[i] for i in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def cycles(self) -> list[list[int]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(cycle)
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


@dataclass(frozen=True)
class ConjugacyClasses:
    representatives: list[Permutation]
    sizes: list[int]
    class_of: dict[Permutation, int]
    members: list[list[int]]  # element indices of each class

    def __len__(self):
        return len(self.representatives)


class PermGroup:
    """A finite permutation group with every element materialized.

    ``elements`` is sorted by image tuple, so index 0 is the identity.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation] = (), *,
                 cap: int = DEFAULT_CAP, name: str | None = None,
                 elements: Sequence[Permutation] | None = None):
        if degree < 1:
            raise GroupError("degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise GroupError(f"generator {g!r} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        self.cap = cap
        self.name = name
        self._lock = threading.RLock()
        self._elements = sorted(elements) if elements is not None else None
        self._index = None
        self._table = None
        self._inverse = None
        self._classes = None

    # -- materialization -------------------------------------------------

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    self._elements = sorted(_closure(self.degree, self.generators, self.cap))
        return self._elements

    @property
    def index(self) -> dict[Permutation, int]:
        if self._index is None:
            with self._lock:
                if self._index is None:
                    self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    @property
    def table(self) -> list[list[int]]:
        """``table[i][j]`` is the index of ``elements[i] * elements[j]``."""
        if self._table is None:
            with self._lock:
                if self._table is None:
                    els, idx = self.elements, self.index
                    imgs = [g.images for g in els]
                    self._table = [[idx[Permutation(a[k] for k in b)] for b in imgs] for a in imgs]
        return self._table

    @property
    def inverse_index(self) -> list[int]:
        if self._inverse is None:
            with self._lock:
                if self._inverse is None:
                    idx = self.index
                    self._inverse = [idx[g.inverse()] for g in self.elements]
        return self._inverse

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __len__(self):
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.index

    def __repr__(self):
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermGroup({label}, degree={self.degree})"

    def element_orders(self) -> list[int]:
        return [g.order() for g in self.elements]

    def canonical_hash(self) -> str:
        """SHA-256 over the sorted element image tuples."""
        h = hashlib.sha256()
        h.update(str(self.degree).encode())
        for g in self.elements:
            h.update(b"|" + ",".join(map(str, g.images)).encode())
        return h.hexdigest()

    def subgroup_from_indices(self, indices: Iterable[int], generators: Sequence[int] = ()) -> PermGroup:
        els = self.elements
        return PermGroup(self.degree, [els[i] for i in generators], cap=self.cap,
                         elements=[els[i] for i in indices])

    def close_indices(self, gens: Iterable[int], start: Iterable[int] = (0,)) -> frozenset[int]:
        """Index set of the subgroup generated by ``gens`` (and ``start``)."""
        table = self.table
        gens = list(dict.fromkeys(gens))
        found = set(start) | {0}
        queue = deque(found)
        while queue:
            x = queue.popleft()
            row = table[x]
            for g in gens:
                y = row[g]
                if y not in found:
                    found.add(y)
                    queue.append(y)
        return frozenset(found)

    @property
    def classes(self) -> ConjugacyClasses:
        if self._classes is None:
            with self._lock:
                if self._classes is None:
                    self._classes = _conjugacy_classes(self)
        return self._classes


def _closure(degree: int, generators: Sequence[Permutation], cap: int) -> list[Permutation]:
    ident = Permutation.identity(degree)
    found = {ident}
    queue = deque([ident])
    gens = [g for g in dict.fromkeys(generators) if not g.is_identity()]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in found:
                found.add(y)
                if len(found) > cap:
                    raise CapExceeded(f"group closure exceeds cap of {cap} elements")
                queue.append(y)
    return list(found)


def group_from_generators(degree: int, generators: Sequence[Permutation], *,
                          cap: int = DEFAULT_CAP, name: str | None = None) -> PermGroup:
    G = PermGroup(degree, generators, cap=cap, name=name)
    G.elements  # materialize now so cap errors surface at construction
    return G


def _conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    els = G.elements
    table, inv = G.table, G.inverse_index
    gen_idx = [G.index[g] for g in G.generators] or [0]
    class_id = [-1] * len(els)
    orbits = []
    for start in range(len(els)):
        if class_id[start] >= 0:
            continue
        orbit = [start]
        class_id[start] = len(orbits)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in gen_idx:
                y = table[table[g][x]][inv[g]]
                if class_id[y] < 0:
                    class_id[y] = len(orbits)
                    orbit.append(y)
                    queue.append(y)
        orbits.append(sorted(orbit))

    # elements are sorted, so the smallest index is the lexicographic minimum
    def key(orbit):
        rep = els[orbit[0]]
        return (not rep.is_identity(), rep.order(), rep.images)

    orbits.sort(key=key)
    reps = [els[o[0]] for o in orbits]
    class_of = {}
    for ci, orbit in enumerate(orbits):
        for x in orbit:
            class_of[els[x]] = ci
    return ConjugacyClasses(reps, [len(o) for o in orbits], class_of, orbits)


def conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    return G.classes


def class_index_list(G: PermGroup) -> list[int]:
    """Class number of each element index."""
    out = [0] * G.order
    for ci, members in enumerate(G.classes.members):
        for x in members:
            out[x] = ci
    return out


def power_map(G: PermGroup, k: int) -> list[int]:
    """Class of ``rep**k`` for every class representative."""
    cls = G.classes
    out = []
    for rep in cls.representatives:
        x = G.identity
        for _ in range(k % rep.order()):
            x = x * rep
        out.append(cls.class_of[x])
    return out


def exponent(G: PermGroup) -> int:
    return math.lcm(1, *(rep.order() for rep in G.classes.representatives))


def commutator_subgroup(H: PermGroup) -> PermGroup:
    """``[H, H]`` as the normal closure of the generator commutators."""
    idx, table, inv = H.index, H.table, H.inverse_index
    gens = list(dict.fromkeys(idx[g] for g in H.generators)) if H.generators else list(range(H.order))
    comms = {table[table[inv[a]][inv[b]]][table[a][b]] for a in gens for b in gens}
    N = H.close_indices(comms)
    while True:
        extra = {table[table[g][n]][inv[g]] for g in gens for n in N} - N
        if not extra:
            break
        N = H.close_indices(set(N) | extra)
    return H.subgroup_from_indices(sorted(N), sorted(comms - {0}))


def is_subgroup_element(H: PermGroup, g: Permutation) -> bool:
    if g.degree != H.degree:
        raise GroupError(f"degree mismatch: {g.degree} vs {H.degree}")
    return g in H.index


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    return H.degree == G.degree and all(h in G.index for h in H.elements)
