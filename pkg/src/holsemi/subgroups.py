"""Subgroups up to conjugacy by breadth-first search over the lattice.

Start from the cyclic subgroups and repeatedly adjoin one more element,
closing each time.  Every subgroup is reached because it can be built by
adding its generators one at a time.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .permgroup import CapExceeded, PermGroup, is_subgroup

SUBGROUP_CAP = 500


@dataclass(frozen=True)
class SubgroupClass:
    group: PermGroup
    indices: frozenset[int]  # element indices in the ambient group
    generators: tuple[int, ...]
    normalizer_index: int  # number of conjugates, [G : N_G(H)]

    @property
    def order(self) -> int:
        return len(self.indices)


def _set_hash(G: PermGroup, indices) -> str:
    h = hashlib.sha256()
    for i in sorted(indices):
        h.update(b"|" + ",".join(map(str, G.elements[i].images)).encode())
    return h.hexdigest()


def _small_generators(G: PermGroup, indices) -> tuple[int, ...]:
    gens = []
    current = frozenset([0])
    for x in sorted(indices):
        if x not in current:
            gens.append(x)
            current = G.close_indices(gens)
    return tuple(gens)


def all_subgroup_sets(G: PermGroup, cap: int = SUBGROUP_CAP) -> set[frozenset[int]]:
    """Every subgroup of G as a set of element indices."""
    if G.order > cap:
        raise CapExceeded(f"subgroup search needs |G| <= {cap}, got {G.order}")
    table = G.table
    found = set()
    queue = deque()
    for x in range(G.order):
        S = G.close_indices([x])
        if S not in found:
            found.add(S)
            queue.append(S)
    while queue:
        K = queue.popleft()
        kgens = _small_generators(G, K)
        tried = set(K)
        for g in range(G.order):
            if g in tried:
                continue
            tried.update(table[k][g] for k in K)
            S = G.close_indices(kgens + (g,), start=K)
            if S not in found:
                found.add(S)
                queue.append(S)
    return found


def _conjugate(G: PermGroup, S, x: int) -> frozenset[int]:
    table, inv = G.table, G.inverse_index
    xi = inv[x]
    return frozenset(table[table[x][s]][xi] for s in S)


def _orbit(G: PermGroup, S) -> set[frozenset[int]]:
    gens = [G.index[g] for g in G.generators] or [0]
    orbit = {S}
    queue = deque([S])
    while queue:
        T = queue.popleft()
        for g in gens:
            U = _conjugate(G, T, g)
            if U not in orbit:
                orbit.add(U)
                queue.append(U)
    return orbit


def _reduce_sets(G: PermGroup, sets) -> list[SubgroupClass]:
    given = set(sets)
    remaining = set(given)
    classes = []
    for S in sorted(remaining, key=lambda s: (len(s), sorted(s))):
        if S not in remaining:
            continue
        orbit = _orbit(G, S)
        remaining -= orbit
        rep = min(orbit & given, key=lambda s: _set_hash(G, s))
        gens = _small_generators(G, rep)
        H = G.subgroup_from_indices(rep, gens)
        classes.append((len(rep), _set_hash(G, rep), SubgroupClass(H, rep, gens, len(orbit))))
    classes.sort(key=lambda t: (t[0], t[1]))
    return [c for _, _, c in classes]


def subgroup_classes(G: PermGroup, cap: int = SUBGROUP_CAP) -> list[SubgroupClass]:
    return _reduce_sets(G, all_subgroup_sets(G, cap))


def all_subgroups_up_to_conjugacy(G: PermGroup, cap: int = SUBGROUP_CAP) -> list[PermGroup]:
    return [c.group for c in subgroup_classes(G, cap)]


def conjugacy_reduce(subgroups: list[PermGroup], G: PermGroup) -> list[PermGroup]:
    """Keep one subgroup per G-conjugacy class among ``subgroups``."""
    sets = []
    for H in subgroups:
        if not is_subgroup(H, G):
            raise ValueError(f"{H!r} is not a subgroup of {G!r}")
        sets.append(frozenset(G.index[h] for h in H.elements))
    return [c.group for c in _reduce_sets(G, sets)]
