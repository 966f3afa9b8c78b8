"""Named groups and the group-definition JSON format."""

from __future__ import annotations

import itertools
import json
import re
from pathlib import Path

from .permgroup import DEFAULT_CAP, CapExceeded, GroupError, Permutation, PermGroup, group_from_generators

# Groups that batch runs and library-wide tests iterate over.
LIBRARY_NAMES = ["C1", "C2", "C3", "C4", "C5", "C6", "S3", "D4", "Q8", "A4", "S4", "SL23", "A5", "S5"]


def _cycles(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return group_from_generators(1, [], name="S1")
    gens = [_cycles(n, [0, 1])]
    if n > 2:
        gens.append(_cycles(n, list(range(n))))
    return group_from_generators(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return group_from_generators(max(n, 1), [], name=f"A{n}")
    gens = [_cycles(n, [0, 1, i]) for i in range(2, n)]
    return group_from_generators(n, gens, name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return group_from_generators(1, [], name="C1")
    return group_from_generators(n, [_cycles(n, list(range(n)))], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of an n-gon, order 2n."""
    rot = _cycles(n, list(range(n)))
    refl = Permutation([(-i) % n for i in range(n)])
    return group_from_generators(n, [rot, refl], name=f"D{n}")


def quaternion() -> PermGroup:
    """Q8 acting regularly on itself by left multiplication."""
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    mult = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    points = [(s, a) for s in (1, -1) for a in range(4)]
    where = {p: i for i, p in enumerate(points)}

    def left(axis):
        images = []
        for s, a in points:
            t, b = mult[(axis, a)]
            images.append(where[(s * t, b)])
        return Permutation(images)

    return group_from_generators(8, [left(1), left(2)], name="Q8")


def sl23() -> PermGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    points = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    where = {p: i for i, p in enumerate(points)}

    def act(m):
        (a, b), (c, d) = m
        return Permutation(where[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in points)

    return group_from_generators(8, [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))], name="SL23")


def library_group(name: str) -> PermGroup:
    key = name.strip().upper().replace("(", "").replace(")", "").replace(",", "")
    if key in ("SL23", "SL_23"):
        return sl23()
    if key == "Q8":
        return quaternion()
    m = re.fullmatch(r"([SADC])_?(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise GroupError(f"unknown library group {name!r}")
        if kind == "S":
            return symmetric(n)
        if kind == "A":
            return alternating(n)
        if kind == "C":
            return cyclic(n)
        if n < 3:
            raise GroupError(f"dihedral group D{n} needs n >= 3")
        return dihedral(n)
    raise GroupError(f"unknown library group {name!r}")


def group_from_json(data: dict, cap: int = DEFAULT_CAP) -> PermGroup:
    """Build a group from ``{"name", "degree", "generators": [[cycle, ...], ...]}``."""
    if not isinstance(data, dict):
        raise GroupError("group definition must be a JSON object")
    try:
        degree = int(data["degree"])
        gens_raw = data.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"malformed group definition: {exc}") from None
    if not isinstance(gens_raw, list):
        raise GroupError("generators must be a list")
    gens = []
    for g in gens_raw:
        if not isinstance(g, list) or not all(isinstance(c, list) for c in g):
            raise GroupError(f"generator must be a list of cycles: {g!r}")
        gens.append(Permutation.from_cycles(degree, g))
    return group_from_generators(degree, gens, cap=cap, name=data.get("name"))


def group_to_json(G: PermGroup) -> dict:
    return {
        "name": G.name or "",
        "degree": G.degree,
        "generators": [g.cycles() for g in G.generators],
    }


def resolve_group(ref, cap: int = DEFAULT_CAP) -> PermGroup:
    """A library name, a path to a group JSON file, or an inline definition."""
    if isinstance(ref, dict):
        return group_from_json(ref, cap)
    if not isinstance(ref, str):
        raise GroupError(f"cannot interpret group reference {ref!r}")
    path = Path(ref)
    if ref.endswith(".json") or path.is_file():
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise GroupError(f"cannot read group file {ref}: {exc}") from None
        return group_from_json(data, cap)
    G = library_group(ref)
    if G.order > cap:
        raise CapExceeded(f"{ref} has {G.order} elements, cap is {cap}")
    return G
