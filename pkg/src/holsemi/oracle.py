"""Brute-force box computations used to cross-check the Hilbert basis.

Everything here works on the dense box ``[0, B]^r`` with numpy boolean
arrays and never looks at the degree bounds used by
:func:`holsemi.holsemigroup.hilbert_basis`.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def _grid(v: Sequence[int], box: int):
    r = len(v)
    idx = np.indices((box + 1,) * r)
    dot = np.tensordot(np.asarray(v, dtype=np.int64), idx, axes=1)
    return idx, dot >= 0, idx.sum(axis=0)


def _shift(arr, offset):
    """Views ``(target, source)`` so that ``target[x] <- source[x - offset]``."""
    n = arr.shape[0]
    tgt = tuple(slice(o, None) for o in offset)
    src = tuple(slice(0, n - o) for o in offset)
    return tgt, src


def semigroup_members(v: Sequence[int], box: int) -> np.ndarray:
    return _grid(v, box)[1]


def minimal_elements(v: Sequence[int], box: int = 12) -> list[tuple[int, ...]]:
    """Nonzero members of ``S(v)`` in the box that are not a sum of two
    nonzero members.

    Members are swept by total degree.  A member of degree t is a sum of two
    nonzero members iff it is ``m + z`` with ``m`` minimal of smaller degree,
    so each newly found minimal element marks ``m + members`` as reducible.
    """
    _, member, deg = _grid(v, box)
    nonzero = member.copy()
    nonzero[(0,) * len(v)] = False
    reducible = np.zeros_like(member)
    found = []
    for t in range(1, len(v) * box + 1):
        level = np.argwhere(member & ~reducible & (deg == t))
        for m in level:
            m = tuple(int(a) for a in m)
            found.append(m)
            tgt, src = _shift(reducible, m)
            reducible[tgt] |= nonzero[src]
    return sorted(found)


def generated(basis: Sequence[Sequence[int]], r: int, box: int) -> np.ndarray:
    """Box points that are non-negative integer combinations of ``basis``."""
    reach = np.zeros((box + 1,) * r, dtype=bool)
    reach[(0,) * r] = True
    for b in basis:
        b = tuple(int(a) for a in b)
        if not any(b) or max(b) > box:
            continue
        tgt, src = _shift(reach, b)
        while True:
            new = reach[tgt] | reach[src]
            if np.array_equal(new, reach[tgt]):
                break
            reach[tgt] = new
    return reach


def check_basis(v: Sequence[int], basis: Sequence[Sequence[int]], box: int = 12) -> dict:
    """Compare a claimed Hilbert basis with the box brute force.

    Returns flags ``matches_minimal``, ``generates_box`` and ``each_needed``.
    """
    r = len(v)
    basis = sorted(tuple(int(a) for a in b) for b in basis)
    member = semigroup_members(v, box)
    each_needed = True
    for i, b in enumerate(basis):
        if max(b) > box:
            continue
        others = basis[:i] + basis[i + 1:]
        # b itself must become unreachable; the sub-box [0, b] suffices
        sub = max(b)
        if generated(others, r, sub)[b]:
            each_needed = False
            break
    return {
        "matches_minimal": minimal_elements(v, box) == basis,
        "generates_box": bool(np.array_equal(generated(basis, r, box), member)),
        "each_needed": each_needed,
    }
