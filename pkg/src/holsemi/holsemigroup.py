"""The holomorphy semigroup at a point as an integer cone.

Products ``f_1^k_1 ... f_r^k_r`` are identified with exponent vectors
``k`` in Z_+^r.  Given hypothetical orders ``v_j = ord(f_j)`` at the point,
a product is holomorphic there iff ``<k, v> >= 0``, so the semigroup of
holomorphic products is ``S(v) = {k >= 0 : <k, v> >= 0}``.

Indices in this module are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def _dot(k: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(k, v))


def _unit(r: int, j: int) -> Vector:
    return tuple(int(i == j) for i in range(r))


def in_semigroup(k: Sequence[int], v: Sequence[int]) -> bool:
    if len(k) != len(v):
        raise ValueError(f"length mismatch: {len(k)} vs {len(v)}")
    return _dot(k, v) >= 0


def m_vector(v: Sequence[int], l: int) -> Vector:
    """``m_j = min{m >= 0 : m*v_l + v_j >= 0}``; needs ``v_l > 0``."""
    if v[l] <= 0:
        raise ValueError(f"v[{l}] = {v[l]} is not positive")
    return tuple(0 if vj >= 0 else -(vj // v[l]) for vj in v)


def predicted_basis(v: Sequence[int], l: int) -> list[Vector]:
    """``m_j e_l + e_j`` for each j, in index order."""
    m = m_vector(v, l)
    r = len(v)
    return [tuple(int(i == j) + (m[j] if i == l else 0) for i in range(r)) for j in range(r)]


@dataclass(frozen=True)
class HilbertBasis:
    v: Vector
    elements: tuple[Vector, ...]  # sorted lexicographically

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, k):
        return tuple(k) in self.elements


def _compositions(n_vars: int, max_total: int):
    """Non-negative integer vectors of length ``n_vars`` with sum <= max_total."""
    if n_vars == 0:
        yield ()
        return
    for first in range(max_total + 1):
        for rest in _compositions(n_vars - 1, max_total - first):
            yield (first,) + rest


def hilbert_basis(v: Sequence[int]) -> HilbertBasis:
    """Minimal generating set of ``S(v)`` by graded completion.

    Irreducible elements other than the unit vectors on ``v_j >= 0`` are
    supported on the positive and negative coordinates only.  Writing
    ``<x, v> = s`` as ``sum_P v_p x_p = sum_N |v_n| x_n + s`` and applying the
    classical size bound for minimal solutions of one linear Diophantine
    equation, such an element satisfies ``sum_P x_p <= max_N |v_n|`` and
    ``sum_N x_n <= max_P v_p``.  Candidates inside that region are scanned by
    total degree and kept unless some already kept element ``h <= x`` leaves
    a remainder ``x - h`` in ``S(v)``.
    """
    v = tuple(int(a) for a in v)
    r = len(v)
    if r < 1:
        raise ValueError("need at least one coordinate")
    pos = [j for j in range(r) if v[j] > 0]
    neg = [j for j in range(r) if v[j] < 0]
    kept = [_unit(r, j) for j in range(r) if v[j] >= 0]
    if pos and neg:
        bound_p = max(-v[n] for n in neg)
        bound_n = max(v[p] for p in pos)
        cands = []
        for xp in _compositions(len(pos), bound_p):
            sp = _dot(xp, [v[p] for p in pos])
            if sp == 0:
                continue
            # subtracting a unit vector e_p must not stay inside S(v)
            cap = min(v[p] for p, a in zip(pos, xp) if a)
            for xn in _compositions(len(neg), bound_n):
                s = sp + _dot(xn, [v[n] for n in neg])
                if 0 <= s < cap and any(xn):
                    x = [0] * r
                    for p, a in zip(pos, xp):
                        x[p] = a
                    for n, a in zip(neg, xn):
                        x[n] = a
                    cands.append((sum(xp) + sum(xn), tuple(x), s))
        cands.sort()
        extra = []
        for _, x, s in cands:
            reducible = False
            for h in extra:
                if all(a <= b for a, b in zip(h, x)) and s - _dot(h, v) >= 0:
                    reducible = True
                    break
            if not reducible:
                extra.append(x)
        kept.extend(extra)
    return HilbertBasis(v, tuple(sorted(kept)))


def is_factorial(v: Sequence[int]) -> bool:
    return len(hilbert_basis(v)) == len(v)


def factor_over_basis(k: Sequence[int], basis: HilbertBasis | Sequence[Sequence[int]],
                      v: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Non-negative coefficients ``c`` with ``sum c_i b_i = k``, or None.

    The first solution in lexicographic coefficient order is returned; it
    is the only one when the basis has ``r`` elements.
    """
    if isinstance(basis, HilbertBasis):
        v = basis.v if v is None else v
        elements = list(basis.elements)
    else:
        elements = [tuple(b) for b in basis]
    k = tuple(k)
    if v is not None and not in_semigroup(k, v):
        raise ValueError(f"{k} is not in S({tuple(v)})")
    if any(not any(b) for b in elements):
        raise ValueError("basis contains the zero vector")

    n = len(elements)
    coeffs = [0] * n

    def search(i, rest):
        if not any(rest):
            return True
        if i == n:
            return False
        b = elements[i]
        top = min(rest[t] // b[t] for t in range(len(b)) if b[t])
        for c in range(top, -1, -1):
            coeffs[i] = c
            if search(i + 1, tuple(x - c * y for x, y in zip(rest, b))):
                return True
        coeffs[i] = 0
        return False

    return tuple(coeffs) if search(0, k) else None


# -- admissibility -----------------------------------------------------------


@dataclass(frozen=True)
class ConstraintSet:
    degrees: Vector
    monomial: tuple[Vector, ...] = ()
    use_hecke_dim1: bool = True
    use_induced_hecke: bool = True
    use_rhoades: bool = False

    def __post_init__(self):
        r = len(self.degrees)
        if any(d <= 0 for d in self.degrees):
            raise ValueError("degrees must be positive")
        for a in self.monomial:
            if len(a) != r:
                raise ValueError("monomial vector length differs from the number of characters")
        # dedupe; sparse vectors first since they fail fastest
        uniq = sorted(set(tuple(a) for a in self.monomial), key=lambda a: (sum(1 for x in a if x), a))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "monomial", tuple(uniq))

    @property
    def r(self) -> int:
        return len(self.degrees)


@dataclass
class Admissibility:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def admissible(v: Sequence[int], C: ConstraintSet, report_all: bool = True) -> Admissibility:
    """Check ``v`` against every enabled holomorphy constraint."""
    if len(v) != C.r:
        raise ValueError(f"length mismatch: {len(v)} vs {C.r}")
    out = Admissibility(True)

    def fail(msg):
        out.ok = False
        out.violations.append(msg)
        return not report_all

    d = C.degrees
    if C.use_hecke_dim1:
        for j, (dj, vj) in enumerate(zip(d, v)):
            if dj == 1 and vj < 0 and fail(f"hecke_dim1[{j}]"):
                return out
    zeta = _dot(d, v)
    if zeta < 0 and fail("zeta_K"):
        return out
    if C.use_induced_hecke:
        for a in C.monomial:
            if _dot(a, v) < 0 and fail(f"induced_hecke{list(a)}"):
                return out
    if C.use_rhoades:
        for k, (dk, vk) in enumerate(zip(d, v)):
            if dk == 2 and zeta + vk < 0 and fail(f"rhoades[{k}]"):
                return out
    return out


# -- box verification of the two equivalence theorems ------------------------


@dataclass
class Theorem1Report:
    searched: int
    admissible: int
    counterexamples: list[Vector]

    def to_json(self) -> dict:
        return {"searched": self.searched, "admissible": self.admissible,
                "counterexamples": [list(c) for c in self.counterexamples]}


def _box(r: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=r)


def verify_theorem1(degrees: Sequence[int], monomial: Iterable[Sequence[int]], bound: int = 3) -> Theorem1Report:
    """Admissible order vectors with a pole whose semigroup is still factorial.

    For an almost monomial group the list is empty.
    """
    C = ConstraintSet(tuple(degrees), tuple(tuple(a) for a in monomial))
    searched = n_adm = 0
    bad = []
    for v in _box(C.r, bound):
        searched += 1
        if not admissible(v, C, report_all=False):
            continue
        n_adm += 1
        if min(v) < 0 and is_factorial(v):
            bad.append(v)
    return Theorem1Report(searched, n_adm, bad)


@dataclass
class Audit:
    """Proof-step recomputation for one factorial order vector with a pole."""
    v: Vector
    basis_is_predicted: bool
    a: Vector | None  # coefficients of zeta_K over the predicted basis
    m: Vector
    identity_holds: bool
    rhoades_admissible: bool

    def to_json(self) -> dict:
        return {"v": list(self.v), "basis_is_predicted": self.basis_is_predicted,
                "a": None if self.a is None else list(self.a), "m": list(self.m),
                "identity_holds": self.identity_holds, "rhoades_admissible": self.rhoades_admissible}


@dataclass
class Theorem2Report:
    searched: int
    admissible: int
    counterexamples: list[Vector]
    audits: list[Audit]

    def to_json(self) -> dict:
        return {"searched": self.searched, "admissible": self.admissible,
                "counterexamples": [list(c) for c in self.counterexamples],
                "audits": [a.to_json() for a in self.audits]}


def audit_candidate(v: Sequence[int], degrees: Sequence[int], l: int, rhoades_ok: bool = False) -> Audit:
    """Re-derive the intermediate identities of the small-dimension argument.

    With ``H = {m_j e_l + e_j}`` and ``d = sum_j a_j (m_j e_l + e_j)`` one
    gets ``d_j = a_j`` for ``j != l`` and ``d_l = a_l + sum_{j != l} m_j d_j``.
    """
    v = tuple(v)
    hb = hilbert_basis(v)
    pred = predicted_basis(v, l)
    m = m_vector(v, l)
    a = factor_over_basis(degrees, pred, v)
    ok = a is not None
    if ok:
        ok = all(a[j] == degrees[j] for j in range(len(v)) if j != l)
        ok = ok and degrees[l] == a[l] + sum(m[j] * degrees[j] for j in range(len(v)) if j != l)
    return Audit(v, tuple(sorted(pred)) == hb.elements, a, m, ok, rhoades_ok)


def verify_theorem2(degrees: Sequence[int], l: int, bound: int = 3) -> Theorem2Report:
    """Box search for factorial counterexamples with ``v_l > 0`` and ``d_l <= 2``.

    Every factorial vector with a pole that passes the zeta and degree-one
    constraints is audited, whether or not the Rhoades constraint later
    removes it; counterexamples are those that survive all constraints.
    """
    degrees = tuple(degrees)
    if not 0 <= l < len(degrees):
        raise ValueError(f"index {l} out of range")
    if degrees[l] > 2:
        raise ValueError(f"d[{l}] = {degrees[l]} exceeds 2")
    base = ConstraintSet(degrees)
    full = ConstraintSet(degrees, use_rhoades=True)
    searched = n_adm = 0
    bad, audits = [], []
    for v in _box(len(degrees), bound):
        if v[l] <= 0:
            continue
        searched += 1
        if not admissible(v, base, report_all=False):
            continue
        rho = bool(admissible(v, full, report_all=False))
        n_adm += rho
        if min(v) < 0 and is_factorial(v):
            audits.append(audit_candidate(v, degrees, l, rho))
            if rho:
                bad.append(v)
    return Theorem2Report(searched, n_adm, bad, audits)
