"""Exact character tables via the Burnside-Dixon method.

The class-sum multiplication constants are reduced modulo a prime
``p = 1 (mod exponent)`` and the class matrices are simultaneously
diagonalized over F_p.  Each common eigenvector yields the central
character of one irreducible, from which the degree and the values mod p
follow; the values are then lifted to Q(zeta_e) by reading off the
eigenvalue multiplicities of each element with a discrete Fourier
transform over powers of a fixed primitive e-th root of unity mod p.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cyclotomic import Cyclotomic
from .permgroup import PermGroup, class_index_list, exponent, is_subgroup


class CharacterTableError(RuntimeError):
    """Burnside-Dixon could not produce a verified table."""


class ClassFunction:
    """A function on the conjugacy classes of ``group``, in class order."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values):
        values = [v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in values]
        if len(values) != len(group.classes):
            raise ValueError(f"expected {len(group.classes)} class values, got {len(values)}")
        self.group = group
        self.values = values

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _check_same_group(self.group, other.group)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        _check_same_group(self.group, other.group)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, k) -> ClassFunction:
        return ClassFunction(self.group, [v * k for v in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return _same_group(self.group, other.group) and self.values == other.values

    def __hash__(self):
        return hash(tuple(self.values))

    def conj(self) -> ClassFunction:
        return ClassFunction(self.group, [v.conj() for v in self.values])

    def __repr__(self):
        return "ClassFunction(" + ", ".join(str(v) for v in self.values) + ")"


def _same_group(G: PermGroup, H: PermGroup) -> bool:
    return G is H or (G.degree == H.degree and G.elements == H.elements)


def _check_same_group(G, H):
    if not _same_group(G, H):
        raise ValueError("class functions live on different groups")


def trivial_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [1] * len(G.classes))


def regular_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [G.order] + [0] * (len(G.classes) - 1))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    _check_same_group(f.group, g.group)
    sizes = f.group.classes.sizes
    total = Cyclotomic.rational(0)
    for size, a, b in zip(sizes, f.values, g.values):
        if not a.is_zero() and not b.is_zero():
            total = total + a * b.conj() * size
    return total / f.group.order


def restrict(f: ClassFunction, H: PermGroup) -> ClassFunction:
    if not is_subgroup(H, f.group):
        raise ValueError("H is not a subgroup of the class function's group")
    class_of = f.group.classes.class_of
    return ClassFunction(H, [f.values[class_of[rep]] for rep in H.classes.representatives])


@dataclass(frozen=True)
class CharacterTable:
    group: PermGroup
    irreducibles: list[ClassFunction]
    degrees: list[int]
    prime: int

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i) -> ClassFunction:
        return self.irreducibles[i]


def decompose(f: ClassFunction, T: CharacterTable) -> list[int] | None:
    """Multiplicities of each irreducible, or None if ``f`` is not a character."""
    out = []
    for chi in T.irreducibles:
        q = inner_product(f, chi).as_rational()
        if q is None or q.denominator != 1 or q < 0:
            return None
        out.append(int(q))
    return out


# -- Burnside-Dixon -------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def dixon_prime(order: int, exp: int) -> int:
    """Smallest prime p = 1 (mod exp) with p > 2*sqrt(order)."""
    p = exp + 1
    while not (_is_prime(p) and p * p > 4 * order):
        p += exp
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def nullspace_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{x : A x = 0}`` over F_p, one vector per free column."""
    A = [[a % p for a in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [a * inv % p for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-A[i][fc]) % p
        basis.append(x)
    return basis


def class_constants(G: PermGroup) -> list[list[list[int]]]:
    """``c[i][j][k] = #{(x, y) in C_i x C_j : x y = g_k}`` for class reps ``g_k``."""
    cls = G.classes
    r = len(cls)
    cidx = class_index_list(G)
    table, inv = G.table, G.inverse_index
    c = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, rep in enumerate(cls.representatives):
        g = G.index[rep]
        for x in range(G.order):
            y = table[inv[x]][g]
            c[cidx[x]][cidx[y]][k] += 1
    return c


def _split(spaces, M, p):
    """Refine each invariant subspace into eigenspaces of ``M``."""
    out = []
    r = len(M)
    for B in spaces:
        m = len(B)
        if m == 1:
            out.append(B)
            continue
        # columns of B^T are the basis vectors; MB = M B^T
        MB = [[sum(M[i][t] * B[s][t] for t in range(r)) % p for s in range(m)] for i in range(r)]
        found = 0
        for lam in range(p):
            rows = [[(MB[i][s] - lam * B[s][i]) % p for s in range(m)] for i in range(r)]
            ker = nullspace_mod_p(rows, m, p)
            if ker:
                out.append([[sum(c[s] * B[s][t] for s in range(m)) % p for t in range(r)] for c in ker])
                found += len(ker)
                if found == m:
                    break
        if found != m:
            raise CharacterTableError(f"class matrix is not diagonalizable mod {p}")
    return out


def character_table(G: PermGroup) -> CharacterTable:
    cls = G.classes
    r = len(cls)
    order = G.order
    e = exponent(G)
    p = dixon_prime(order, e)
    sizes = cls.sizes

    if r == 1:
        return CharacterTable(G, [trivial_character(G)], [1], p)

    c = class_constants(G)
    # M_i[j][k] = c[i][j][k]; common eigenvector w has w_k = |C_k| chi(g_k) / chi(1)
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for i in range(1, r):
        spaces = _split(spaces, c[i], p)
        if all(len(B) == 1 for B in spaces):
            break
    if not all(len(B) == 1 for B in spaces):
        raise CharacterTableError(f"class matrices do not separate characters mod {p}")

    inv_class = [cls.class_of[rep.inverse()] for rep in cls.representatives]
    z = pow(_primitive_root(p), (p - 1) // e, p)
    z_inv = pow(z, p - 2, p)
    e_inv = pow(e, p - 2, p)
    # powers[i][j] = class of rep_i ** j
    powers = []
    for rep in cls.representatives:
        row, x = [], G.identity
        for _ in range(e):
            row.append(cls.class_of[x])
            x = x * rep
        powers.append(row)

    chars = []
    for (w,) in spaces:
        lead = w[0]
        if not lead:
            raise CharacterTableError("eigenvector vanishes at the identity class")
        w = [a * pow(lead, p - 2, p) % p for a in w]
        s = sum(w[k] * w[inv_class[k]] * pow(sizes[k], p - 2, p) for k in range(r)) % p
        d2 = order * pow(s, p - 2, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if d is None:
            raise CharacterTableError(f"no degree matches d^2 = {d2} mod {p}")
        vals_p = [d * w[k] * pow(sizes[k], p - 2, p) % p for k in range(r)]
        values = []
        for k in range(r):
            counts = []
            for t in range(e):
                acc = sum(vals_p[powers[k][j]] * pow(z_inv, j * t, p) for j in range(e))
                counts.append(acc * e_inv % p)
            if sum(counts) != d:
                raise CharacterTableError(f"lifted multiplicities at class {k} do not sum to the degree")
            values.append(Cyclotomic.from_exponent_counts(e, counts))
        chars.append((d, values))

    trivial = [ch for ch in chars if all(v == 1 for v in ch[1])]
    rest = [ch for ch in chars if ch is not trivial[0]]
    rest.sort(key=lambda ch: (ch[0], [v.sort_key() for v in ch[1]]))
    ordered = trivial[:1] + rest
    T = CharacterTable(G, [ClassFunction(G, vals) for _, vals in ordered], [d for d, _ in ordered], p)
    _verify(T)
    return T


def _verify(T: CharacterTable):
    G = T.group
    if sum(d * d for d in T.degrees) != G.order:
        raise CharacterTableError("sum of squared degrees differs from the group order")
    for i, a in enumerate(T.irreducibles):
        for j, b in enumerate(T.irreducibles[: i + 1]):
            if inner_product(a, b) != int(i == j):
                raise CharacterTableError(f"characters {i} and {j} are not orthonormal")


def column_orthogonality_holds(T: CharacterTable) -> bool:
    sizes = T.group.classes.sizes
    r = len(sizes)
    for a in range(r):
        for b in range(r):
            s = sum((chi[a] * chi[b].conj() for chi in T.irreducibles), Cyclotomic.rational(0))
            expected = Fraction(T.group.order, sizes[a]) if a == b else 0
            if s != expected:
                return False
    return True


# -- serialization and disk cache -----------------------------------------


def table_to_json(T: CharacterTable) -> dict:
    G = T.group
    cls = G.classes
    return {
        "order": G.order,
        "prime": T.prime,
        "classes": [
            {"representative": rep.cycle_string(), "size": size, "element_order": rep.order()}
            for rep, size in zip(cls.representatives, cls.sizes)
        ],
        "degrees": list(T.degrees),
        "characters": [[v.to_json() for v in chi.values] for chi in T.irreducibles],
    }


def table_from_json(G: PermGroup, data: dict) -> CharacterTable:
    reps = [rep.cycle_string() for rep in G.classes.representatives]
    if data.get("order") != G.order or [c["representative"] for c in data["classes"]] != reps:
        raise ValueError("cached table does not match the group's classes")
    chars = [ClassFunction(G, [Cyclotomic.from_json(v) for v in row]) for row in data["characters"]]
    return CharacterTable(G, chars, [int(d) for d in data["degrees"]], int(data["prime"]))


def format_table(T: CharacterTable) -> str:
    """Aligned text rendering, one row per irreducible."""
    cls = T.group.classes
    header = ["", *(f"{rep.order()}[{size}]" for rep, size in zip(cls.representatives, cls.sizes))]
    rows = [header] + [[f"χ{i + 1}", *(str(v) for v in chi.values)] for i, chi in enumerate(T.irreducibles)]
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


def cache_key(G: PermGroup) -> str:
    return G.canonical_hash()


def cached_character_table(G: PermGroup, cache_dir: str | os.PathLike | None) -> CharacterTable:
    """Load the table from ``cache_dir`` or compute and store it atomically."""
    if cache_dir is None:
        return character_table(G)
    path = Path(cache_dir) / f"table-{cache_key(G)}.json"
    if path.is_file():
        try:
            return table_from_json(G, json.loads(path.read_text()))
        except (ValueError, KeyError, json.JSONDecodeError):
            pass
    T = character_table(G)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".table-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(table_to_json(T), fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return T


def table_digest(T: CharacterTable) -> str:
    return hashlib.sha256(json.dumps(table_to_json(T), sort_keys=True).encode()).hexdigest()
