"""Linear characters of subgroups and their induction to the whole group."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .characters import CharacterTable, ClassFunction, character_table, decompose, inner_product, restrict
from .cyclotomic import Cyclotomic
from .permgroup import PermGroup, Permutation, commutator_subgroup, is_subgroup
from .subgroups import SUBGROUP_CAP, subgroup_classes


class LinearCharacter:
    """A homomorphism ``H -> mu_n``, stored as an exponent per element.

    ``exponents[i] = k`` means ``phi(H.elements[i]) = zeta_n^k``.
    """

    __slots__ = ("group", "conductor", "exponents")

    def __init__(self, group: PermGroup, conductor: int, exponents):
        self.group = group
        self.conductor = conductor
        self.exponents = tuple(k % conductor for k in exponents)

    def exponent_of(self, g: Permutation) -> int:
        return self.exponents[self.group.index[g]]

    def value(self, g: Permutation) -> Cyclotomic:
        return Cyclotomic.zeta(self.conductor, self.exponent_of(g))

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def as_class_function(self) -> ClassFunction:
        H = self.group
        return ClassFunction(H, [self.value(rep) for rep in H.classes.representatives])

    def conjugate(self, x: Permutation) -> LinearCharacter:
        """The character ``x h x^-1 -> phi(h)`` on ``x H x^-1``."""
        H = self.group
        xi = x.inverse()
        conj = [x * h * xi for h in H.elements]
        K = PermGroup(H.degree, [x * g * xi for g in H.generators], elements=conj)
        exps = [0] * len(conj)
        for h, k in zip(conj, self.exponents):
            exps[K.index[h]] = k
        return LinearCharacter(K, self.conductor, exps)

    def __repr__(self):
        return f"LinearCharacter(order {self.group.order} subgroup, conductor {self.conductor})"


def _abelian_basis(order: int, mul, ident: int):
    """Split a finite abelian group into cyclic factors.

    ``mul`` multiplies element ids.  Returns ``[(generator, order), ...]``
    with the product of the orders equal to ``order``.
    """
    def power(x, k):
        y = ident
        for _ in range(k):
            y = mul(y, x)
        return y

    def span(gens):
        found = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = mul(y, g)
                    if z not in found:
                        found.add(z)
                        nxt.append(z)
            frontier = nxt
        return found

    basis = []
    sub = {ident}
    while len(sub) < order:
        # element of largest order modulo the current summand
        best, best_n = None, 0
        for x in range(order):
            n, y = 1, x
            while y not in sub:
                y = mul(y, x)
                n += 1
            if n > best_n:
                best, best_n = x, n
        lift = None
        for s in sorted(sub):
            y = mul(best, s)
            if power(y, best_n) == ident:
                lift = y
                break
        if lift is None:
            raise RuntimeError("abelian quotient did not split")
        basis.append((lift, best_n))
        sub = span([g for g, _ in basis])
    return basis


def linear_characters(H: PermGroup) -> list[LinearCharacter]:
    """All ``|H/[H,H]|`` linear characters, trivial first."""
    D = commutator_subgroup(H)
    table = H.table
    d_idx = [H.index[d] for d in D.elements]
    coset_of = {}
    reps = []
    for x in range(H.order):
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for d in d_idx:
            coset_of[table[x][d]] = cid
    m = len(reps)
    if m == 1:
        return [LinearCharacter(H, 1, [0] * H.order)]

    def qmul(a, b):
        return coset_of[table[reps[a]][reps[b]]]

    basis = _abelian_basis(m, qmul, coset_of[0])
    orders = [n for _, n in basis]
    e = math.lcm(*orders)
    coords = {}
    for exps in itertools.product(*(range(n) for n in orders)):
        q = coset_of[0]
        for (g, _), k in zip(basis, exps):
            for _ in range(k):
                q = qmul(q, g)
        coords[q] = exps
    out = []
    for t in itertools.product(*(range(n) for n in orders)):
        weights = [ti * (e // n) for ti, n in zip(t, orders)]
        per_coset = [sum(c * w for c, w in zip(coords[q], weights)) % e for q in range(m)]
        out.append(LinearCharacter(H, e, [per_coset[coset_of[x]] for x in range(H.order)]))
    return out


def induce(phi: LinearCharacter, G: PermGroup) -> ClassFunction:
    """Frobenius induction, evaluated at each class representative of G."""
    H = phi.group
    if not is_subgroup(H, G):
        raise ValueError("the character's domain is not a subgroup of G")
    n = phi.conductor
    in_h = [-1] * G.order
    for h, k in zip(H.elements, phi.exponents):
        in_h[G.index[h]] = k
    table, inv = G.table, G.inverse_index
    values = []
    for rep in G.classes.representatives:
        g = G.index[rep]
        counts = [0] * n
        for x in range(G.order):
            k = in_h[table[table[x][g]][inv[x]]]
            if k >= 0:
                counts[k] += 1
        values.append(Cyclotomic.from_exponent_counts(n, counts, H.order))
    return ClassFunction(G, values)


@dataclass(frozen=True)
class MonomialDatum:
    subgroup_index: int
    character_index: int
    subgroup: PermGroup
    character: LinearCharacter
    induced: ClassFunction
    multiplicities: tuple[int, ...]

    @property
    def index(self) -> int:
        return self.induced.group.order // self.subgroup.order


def monomial_vectors(G: PermGroup, T: CharacterTable | None = None,
                     cap: int = SUBGROUP_CAP) -> list[MonomialDatum]:
    """Induced decomposition of every (subgroup class, linear character) pair."""
    if T is None:
        T = character_table(G)
    out = []
    for si, sc in enumerate(subgroup_classes(G, cap)):
        for ci, phi in enumerate(linear_characters(sc.group)):
            ind = induce(phi, G)
            mult = decompose(ind, T)
            if mult is None:
                raise ArithmeticError(f"induced character from subgroup {si} failed to decompose")
            out.append(MonomialDatum(si, ci, sc.group, phi, ind, tuple(mult)))
    return out


def frobenius_reciprocity_check(phi: LinearCharacter, chi: ClassFunction) -> bool:
    G = chi.group
    lhs = inner_product(induce(phi, G), chi)
    rhs = inner_product(phi.as_class_function(), restrict(chi, phi.group))
    return lhs == rhs
