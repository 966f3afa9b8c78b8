"""Monomial and almost monomial decisions with explicit witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import CharacterTable, character_table, decompose
from .induction import MonomialDatum, induce, monomial_vectors
from .permgroup import PermGroup


@dataclass
class MonomialityReport:
    group: PermGroup
    table: CharacterTable
    data: list[MonomialDatum]

    @classmethod
    def build(cls, G: PermGroup, T: CharacterTable | None = None) -> MonomialityReport:
        T = T if T is not None else character_table(G)
        return cls(G, T, monomial_vectors(G, T))


@dataclass
class MonomialResult:
    holds: bool
    witnesses: dict[int, MonomialDatum] = field(default_factory=dict)
    failure: int | None = None  # first character that is not monomial


@dataclass
class AlmostMonomialResult:
    holds: bool
    witnesses: dict[tuple[int, int], MonomialDatum] = field(default_factory=dict)
    failure: tuple[int, int] | None = None  # first (contained, excluded) pair with no witness


def _report(G, report):
    return report if report is not None else MonomialityReport.build(G)


def is_monomial(G: PermGroup, report: MonomialityReport | None = None,
                early_exit: bool = False) -> MonomialResult:
    """Every irreducible equals some induced linear character."""
    report = _report(G, report)
    r = len(report.table)
    result = MonomialResult(True)
    for i in range(r):
        unit = tuple(int(j == i) for j in range(r))
        hit = next((d for d in report.data if d.multiplicities == unit), None)
        if hit is None:
            result.holds = False
            if result.failure is None:
                result.failure = i
            if early_exit:
                break
        else:
            result.witnesses[i] = hit
    return result


def is_almost_monomial(G: PermGroup, report: MonomialityReport | None = None,
                       early_exit: bool = False) -> AlmostMonomialResult:
    """For every ordered pair ``i != j`` some induced linear character contains
    ``chi_i`` and not ``chi_j``."""
    report = _report(G, report)
    r = len(report.table)
    result = AlmostMonomialResult(True)
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            hit = next((d for d in report.data
                        if d.multiplicities[i] >= 1 and d.multiplicities[j] == 0), None)
            if hit is None:
                result.holds = False
                if result.failure is None:
                    result.failure = (i, j)
                if early_exit:
                    return result
            else:
                result.witnesses[(i, j)] = hit
    return result


def verify_witness(datum: MonomialDatum, T: CharacterTable, contains: int, excludes: int | None = None) -> bool:
    """Recompute the induced decomposition and check the claimed pattern."""
    mult = decompose(induce(datum.character, T.group), T)
    if mult is None or mult[contains] < 1:
        return False
    if excludes is None:
        return sum(mult) == 1
    return mult[excludes] == 0
