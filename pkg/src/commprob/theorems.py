"""Verification harness: per-group analysis reports and machine checks of
the commuting-probability threshold statements over concrete groups.

Each verifier returns a :class:`Verdict` rather than raising on hypothesis
failures, so a group that merely fails a precondition (for example a normal
subgroup with no complement) is reported distinctly and never counted as a
counterexample.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .perm import FiniteGroup
from .constructors import named
from .isoclinism import are_isoclinic, is_stem
from .probability import (
    BOUND_SATISFIED,
    BOUND_VACUOUS,
    average_class_size,
    check_character_bound,
    class_count,
    commuting_probability,
    derived_order_bound_witness,
    gallagher_check,
)
from .structure import (
    Subgroup,
    as_group,
    center,
    classes_inside,
    derived_subgroup,
    find_complement,
    is_abelian,
    is_nilpotent,
    is_normal,
    is_solvable,
    is_supersolvable,
    normal_subgroups,
    quotient,
)

S_RANGE = (2, 3, 4, 5, 6)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one statement on one group.

    ``holds`` is True whenever the statement is not applicable (vacuous
    truth); ``precondition_ok`` is False when the inputs do not meet the
    statement's hypotheses, which is a distinct state from failure.
    """

    statement: str
    applicable: bool
    holds: bool
    precondition_ok: bool = True
    note: str = ""

    def is_failure(self) -> bool:
        return self.precondition_ok and self.applicable and not self.holds

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "applicable": self.applicable,
            "holds": self.holds,
            "precondition_ok": self.precondition_ok,
            "note": self.note,
        }


@dataclass
class GroupReport:
    name: str
    order: int
    class_count: int
    d: Fraction
    acs: Fraction
    parity: str
    center_order: int
    derived_order: int
    derived_index: int
    abelian: bool
    nilpotent: bool
    supersolvable: bool
    solvable: bool
    stem: bool
    isoclinic_to_A4: bool
    quotient_by_center_isoclinic_to_A4: bool
    isoclinic_to_C5C5C3: bool
    theorem_verdicts: list[Verdict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "class_count": self.class_count,
            "d": _frac(self.d),
            "acs": _frac(self.acs),
            "parity": self.parity,
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "derived_index": self.derived_index,
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "supersolvable": self.supersolvable,
            "solvable": self.solvable,
            "stem": self.stem,
            "isoclinic_to_A4": self.isoclinic_to_A4,
            "quotient_by_center_isoclinic_to_A4": self.quotient_by_center_isoclinic_to_A4,
            "isoclinic_to_C5C5C3": self.isoclinic_to_C5C5C3,
            "verdicts": [v.to_dict() for v in self.theorem_verdicts],
        }


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@functools.lru_cache(maxsize=None)
def _reference(key: str) -> FiniteGroup:
    return named(key)


def _normal_descriptor(G: FiniteGroup, N: Subgroup) -> str:
    same_order = [m for m in normal_subgroups(G) if m.order == N.order]
    if len(same_order) == 1:
        return f"N=order{N.order}"
    pos = next(
        i for i, m in enumerate(same_order) if m.member_indices == N.member_indices
    )
    return f"N=order{N.order}#{pos}"


# -- threshold verifiers -------------------------------------------------------


def verify_supersolvable_5_16(G: FiniteGroup) -> Verdict:
    """d(G) > 5/16 forces: supersolvable, or isoclinic to A4, or central
    quotient isoclinic to A4."""
    d = commuting_probability(G)
    applicable = d > Fraction(5, 16)
    if not applicable:
        return Verdict("d>5/16", False, True, note="not applicable")
    a4 = _reference("A4")
    if is_supersolvable(G):
        return Verdict("d>5/16", True, True, note="supersolvable")
    if are_isoclinic(G, a4):
        return Verdict("d>5/16", True, True, note="isoclinic to A4")
    if are_isoclinic(quotient(G, center(G)), a4):
        return Verdict("d>5/16", True, True, note="central quotient isoclinic to A4")
    return Verdict("d>5/16", True, False, note="no branch holds")


def verify_supersolvable_1_3(G: FiniteGroup) -> Verdict:
    """d(G) >= 1/3 forces: supersolvable or isoclinic to A4."""
    d = commuting_probability(G)
    applicable = d >= Fraction(1, 3)
    if not applicable:
        return Verdict("d>=1/3", False, True, note="not applicable")
    if is_supersolvable(G):
        return Verdict("d>=1/3", True, True, note="supersolvable")
    if are_isoclinic(G, _reference("A4")):
        return Verdict("d>=1/3", True, True, note="isoclinic to A4")
    return Verdict("d>=1/3", True, False, note="no branch holds")


def verify_odd_35_243(G: FiniteGroup) -> Verdict:
    """For odd order, d(G) > 35/243 forces: supersolvable or isoclinic to
    (C5xC5):C3."""
    if G.order % 2 == 0:
        return Verdict("odd,d>35/243", False, True, note="not applicable: even order")
    d = commuting_probability(G)
    if not d > Fraction(35, 243):
        return Verdict("odd,d>35/243", False, True, note="not applicable")
    if is_supersolvable(G):
        return Verdict("odd,d>35/243", True, True, note="supersolvable")
    if are_isoclinic(G, _reference("(C5xC5):C3")):
        return Verdict("odd,d>35/243", True, True, note="isoclinic to (C5xC5):C3")
    return Verdict("odd,d>35/243", True, False, note="no branch holds")


def _is_klein(G: FiniteGroup, N: Subgroup) -> bool:
    return N.order == 4 and all(
        G.elements[m].order() <= 2 for m in N.member_indices
    )


def _subgroup_is_abelian(G: FiniteGroup, N: Subgroup) -> bool:
    return all(
        G.mul(a, b) == G.mul(b, a)
        for a in N.member_indices
        for b in N.member_indices
    )


def verify_class_size_theorem(G: FiniteGroup, N: Subgroup, s: int) -> Verdict:
    """If d(G) > 1/s and G splits over the abelian normal nontrivial N,
    some nontrivial class of G inside N has size at most s - 1.

    The smallest such class is reported, so one witness certifies every
    larger s as well; the note also records the consequent disjunction
    (nontrivial center, or a proper subgroup of small index obtained as the
    centralizer of a witness element).
    """
    if s < 2:
        raise ValueError("the class-size statement needs an integer s >= 2")
    stmt = f"d>1/{s}:class-in-N;{_normal_descriptor(G, N)}"
    if not is_normal(G, N):
        return Verdict(stmt, False, True, False, "precondition: N is not normal")
    if N.is_trivial():
        return Verdict(stmt, False, True, False, "precondition: N is trivial")
    if not _subgroup_is_abelian(G, N):
        return Verdict(stmt, False, True, False, "precondition: N is not abelian")
    if N.is_whole():
        return Verdict(stmt, False, True, False, "precondition: N is the whole group")
    if find_complement(G, N) is None:
        return Verdict(stmt, False, True, False, "precondition: G does not split over N")
    d = commuting_probability(G)
    if not d > Fraction(1, s):
        return Verdict(stmt, False, True, note="not applicable")
    nontrivial = [
        c for c in classes_inside(G, N) if c.representative != G.identity_index
    ]
    best = min(nontrivial, key=lambda c: (c.size, c.representative), default=None)
    if best is None or best.size > s - 1:
        return Verdict(stmt, True, False, note="no class small enough")
    if best.size == 1:
        consequent = "center is nontrivial"
    else:
        consequent = (
            f"centralizer of element {best.representative} is a proper subgroup "
            f"of index {best.size}"
        )
    return Verdict(
        stmt,
        True,
        True,
        note=f"class of size {best.size} at representative {best.representative}; "
        + consequent,
    )


def verify_klein_fixed_point(G: FiniteGroup, N: Subgroup) -> Verdict:
    """If G = (C2 x C2) : H and d(G) > 1/3, some nontrivial element of the
    Klein subgroup is fixed by conjugation, i.e. lies in the center."""
    stmt = f"klein-fixed-point;{_normal_descriptor(G, N)}"
    if not is_normal(G, N):
        return Verdict(stmt, False, True, False, "precondition: N is not normal")
    if not _is_klein(G, N):
        return Verdict(stmt, False, True, False, "precondition: N is not C2xC2")
    if N.is_whole():
        has_complement = True  # the trivial subgroup complements N = G
    else:
        has_complement = find_complement(G, N) is not None
    if not has_complement:
        return Verdict(stmt, False, True, False, "precondition: G does not split over N")
    d = commuting_probability(G)
    if not d > Fraction(1, 3):
        return Verdict(stmt, False, True, note="not applicable")
    z = center(G)
    fixed = [
        m for m in N.member_indices if m != G.identity_index and m in z
    ]
    if fixed:
        return Verdict(stmt, True, True, note=f"central element {fixed[0]} in N")
    return Verdict(stmt, True, False, note="no nontrivial fixed element")


# -- per-group aggregation -----------------------------------------------------


def analyze(G: FiniteGroup, name: str = "", s_values: tuple[int, ...] = S_RANGE) -> GroupReport:
    """Full report for one group: exact invariants, classifier flags, and
    every verdict the harness knows how to state about G."""
    d = commuting_probability(G)
    z = center(G)
    derived = derived_subgroup(G)
    a4 = _reference("A4")
    report = GroupReport(
        name=name,
        order=G.order,
        class_count=class_count(G),
        d=d,
        acs=average_class_size(G),
        parity="odd" if G.order % 2 else "even",
        center_order=z.order,
        derived_order=derived.order,
        derived_index=G.order // derived.order,
        abelian=is_abelian(G),
        nilpotent=is_nilpotent(G),
        supersolvable=is_supersolvable(G),
        solvable=is_solvable(G),
        stem=is_stem(G),
        isoclinic_to_A4=are_isoclinic(G, a4),
        quotient_by_center_isoclinic_to_A4=are_isoclinic(quotient(G, z), a4),
        isoclinic_to_C5C5C3=are_isoclinic(G, _reference("(C5xC5):C3")),
    )
    verdicts = report.theorem_verdicts
    verdicts.append(verify_supersolvable_5_16(G))
    verdicts.append(verify_supersolvable_1_3(G))
    verdicts.append(verify_odd_35_243(G))
    verdicts.append(
        Verdict("char-bound,c=4", True, check_character_bound(G, 4))
    )
    odd = G.order % 2 == 1
    verdicts.append(
        Verdict(
            "char-bound,c=9",
            odd,
            check_character_bound(G, 9) if odd else True,
            note="" if odd else "not applicable: even order",
        )
    )
    bounds = derived_order_bound_witness(G)
    verdicts.append(
        Verdict(
            "d>5/16=>|G'|<12",
            bounds.small_bound != BOUND_VACUOUS,
            bounds.small_bound in (BOUND_SATISFIED, BOUND_VACUOUS),
            note=bounds.small_bound,
        )
    )
    verdicts.append(
        Verdict(
            "odd,d>35/243=>|G'|<27",
            bounds.odd_bound != BOUND_VACUOUS,
            bounds.odd_bound in (BOUND_SATISFIED, BOUND_VACUOUS),
            note=bounds.odd_bound,
        )
    )
    for N in normal_subgroups(G):
        ndesc = _normal_descriptor(G, N)
        res = gallagher_check(G, N)
        verdicts.append(
            Verdict(
                f"k(G)<=k(G/N)k(N);{ndesc}",
                True,
                res.holds,
                note="equality" if res.equality else "strict or centralizers differ",
            )
        )
        dq = commuting_probability(quotient(G, N))
        dn = commuting_probability(as_group(G, N))
        verdicts.append(
            Verdict(f"d(G)<=d(G/N)d(N);{ndesc}", True, d <= dq * dn)
        )
    for N in normal_subgroups(G):
        if N.is_trivial() or N.is_whole():
            continue
        if not _subgroup_is_abelian(G, N):
            continue
        for s in s_values:
            verdicts.append(verify_class_size_theorem(G, N, s))
    for N in normal_subgroups(G):
        if _is_klein(G, N):
            verdicts.append(verify_klein_fixed_point(G, N))
    return report


# -- catalog-wide run ----------------------------------------------------------


def summarize(reports: list[GroupReport]) -> dict:
    total = applicable = holds = vacuous = skips = failures = 0
    for report in reports:
        for v in report.theorem_verdicts:
            total += 1
            if not v.precondition_ok:
                skips += 1
            elif v.applicable:
                applicable += 1
                if v.holds:
                    holds += 1
                else:
                    failures += 1
            else:
                vacuous += 1
    return {
        "groups": len(reports),
        "verdicts": total,
        "applicable": applicable,
        "holds": holds,
        "vacuous": vacuous,
        "precondition_skips": skips,
        "failures": failures,
    }


def run_catalog_verification(
    names: list[str] | None = None,
    s_values: tuple[int, ...] = S_RANGE,
) -> tuple[list[GroupReport], dict]:
    """Analyze every catalog group (or the named subset, kept in canonical
    catalog order) and summarize all verdicts."""
    from .constructors import catalog_keys

    keys = catalog_keys()
    if names is not None:
        wanted = set(names)
        keys = [k for k in keys if k in wanted]
    reports = [analyze(named(k), name=k, s_values=s_values) for k in keys]
    return reports, summarize(reports)
