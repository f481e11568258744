"""Sublattice colorings and color coincidences.

A coloring assigns one color per coset of a finite-index sublattice; the
color of a point is its coset label. For a coincidence isometry R the CSLs
of the parent inherit colorings, and the induced relation between the colors
of the inverse-side CSL and the forward-side CSL carries the arithmetic
linking the two coincidence indices: with

    s = [G1(R) : R G2 ∩ G1(R)]      t = [G1(R) : G2 ∩ G1(R)]
    u = [G2 ∩ G1(R) : G2(R)]        v = [R G2 ∩ G1(R) : G2(R)]

one has m·Σ2 = t·u·Σ1 = s·v·Σ1, with s, t dividing m and u | s, v | t.

R is a color coincidence when it maps each inverse-side color class onto a
single forward-side color class; this is equivalent to R fixing the zero
color, i.e. R[G2 ∩ G1(R^-1)] = G2 ∩ G1(R), which is the test implemented
here (the definitional all-colors check stays in the test suite). All
computations are structural (lattice intersections, indices, and affine
coset solves); no point enumeration happens outside the test oracles.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence, Union

from .csl import Isometry, csl_lattice, sigma
from .lattice import (
    CosetLabel,
    Lattice,
    QuotientStructure,
    Vector,
    _index_unchecked,
    _solve_coset_point,
    affine_intersect,
    index,
    intersect,
    is_sublattice,
    lattice_sum,
    quotient,
)

__all__ = [
    "Coloring",
    "SigmaRelation",
    "ColorReport",
    "SpecialCaseReport",
    "ProductReport",
    "make_coloring",
    "colors_meeting",
    "stuv",
    "sigma2_via_formula",
    "sigma_relation",
    "is_color_coincidence",
    "color_permutation",
    "color_report",
    "classify_special_case",
    "product_color_coincidence_check",
    "closure_search",
    "permutation_cycles",
]


class InternalConsistencyError(AssertionError):
    """A theorem-backed identity failed; this signals a bug, not bad input."""


class Coloring:
    """Coloring of a parent lattice determined by a finite-index sublattice."""

    __slots__ = ("parent", "sub", "quotient")

    def __init__(self, parent: Lattice, sub: Lattice):
        if not is_sublattice(sub, parent):
            raise ValueError("the coloring lattice must be a sublattice of the parent")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "quotient", quotient(parent, sub))

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    @property
    def m(self) -> int:
        return self.quotient.m

    @property
    def labels(self) -> tuple[CosetLabel, ...]:
        return self.quotient.labels

    def color_of(self, p: Sequence[Union[Fraction, int]]) -> CosetLabel:
        return self.quotient.coset_of(p)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Coloring)
            and self.parent == other.parent
            and self.sub == other.sub
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.sub))

    def __repr__(self) -> str:
        return f"Coloring(m={self.m}, dim={self.parent.dim})"


def make_coloring(parent: Lattice, sub: Lattice) -> Coloring:
    return Coloring(parent, sub)


@dataclass(frozen=True)
class _Geometry:
    """The sublattice diagram around one coincidence isometry."""

    g1r: Lattice        # G1(R)
    g1rinv: Lattice     # G1(R^-1)
    b_fwd: Lattice      # G2 ∩ G1(R)
    b_inv: Lattice      # G2 ∩ G1(R^-1)
    a_fwd: Lattice      # R G2 ∩ G1(R) = R[G2 ∩ G1(R^-1)]
    g2r: Lattice        # G2(R)
    sigma1: int
    sigma2: int


@functools.lru_cache(maxsize=512)
def _geometry(col: Coloring, iso: Isometry) -> _Geometry:
    parent, sub = col.parent, col.sub
    g1r = csl_lattice(parent, iso)
    # G1(R^-1) = R^-1 G1(R), saving one intersection
    inv_matrix = iso.matrix.transpose()
    g1rinv = g1r.transformed(inv_matrix)
    b_fwd = intersect(sub, g1r)
    b_inv = intersect(sub, g1rinv)
    a_fwd = b_inv.transformed(iso.matrix)
    g2r = csl_lattice(sub, iso)
    sigma1 = _index_unchecked(parent, g1r)
    sigma2 = _index_unchecked(sub, g2r)
    return _Geometry(g1r, g1rinv, b_fwd, b_inv, a_fwd, g2r, sigma1, sigma2)


def colors_meeting(col: Coloring, gp: Lattice) -> frozenset[CosetLabel]:
    """Labels of the cosets of the coloring sublattice that meet ``gp``.

    Computed structurally as the subgroup (sub + gp)/sub pushed through the
    coloring's labels; no point enumeration.
    """
    if not is_sublattice(gp, col.parent):
        raise ValueError("colors are only defined for subsets of the parent lattice")
    su = lattice_sum(col.sub, gp)
    q = quotient(su, col.sub)
    return frozenset(col.quotient.coset_of(rep) for rep in q.coset_reps)


def stuv(col: Coloring, iso: Isometry) -> tuple[int, int, int, int]:
    """The four indices around G2(R) in the sublattice diagram.

    Containments hold by construction, so determinant ratios suffice.
    """
    g = _geometry(col, iso)
    s = _index_unchecked(g.g1r, g.a_fwd)
    t = _index_unchecked(g.g1r, g.b_fwd)
    u = _index_unchecked(g.b_fwd, g.g2r)
    v = _index_unchecked(g.a_fwd, g.g2r)
    return s, t, u, v


def sigma2_via_formula(col: Coloring, iso: Isometry, sigma1: int) -> int:
    """Sublattice coincidence index from the coloring data: t·u·Σ1/m.

    Consistency failures here mean an implementation bug, never bad input.
    """
    s, t, u, v = stuv(col, iso)
    m = col.m
    if t * u != s * v:
        raise InternalConsistencyError(f"t*u = {t*u} differs from s*v = {s*v}")
    if (t * u * sigma1) % m != 0:
        raise InternalConsistencyError(
            f"m = {m} does not divide t*u*sigma1 = {t * u * sigma1}"
        )
    value = (t * u * sigma1) // m
    actual = _geometry(col, iso).sigma2
    if value != actual:
        raise InternalConsistencyError(
            f"formula gives {value}, direct index gives {actual}"
        )
    return value


@dataclass(frozen=True)
class SigmaRelation:
    """Which inverse-side colors are (partially) sent onto which forward-side
    colors; always contains the zero/zero pair."""

    pairs: frozenset[tuple[CosetLabel, CosetLabel]]

    def domain(self) -> frozenset[CosetLabel]:
        return frozenset(j for j, _ in self.pairs)

    def codomain(self) -> frozenset[CosetLabel]:
        return frozenset(k for _, k in self.pairs)

    def is_bijection(self) -> bool:
        """Functional and injective on its domain and codomain."""
        return (
            len(self.pairs) == len(self.domain()) == len(self.codomain())
        )

    def sorted_pairs(self) -> tuple[tuple[CosetLabel, CosetLabel], ...]:
        return tuple(sorted(self.pairs))


def _coset_points(
    col: Coloring, target: Lattice
) -> dict[CosetLabel, Optional[Vector]]:
    """For each color, some point of (rep + sub) ∩ target, or None.

    Representatives need not be canonical here: any member of the affine
    intersection determines the same structural data downstream.
    """
    out: dict[CosetLabel, Optional[Vector]] = {}
    for label, rep in zip(col.quotient.labels, col.quotient.coset_reps):
        if all(r == 0 for r in label):
            out[label] = tuple(Fraction(0) for _ in rep)
        else:
            out[label] = _solve_coset_point(rep, col.sub, target)
    return out


def sigma_relation(col: Coloring, iso: Isometry) -> SigmaRelation:
    """The exact color relation, computed structurally.

    The coset of color j inside G1(R^-1) maps to R x_j + (R G2 ∩ G1(R));
    it meets the coset of color k inside G1(R) iff the difference of the
    representatives lies in the sum of the two intersection lattices.
    """
    g = _geometry(col, iso)
    xs = _coset_points(col, g.g1rinv)
    ys = _coset_points(col, g.g1r)
    su = lattice_sum(g.a_fwd, g.b_fwd)
    pairs = set()
    for lj, xj in xs.items():
        if xj is None:
            continue
        rxj = iso.apply(xj)
        for lk, yk in ys.items():
            if yk is None:
                continue
            if su.contains(tuple(a - b for a, b in zip(yk, rxj))):
                pairs.add((lj, lk))
    return SigmaRelation(frozenset(pairs))


def is_color_coincidence(col: Coloring, iso: Isometry) -> bool:
    """Does R send the color of the sublattice onto itself?

    Tested as the lattice equality R[G2 ∩ G1(R^-1)] = G2 ∩ G1(R), which is
    equivalent to the full definitional condition (every inverse-side color
    maps onto a single forward-side color). With the trivial sublattice
    (m = 1) every coincidence isometry qualifies.
    """
    g = _geometry(col, iso)
    return g.a_fwd == g.b_fwd


def color_permutation(col: Coloring, iso: Isometry) -> dict[CosetLabel, CosetLabel]:
    """The bijection induced on colors by a color coincidence.

    Maps each color of the inverse-side CSL coloring to the color its points
    land on; the zero color is always fixed.
    """
    if not is_color_coincidence(col, iso):
        raise ValueError("not a color coincidence; the color map is not a bijection")
    g = _geometry(col, iso)
    xs = _coset_points(col, g.g1rinv)
    mapping: dict[CosetLabel, CosetLabel] = {}
    for label, xj in xs.items():
        if xj is None:
            continue
        mapping[label] = col.quotient.coset_of(iso.apply(xj))
    if len(set(mapping.values())) != len(mapping):
        raise InternalConsistencyError("color map of a color coincidence not injective")
    zero = col.quotient.labels[0]
    if mapping[zero] != zero:
        raise InternalConsistencyError("color coincidence does not fix the zero color")
    return mapping


@dataclass(frozen=True)
class ColorReport:
    """Everything one coincidence isometry does to one coloring."""

    m: int
    sigma1: int
    sigma2: int
    s: int
    t: int
    u: int
    v: int
    colors_rinv: tuple[CosetLabel, ...]
    colors_r: tuple[CosetLabel, ...]
    relation: tuple[tuple[CosetLabel, CosetLabel], ...]
    is_color_coincidence: bool
    permutation: Optional[tuple[tuple[CosetLabel, CosetLabel], ...]]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "sigma1": self.sigma1,
            "sigma2": self.sigma2,
            "s": self.s,
            "t": self.t,
            "u": self.u,
            "v": self.v,
            "colors_rinv": [list(c) for c in self.colors_rinv],
            "colors_r": [list(c) for c in self.colors_r],
            "relation": [[list(a), list(b)] for a, b in self.relation],
            "is_color_coincidence": self.is_color_coincidence,
            "permutation": None
            if self.permutation is None
            else [[list(a), list(b)] for a, b in self.permutation],
        }


def permutation_cycles(
    perm: Sequence[tuple[CosetLabel, CosetLabel]],
    labels: Sequence[CosetLabel],
) -> str:
    """Cycle notation over color names c0, c1, ... (lexicographic label
    order). Falls back to an explicit arrow list when the permutation moves
    between different label sets."""
    names = {label: f"c{i}" for i, label in enumerate(labels)}
    mapping = dict(perm)
    if set(mapping) != set(mapping.values()):
        return ";".join(
            f"{names[a]}->{names[b]}" for a, b in sorted(mapping.items())
        )
    cycles = []
    seen = set()
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        if len(cycle) > 1:
            cycles.append("(" + " ".join(names[c] for c in cycle) + ")")
    return "".join(cycles) if cycles else "()"


def color_report(col: Coloring, iso: Isometry) -> ColorReport:
    """Assemble the full record, cross-checking every identity on the way.

    The count-based and index-based values of s, t, u, v must agree, the
    index formula must reproduce the directly computed sublattice index, and
    the three equivalent color-coincidence tests must concur; any mismatch
    raises InternalConsistencyError.
    """
    g = _geometry(col, iso)
    m = col.m
    s, t, u, v = stuv(col, iso)
    sigma2_via_formula(col, iso, g.sigma1)

    relation = sigma_relation(col, iso)
    crinv = colors_meeting(col, g.g1rinv)
    cr = colors_meeting(col, g.g1r)
    if relation.domain() != crinv or relation.codomain() != cr:
        raise InternalConsistencyError("relation support differs from meeting colors")
    if s != len(crinv) or t != len(cr):
        raise InternalConsistencyError("index-based s,t differ from color counts")
    zero = col.quotient.labels[0]
    u_count = sum(1 for (j, k) in relation.pairs if k == zero)
    v_count = sum(1 for (j, k) in relation.pairs if j == zero)
    if u != u_count or v != v_count:
        raise InternalConsistencyError("index-based u,v differ from relation counts")

    cc = is_color_coincidence(col, iso)
    if cc != relation.is_bijection() or cc != (u == 1 and v == 1 and s == t):
        raise InternalConsistencyError("color-coincidence criteria disagree")

    perm = None
    if cc:
        mapping = color_permutation(col, iso)
        if frozenset(mapping.items()) != relation.pairs:
            raise InternalConsistencyError("permutation differs from the relation")
        perm = tuple(sorted(mapping.items()))
    return ColorReport(
        m=m,
        sigma1=g.sigma1,
        sigma2=g.sigma2,
        s=s,
        t=t,
        u=u,
        v=v,
        colors_rinv=tuple(sorted(crinv)),
        colors_r=tuple(sorted(cr)),
        relation=relation.sorted_pairs(),
        is_color_coincidence=cc,
        permutation=perm,
    )


@dataclass(frozen=True)
class SpecialCaseReport:
    """Which structural hypotheses hold and what they force on the index."""

    m: int
    sigma1: int
    sigma2: int
    csl_forward_in_sub: bool
    csl_inverse_in_sub: bool
    prime_index: bool
    case: str  # one of "", "both-in-sub", "one-in-sub", "neither-cc", "neither-non-cc"
    predicted_sigma2: Optional[int]
    coprime_sigma_m: bool
    sigma2_divides_sigma1: bool
    sigma1_divides_sigma2: bool


def classify_special_case(col: Coloring, iso: Isometry) -> SpecialCaseReport:
    """Tag the applicable special-case hypotheses and verify their forecasts.

    Containment of a CSL in the coloring sublattice forces Σ2 | Σ1, with
    Σ2 = Σ1/m exactly when both CSLs are contained. At prime index the
    outcome is fully determined by containment and the color-coincidence
    test. Coprimality of Σ1 and m forces all colors to appear on both
    sides, and then Σ2 is a multiple of Σ1 (Σ2 = u·Σ1; the divisor count u
    can exceed 1, e.g. the hypercubic two-coloring at odd index, so the
    divisibility runs upward, not downward). Violated forecasts raise
    InternalConsistencyError.
    """
    g = _geometry(col, iso)
    m = col.m
    fwd_in = is_sublattice(g.g1r, col.sub)
    inv_in = is_sublattice(g.g1rinv, col.sub)
    prime = m > 1 and all(m % k for k in range(2, isqrt(m) + 1))
    divides = g.sigma1 % g.sigma2 == 0
    divides_up = g.sigma2 % g.sigma1 == 0

    if (fwd_in or inv_in) and not divides:
        raise InternalConsistencyError("contained CSL but sigma2 does not divide sigma1")
    both = fwd_in and inv_in
    if both != (g.sigma2 * m == g.sigma1):
        raise InternalConsistencyError("both-contained iff sigma2 = sigma1/m failed")

    case = ""
    predicted: Optional[int] = None
    if prime:
        if both:
            case = "both-in-sub"
            predicted = g.sigma1 // m
        elif fwd_in or inv_in:
            case = "one-in-sub"
            predicted = g.sigma1
        elif is_color_coincidence(col, iso):
            case = "neither-cc"
            predicted = g.sigma1
        else:
            case = "neither-non-cc"
            predicted = g.sigma1 * m
        if predicted != g.sigma2:
            raise InternalConsistencyError(
                f"prime-index case {case} predicts {predicted}, got {g.sigma2}"
            )

    coprime = gcd(g.sigma1, m) == 1
    if coprime:
        s, t, u, _ = stuv(col, iso)
        if s != m or t != m:
            raise InternalConsistencyError("coprime case: some color is missing")
        if g.sigma2 != u * g.sigma1:
            raise InternalConsistencyError("coprime case: sigma2 != u * sigma1")
    return SpecialCaseReport(
        m=m,
        sigma1=g.sigma1,
        sigma2=g.sigma2,
        csl_forward_in_sub=fwd_in,
        csl_inverse_in_sub=inv_in,
        prime_index=prime,
        case=case,
        predicted_sigma2=predicted,
        coprime_sigma_m=coprime,
        sigma2_divides_sigma1=divides,
        sigma1_divides_sigma2=divides_up,
    )


@dataclass(frozen=True)
class ProductReport:
    """Outcome of composing two color coincidences."""

    sigma1_first: int
    sigma1_second: int
    gcd_sigmas: int
    product_is_color_coincidence: bool
    coprime_implication_held: bool


def product_color_coincidence_check(
    col: Coloring, r1: Isometry, r2: Isometry
) -> ProductReport:
    """Check closure of the composite r2∘r1; coprime indices force it."""
    if not (is_color_coincidence(col, r1) and is_color_coincidence(col, r2)):
        raise ValueError("both inputs must be color coincidences")
    s1 = sigma(col.parent, r1)
    s2 = sigma(col.parent, r2)
    g = gcd(s1, s2)
    product_cc = is_color_coincidence(col, r2 * r1)
    held = (g != 1) or product_cc
    return ProductReport(
        sigma1_first=s1,
        sigma1_second=s2,
        gcd_sigmas=g,
        product_is_color_coincidence=product_cc,
        coprime_implication_held=held,
    )


def closure_search(
    col: Coloring, candidates: Sequence[Isometry]
) -> list[tuple[int, int]]:
    """All ordered index pairs (i, j) of color coincidences among the
    candidates whose composite candidates[j]∘candidates[i] is not a color
    coincidence. An empty list only says none was found in this range."""
    members = [i for i, iso in enumerate(candidates) if is_color_coincidence(col, iso)]
    violations = []
    for i in members:
        for j in members:
            if not is_color_coincidence(col, candidates[j] * candidates[i]):
                violations.append((i, j))
    return violations
