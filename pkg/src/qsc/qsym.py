"""Exact arithmetic for quasisymmetric functions of one degree.

Everything reduces to the monomial basis: an MExpr maps compositions of a
fixed degree to integer coefficients.  Fundamental expansions come from
descent sets of standard fillings, products from the quasi-shuffle rule, and
changes of basis from an exact rational solve.  Bases dual to these live in
the noncommutative world and are handled purely as coefficient tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import comb

from .compositions import (
    Composition,
    check_composition,
    compositions,
    from_string,
    partitions,
    rearrangements,
    refinements,
    reverse,
    subset_to_composition,
    to_string,
)
from .dirt import enumerate_dirts
from .tableaux import (
    immaculate_descent_set,
    standard_tableaux,
    weighted_tableaux,
    young_descent_set,
)

MONOMIAL = "monomial"
FUNDAMENTAL = "fundamental"
YOUNG_QS = "young-qs"
DUAL_IMMACULATE = "dual-immaculate"
IMMACULATE = "immaculate"
YOUNG_NCSCHUR = "young-ncschur"

BASES = frozenset(
    {MONOMIAL, FUNDAMENTAL, YOUNG_QS, DUAL_IMMACULATE, IMMACULATE, YOUNG_NCSCHUR}
)


class MExpr:
    """A quasisymmetric function of fixed degree in monomial coordinates."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[Composition, int] | None = None):
        if not isinstance(degree, int) or degree < 0:
            raise ValueError("degree must be a nonnegative integer")
        clean: dict[Composition, int] = {}
        for alpha, c in (coeffs or {}).items():
            alpha = check_composition(alpha)
            if sum(alpha) != degree:
                raise ValueError(f"{alpha} is not a composition of {degree}")
            if not isinstance(c, int):
                raise ValueError("coefficients must be integers")
            if c:
                clean[alpha] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MExpr is immutable")

    def coefficient(self, alpha: Composition) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MExpr)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other: "MExpr") -> "MExpr":
        if not isinstance(other, MExpr):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot add expressions of different degrees")
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, 0) + c
        return MExpr(self.degree, out)

    def __neg__(self) -> "MExpr":
        return MExpr(self.degree, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: "MExpr") -> "MExpr":
        if not isinstance(other, MExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MExpr(self.degree, {a: c * other for a, c in self.coeffs.items()})
        if isinstance(other, MExpr):
            return quasi_shuffle(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        if not self.coeffs:
            return f"MExpr({self.degree}, 0)"
        ordered = sorted(self.coeffs.items(), key=lambda kv: tuple(-p for p in kv[0]))
        return " + ".join(f"{c}*M({to_string(a)})" for a, c in ordered)


def monomial(alpha: Composition) -> MExpr:
    alpha = check_composition(alpha)
    return MExpr(sum(alpha), {alpha: 1})


@dataclass(frozen=True)
class BasisExpansion:
    """Integer coefficients of one element against one named basis."""

    basis: str
    degree: int
    coeffs: dict[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis tag {self.basis!r}")
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = check_composition(alpha)
            if sum(alpha) != self.degree:
                raise ValueError(f"{alpha} is not a composition of {self.degree}")
            if c:
                clean[alpha] = int(c)
        object.__setattr__(self, "coeffs", clean)

    def coefficient(self, alpha: Composition) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def to_json_obj(self) -> dict:
        ordered = {
            to_string(alpha): self.coeffs[alpha]
            for alpha in compositions(self.degree)
            if alpha in self.coeffs
        }
        return {"basis": self.basis, "degree": self.degree, "coeffs": ordered}

    @staticmethod
    def from_json_obj(obj: dict) -> "BasisExpansion":
        coeffs = {from_string(k): int(v) for k, v in obj["coeffs"].items()}
        return BasisExpansion(obj["basis"], int(obj["degree"]), coeffs)


def f_to_m(alpha: Composition) -> MExpr:
    """The fundamental element indexed by alpha, in monomial coordinates."""
    alpha = check_composition(alpha)
    return MExpr(sum(alpha), {beta: 1 for beta in refinements(alpha)})


def m_to_f(f: MExpr) -> BasisExpansion:
    """Rewrite monomial coordinates in the fundamental basis.

    Uses the inclusion-exclusion inverse of the refinement sum: a single
    monomial element equals the signed sum of fundamentals over its
    refinements, with sign given by the length difference.
    """
    out: dict[Composition, int] = {}
    for gamma, c in f.items():
        for alpha in refinements(gamma):
            sign = -1 if (len(alpha) - len(gamma)) % 2 else 1
            out[alpha] = out.get(alpha, 0) + sign * c
    return BasisExpansion(FUNDAMENTAL, f.degree, out)


def yqs_f_expansion(alpha: Composition) -> BasisExpansion:
    """Fundamental expansion of a Young quasisymmetric Schur element, by
    bucketing standard tableaux of the shape over their descent sets."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    out: dict[Composition, int] = {}
    for t in standard_tableaux(alpha, "ssyct"):
        beta = subset_to_composition(young_descent_set(t), n)
        out[beta] = out.get(beta, 0) + 1
    return BasisExpansion(FUNDAMENTAL, n, out)


def dimm_f_expansion(alpha: Composition) -> BasisExpansion:
    """Fundamental expansion of a dual immaculate element."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    out: dict[Composition, int] = {}
    for u in standard_tableaux(alpha, "immaculate"):
        beta = subset_to_composition(immaculate_descent_set(u), n)
        out[beta] = out.get(beta, 0) + 1
    return BasisExpansion(FUNDAMENTAL, n, out)


@cache
def young_qs_mexpr(alpha: Composition) -> MExpr:
    expansion = yqs_f_expansion(alpha)
    total = MExpr(expansion.degree)
    for beta, c in expansion.coeffs.items():
        total = total + c * f_to_m(beta)
    return total


@cache
def dual_immaculate_mexpr(alpha: Composition) -> MExpr:
    expansion = dimm_f_expansion(alpha)
    total = MExpr(expansion.degree)
    for beta, c in expansion.coeffs.items():
        total = total + c * f_to_m(beta)
    return total


_ORACLE_KINDS = {YOUNG_QS: "ssyct", DUAL_IMMACULATE: "immaculate"}


def monomial_coefficient_oracle(basis: str, alpha: Composition, gamma: Composition) -> int:
    """Monomial coefficient at gamma computed by direct filling counts,
    independent of any descent-set bookkeeping."""
    if basis not in _ORACLE_KINDS:
        raise ValueError(f"no filling model for basis {basis!r}")
    alpha = check_composition(alpha)
    gamma = check_composition(gamma)
    if sum(alpha) != sum(gamma):
        raise ValueError("degree mismatch between shape and weight")
    return len(weighted_tableaux(alpha, _ORACLE_KINDS[basis], gamma))


def schur_m_expansion(lam: Composition) -> MExpr:
    """A Schur symmetric function in monomial coordinates: the sum of Young
    quasisymmetric Schur elements over all rearrangements of the partition."""
    lam = check_composition(lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("Schur elements are indexed by partitions")
    total = MExpr(sum(lam))
    for alpha in rearrangements(lam):
        total = total + young_qs_mexpr(alpha)
    return total


@cache
def _shuffle_pair(u: Composition, v: Composition) -> tuple[tuple[Composition, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[Composition, int] = {}
    for tail, c in _shuffle_pair(u[1:], v):
        key = (u[0],) + tail
        out[key] = out.get(key, 0) + c
    for tail, c in _shuffle_pair(u, v[1:]):
        key = (v[0],) + tail
        out[key] = out.get(key, 0) + c
    for tail, c in _shuffle_pair(u[1:], v[1:]):
        key = (u[0] + v[0],) + tail
        out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def quasi_shuffle(f: MExpr, g: MExpr) -> MExpr:
    """Product of two monomial-coordinate expressions: parts of the two index
    compositions interleave in order, with adjacent parts optionally merged."""
    out: dict[Composition, int] = {}
    for u, cu in f.items():
        for v, cv in g.items():
            for w, m in _shuffle_pair(u, v):
                out[w] = out.get(w, 0) + cu * cv * m
    return MExpr(f.degree + g.degree, out)


_EXPANDABLE = {FUNDAMENTAL, YOUNG_QS, DUAL_IMMACULATE}


@cache
def _basis_matrix_inverse(n: int, basis: str) -> tuple[tuple[Fraction, ...], ...]:
    comps = compositions(n)
    gen = young_qs_mexpr if basis == YOUNG_QS else dual_immaculate_mexpr
    k = len(comps)
    rows = [
        [Fraction(gen(b).coefficient(g)) for b in comps] + [Fraction(0)] * k
        for g in comps
    ]
    for i in range(k):
        rows[i][k + i] = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col]), None)
        if pivot is None:
            raise RuntimeError("basis matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(k):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[k:]) for row in rows)


def expand_in(f: MExpr, basis: str) -> BasisExpansion:
    """Exact coefficients of f against the named basis of its degree.

    The fundamental case has a closed-form inverse; the two Schur-like bases
    go through one cached exact matrix inverse per degree.  All the target
    bases are integral, so a fractional coefficient raises.
    """
    if basis == MONOMIAL:
        return BasisExpansion(MONOMIAL, f.degree, dict(f.coeffs))
    if basis not in _EXPANDABLE:
        raise ValueError(f"cannot expand in basis {basis!r}")
    if basis == FUNDAMENTAL:
        return m_to_f(f)
    comps = compositions(f.degree)
    inverse = _basis_matrix_inverse(f.degree, basis)
    vec = [f.coefficient(g) for g in comps]
    out: dict[Composition, int] = {}
    for i, alpha in enumerate(comps):
        x = sum(inverse[i][j] * vec[j] for j in range(len(comps)))
        if x.denominator != 1:
            raise RuntimeError(f"non-integer coefficient {x} at {alpha}")
        if x:
            out[alpha] = int(x)
    return BasisExpansion(basis, f.degree, out)


def is_symmetric(f: MExpr) -> bool:
    """True when coefficients are constant across rearrangement classes."""
    seen: set[Composition] = set()
    for alpha in f.coeffs:
        key = tuple(sorted(alpha, reverse=True))
        if key in seen:
            continue
        seen.add(key)
        ref = f.coefficient(key)
        if any(f.coefficient(beta) != ref for beta in rearrangements(key)):
            return False
    return True


def dimm_to_yqs(alpha: Composition) -> BasisExpansion:
    """Young quasisymmetric Schur expansion of a dual immaculate element:
    the coefficient at beta counts recording tableaux of shape beta whose row
    strip shape is the reverse of alpha."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    strips = reverse(alpha)
    out: dict[Composition, int] = {}
    for beta in compositions(n, len(alpha)):
        count = len(enumerate_dirts(beta, strips))
        if count:
            out[beta] = count
    return BasisExpansion(YOUNG_QS, n, out)


def yns_to_imm(alpha: Composition) -> BasisExpansion:
    """Immaculate expansion of a Young noncommutative Schur element: the
    transpose of the dual immaculate coefficient table."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    out: dict[Composition, int] = {}
    for beta in compositions(n, len(alpha)):
        count = len(enumerate_dirts(alpha, reverse(beta)))
        if count:
            out[beta] = count
    return BasisExpansion(IMMACULATE, n, out)


def principal_specialization(f: MExpr, m: int) -> int:
    """Value after substituting 1 for the first m variables and 0 beyond:
    each monomial element contributes a binomial count of support sets."""
    if not isinstance(m, int) or m < 0:
        raise ValueError("m must be a nonnegative integer")
    return sum(c * comb(m, len(alpha)) for alpha, c in f.items())


def _is_ones_then_tail(alpha: Composition) -> bool:
    return all(p == 1 for p in alpha[:-1]) if alpha else False


def _inversions(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def check_conjectures(n: int) -> dict:
    """Empirical report on the two open expansion conjectures at degree n.

    Computes every Young quasisymmetric Schur element in the dual immaculate
    basis.  Reports whether all coefficients stay in {-1, 0, 1}, whether the
    coefficient sums are 1 exactly on reversed hooks (all parts 1 except the
    last) and 0 elsewhere, and whether distinct-part partitions satisfy the
    signed-permutation formula.  Findings are returned, never raised.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("degree must be a positive integer")
    bounded_violations: list[dict] = []
    sum_violations: list[dict] = []
    expansions: dict[str, dict[str, int]] = {}
    for alpha in compositions(n):
        table = expand_in(young_qs_mexpr(alpha), DUAL_IMMACULATE)
        expansions[to_string(alpha)] = {
            to_string(beta): table.coeffs[beta]
            for beta in compositions(n)
            if beta in table.coeffs
        }
        for beta, b in table.coeffs.items():
            if b not in (-1, 0, 1):
                bounded_violations.append(
                    {"alpha": to_string(alpha), "beta": to_string(beta), "value": b}
                )
        total = sum(table.coeffs.values())
        want = 1 if _is_ones_then_tail(alpha) else 0
        if total != want:
            sum_violations.append(
                {"alpha": to_string(alpha), "sum": total, "expected": want}
            )
    alternating_violations: list[dict] = []
    checked: list[str] = []
    for lam in partitions(n):
        if len(set(lam)) != len(lam):
            continue
        checked.append(to_string(lam))
        rhs = MExpr(n)
        for perm in itertools.permutations(range(len(lam))):
            sigma = tuple(lam[i] for i in perm)
            sign = -1 if _inversions(perm) % 2 else 1
            rhs = rhs + sign * dual_immaculate_mexpr(sigma)
        if rhs != young_qs_mexpr(lam):
            alternating_violations.append(
                {
                    "lambda": to_string(lam),
                    "difference": {
                        to_string(g): c
                        for g, c in (rhs - young_qs_mexpr(lam)).items()
                    },
                }
            )
    return {
        "degree": n,
        "bounded": {
            "holds": not bounded_violations,
            "violations": bounded_violations,
        },
        "sum_rule": {"holds": not sum_violations, "violations": sum_violations},
        "alternating": {
            "holds": not alternating_violations,
            "checked": checked,
            "violations": alternating_violations,
        },
        "expansions": expansions,
    }
