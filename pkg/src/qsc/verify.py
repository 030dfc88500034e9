"""Exhaustive verification suites for the package's structural guarantees.

Each suite sweeps every composition up to a degree bound and reports counted
cases plus any counterexamples.  All suites are deterministic and complete;
nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compositions import compositions, dominates, partitions, rearrangements, reverse
from .dirt import is_dirt, row_strip_shape
from .insertion import insert, insert_word, is_virtuous, rapture, uninsert
from .qsym import (
    DUAL_IMMACULATE,
    YOUNG_QS,
    dimm_to_yqs,
    dual_immaculate_mexpr,
    expand_in,
    is_symmetric,
    quasi_shuffle,
    schur_m_expansion,
    yns_to_imm,
)
from .rw import rw_dual, rw_forward
from .tableaux import (
    INF,
    immaculate_descent_set,
    immaculate_reading_word,
    shape_of,
    standard_tableaux,
    young_descent_set,
)


@dataclass
class SuiteResult:
    suite: str
    max_n: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)


def _check_inverse_pair(result: SuiteResult, rows) -> None:
    """insert after rapture returns the original tableau with the route
    mirrored, for every virtuous cell whose rapture output is finite."""
    for r in range(1, len(rows) + 1):
        for c in range(1, len(rows[r - 1]) + 1):
            if not is_virtuous(rows, (c, r)):
                continue
            rap = rapture(rows, (c, r))
            if rap.output is INF:
                continue
            result.cases += 1
            ins = insert(rap.rows, rap.output)
            if ins.rows != rows or ins.path != tuple(reversed(rap.route)):
                result.fail(f"insert(rapture) failed at {rows} cell {(c, r)}")


def verify_inverse(max_n: int) -> SuiteResult:
    """Both compositions of insertion and rapture are identities with
    mirrored bumping paths and escape routes, on every tableau arising
    while inserting every immaculate reading word."""
    result = SuiteResult("inverse", max_n)
    for n in range(1, max_n + 1):
        for alpha in compositions(n):
            for u in standard_tableaux(alpha, "immaculate"):
                rows: tuple = ()
                _check_inverse_pair(result, rows)
                for k in immaculate_reading_word(u):
                    step = insert(rows, k)
                    rap = rapture(step.rows, step.new_cell)
                    result.cases += 1
                    if (
                        rap.rows != rows
                        or rap.output != k
                        or rap.route != tuple(reversed(step.path))
                    ):
                        result.fail(f"rapture(insert) failed: {rows} + {k}")
                    rows = step.rows
                    _check_inverse_pair(result, rows)
    return result


def verify_descents(max_n: int) -> SuiteResult:
    """Insertion carries the immaculate descent set of the input tableau to
    the Young descent set of the inserted tableau."""
    result = SuiteResult("descents", max_n)
    for n in range(1, max_n + 1):
        for alpha in compositions(n):
            for u in standard_tableaux(alpha, "immaculate"):
                p, _ = insert_word(immaculate_reading_word(u))
                result.cases += 1
                if young_descent_set(p) != immaculate_descent_set(u):
                    result.fail(f"descents differ for {u}")
    return result


def verify_triple_agreement(max_n: int) -> SuiteResult:
    """Three computations of the same coefficient table coincide: insertion
    shape multisets, direct recording-tableau counts, and forward tree
    leaves; dually, dual tree leaves match the transposed counts."""
    result = SuiteResult("triple-agreement", max_n)
    for n in range(0, max_n + 1):
        for alpha in compositions(n):
            recording: set = set()
            for u in standard_tableaux(alpha, "immaculate"):
                p, q = insert_word(immaculate_reading_word(u))
                if not is_dirt(q) or row_strip_shape(q) != reverse(alpha):
                    result.fail(f"bad recording tableau for {u}")
                if shape_of(p) != shape_of(q):
                    result.fail(f"shape mismatch for {u}")
                recording.add(q)
            by_insertion: dict = {}
            for q in recording:
                shape = shape_of(q)
                by_insertion[shape] = by_insertion.get(shape, 0) + 1
            counted = dimm_to_yqs(alpha).coeffs
            forward = rw_forward(alpha)[1].coeffs
            result.cases += 1
            if not (by_insertion == counted == forward):
                result.fail(
                    f"coefficient tables differ at {alpha}: "
                    f"{by_insertion} vs {counted} vs {forward}"
                )
            result.cases += 1
            if rw_dual(alpha)[1].coeffs != yns_to_imm(alpha).coeffs:
                result.fail(f"dual tree disagrees at {alpha}")
    return result


def verify_symmetry(max_n: int) -> SuiteResult:
    """A dual immaculate element is symmetric exactly when its composition
    has all parts after the first equal to one, and those elements are the
    corresponding Schur functions."""
    result = SuiteResult("symmetry", max_n)
    for n in range(1, max_n + 1):
        for alpha in compositions(n):
            hook = all(p == 1 for p in alpha[1:])
            result.cases += 1
            if is_symmetric(dual_immaculate_mexpr(alpha)) != hook:
                result.fail(f"symmetry test wrong at {alpha}")
            if hook and dual_immaculate_mexpr(alpha) != schur_m_expansion(alpha):
                result.fail(f"hook element differs from Schur at {alpha}")
    return result


def verify_positivity(max_n: int) -> SuiteResult:
    """Products of a Schur element with a dual immaculate element expand
    nonnegatively in the Young quasisymmetric Schur basis; the classical
    small product witnesses that the dual immaculate basis lacks this."""
    result = SuiteResult("positivity", max_n)
    for total in range(2, max_n + 1):
        for k in range(1, total):
            for lam in partitions(k):
                s = schur_m_expansion(lam)
                for alpha in compositions(total - k):
                    table = expand_in(quasi_shuffle(s, dual_immaculate_mexpr(alpha)), YOUNG_QS)
                    result.cases += 1
                    if any(c < 0 for c in table.coeffs.values()):
                        result.fail(f"negative coefficient for s_{lam} * {alpha}")
    witness = expand_in(
        quasi_shuffle(schur_m_expansion((2, 1)), dual_immaculate_mexpr((1,))),
        DUAL_IMMACULATE,
    )
    result.cases += 1
    if not any(c < 0 for c in witness.coeffs.values()):
        result.fail("expected a negative dual immaculate coefficient in s_(2,1)*(1)")
    return result


def verify_dominance(max_n: int) -> SuiteResult:
    """Nonzero expansion coefficients only appear at dominated compositions
    of the same length, the diagonal coefficient is one, and a partition
    index is hit only by itself: its coefficient column is a delta, its
    table on the immaculate side is a singleton, and every rearrangement of
    a partition appears positively in the partition's own table."""
    result = SuiteResult("dominance", max_n)
    for n in range(1, max_n + 1):
        tables = {alpha: dimm_to_yqs(alpha).coeffs for alpha in compositions(n)}
        for alpha, table in tables.items():
            result.cases += 1
            for beta, c in table.items():
                if c and (len(beta) != len(alpha) or not dominates(alpha, beta)):
                    result.fail(f"support violates dominance: {alpha} -> {beta}")
            if table.get(alpha) != 1:
                result.fail(f"diagonal coefficient is not 1 at {alpha}")
        for lam in partitions(n):
            result.cases += 1
            for alpha, table in tables.items():
                want = 1 if alpha == lam else 0
                if table.get(lam, 0) != want:
                    result.fail(f"partition column not a delta: {alpha} -> {lam}")
            if yns_to_imm(lam).coeffs != {lam: 1}:
                result.fail(f"partition table not singleton on the immaculate side: {lam}")
            if any(tables[lam].get(beta, 0) < 1 for beta in rearrangements(lam)):
                result.fail(f"missing rearrangement in the table of {lam}")
    return result


SUITES = {
    "inverse": verify_inverse,
    "descents": verify_descents,
    "triple-agreement": verify_triple_agreement,
    "symmetry": verify_symmetry,
    "positivity": verify_positivity,
    "dominance": verify_dominance,
}

DEFAULT_MAX_N = {
    "inverse": 7,
    "descents": 7,
    "triple-agreement": 6,
    "symmetry": 7,
    "positivity": 6,
    "dominance": 7,
}


def run_suite(name: str, max_n: int) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_n)
