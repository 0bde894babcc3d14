"""Principal solutions and solvability verdicts via residuation.

For ``A ⊗ x = b`` the greatest x with ``A ⊗ x ≤ b`` is
``conjugate(A) ⊗' b``; the system is solvable exactly when that greatest
candidate satisfies it, so solvability is always decided by direct
substitution.  The same recipe covers p-term Sylvester sums
``⊕_k A_k ⊗ X ⊗ B_k = C``: the greatest candidate is the entrywise min
over k of ``conjugate(A_k) ⊗' C ⊗' conjugate(B_k)``, computed term by
term with a running min in O(p·(m²n + mn²)) scalar operations.  No
Kronecker matrix is ever formed here; that brute-force route lives in
:mod:`.oracle` as a cross-check.

No preconditions are imposed on the inputs.  Where a min never meets a
finite bound the candidate keeps ``+inf`` (the cell is unconstrained
upward), and substitution handles it through the mixed-infinity rules.
"""

from dataclasses import dataclass

import numpy as np

from .matrix import (
    ShapeError,
    TropicalMatrix,
    conjugate,
    is_integral,
    max_plus_matadd,
    max_plus_matmul,
    min_plus_matadd,
    min_plus_matmul,
)
from .semiring import NEG_INF, POS_INF

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SylvesterInstance:
    """Data of a p-term equation ⊕_k A_k ⊗ X ⊗ B_k = C.

    All A_k are m×m, all B_k are n×n, C is m×n, p ≥ 1.
    """

    A: tuple[TropicalMatrix, ...]
    B: tuple[TropicalMatrix, ...]
    C: TropicalMatrix

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(self.A))
        object.__setattr__(self, "B", tuple(self.B))
        if len(self.A) != len(self.B):
            raise ShapeError(f"need as many left factors as right factors, got {len(self.A)} and {len(self.B)}")
        if not self.A:
            raise ShapeError("need at least one term")
        m, n = self.C.shape
        for k, A_k in enumerate(self.A):
            if A_k.shape != (m, m):
                raise ShapeError(f"left factor {k} must be {m}x{m} to match C {self.C.shape}, got {A_k.shape}")
        for k, B_k in enumerate(self.B):
            if B_k.shape != (n, n):
                raise ShapeError(f"right factor {k} must be {n}x{n} to match C {self.C.shape}, got {B_k.shape}")

    @property
    def p(self) -> int:
        return len(self.A)

    @property
    def m(self) -> int:
        return self.C.rows

    @property
    def n(self) -> int:
        return self.C.cols


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solve: greatest candidate, verdict, and where it misses.

    ``solvable`` is true iff ``mismatches`` is empty.  ``residual_max_abs``
    is 0.0 when solvable, the largest absolute finite discrepancy
    otherwise, and +inf when some mismatch involves differing infinity
    states.
    """

    principal: TropicalMatrix
    solvable: bool
    mismatches: tuple[tuple[int, int], ...]
    residual_max_abs: float


def effective_tolerance(tolerance, matrices) -> float:
    """Resolve the equality tolerance for a set of input matrices.

    Explicit values win; otherwise all-integer inputs are compared
    exactly and anything else with the default absolute tolerance.
    """
    if tolerance is not None:
        eps = float(tolerance)
        if eps < 0:
            raise ValueError(f"tolerance must be >= 0, got {tolerance}")
        return eps
    if all(is_integral(M) for M in matrices):
        return 0.0
    return DEFAULT_TOLERANCE


def matrix_mismatches(achieved: TropicalMatrix, target: TropicalMatrix, eps: float):
    """Positions where ``achieved`` differs from ``target``.

    Finite pairs compare with absolute tolerance ``eps``; infinity states
    must match exactly.  Returns (sorted positions, residual_max_abs).
    """
    if achieved.shape != target.shape:
        raise ShapeError(f"cannot compare {achieved.shape} with {target.shape}")
    L, R = achieved.data, target.data
    finite_pair = np.isfinite(L) & np.isfinite(R)
    with np.errstate(invalid="ignore"):
        diff = np.abs(L - R)
    ok = np.where(finite_pair, diff <= eps, L == R)
    bad = ~ok
    if not bad.any():
        return (), 0.0
    positions = tuple((int(i), int(j)) for i, j in np.argwhere(bad))
    if (bad & ~finite_pair).any():
        residual = POS_INF
    else:
        residual = float(diff[bad].max())
    return positions, residual


def _report(principal, achieved, target, eps) -> SolveReport:
    mismatches, residual = matrix_mismatches(achieved, target, eps)
    return SolveReport(principal, not mismatches, mismatches, residual)


def linear_principal_solution(A: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Greatest x with A ⊗ x ≤ b, namely conjugate(A) ⊗' b."""
    if b.cols != 1:
        raise ShapeError(f"right-hand side must be a column vector, got {b.shape}")
    if A.rows != b.rows:
        raise ShapeError(f"system {A.shape} does not match right-hand side {b.shape}")
    return min_plus_matmul(conjugate(A), b)


def solve_linear(A: TropicalMatrix, b: TropicalMatrix, tolerance=None) -> SolveReport:
    """Decide A ⊗ x = b by substituting the greatest candidate back."""
    x = linear_principal_solution(A, b)
    achieved = max_plus_matmul(A, x)
    eps = effective_tolerance(tolerance, (A, b))
    return _report(x, achieved, b, eps)


def axb_principal_solution(A: TropicalMatrix, B: TropicalMatrix, C: TropicalMatrix) -> TropicalMatrix:
    """Greatest X with A ⊗ X ⊗ B ≤ C: conjugate(A) ⊗' C ⊗' conjugate(B)."""
    if A.rows != A.cols or A.rows != C.rows:
        raise ShapeError(f"left factor must be {C.rows}x{C.rows} to match C {C.shape}, got {A.shape}")
    if B.rows != B.cols or B.rows != C.cols:
        raise ShapeError(f"right factor must be {C.cols}x{C.cols} to match C {C.shape}, got {B.shape}")
    return min_plus_matmul(min_plus_matmul(conjugate(A), C), conjugate(B))


def sylvester_principal_solution(inst: SylvesterInstance) -> TropicalMatrix:
    """Entrywise min over k of the per-term greatest candidates.

    Terms are folded sequentially so peak memory stays at one m×n
    temporary however large p grows.
    """
    acc = TropicalMatrix.filled(inst.m, inst.n, POS_INF)
    for A_k, B_k in zip(inst.A, inst.B):
        acc = min_plus_matadd(acc, axb_principal_solution(A_k, B_k, inst.C))
    return acc


def sylvester_apply(A_terms, B_terms, X: TropicalMatrix) -> TropicalMatrix:
    """Evaluate ⊕_k A_k ⊗ X ⊗ B_k at a given X."""
    acc = TropicalMatrix.filled(X.rows, X.cols, NEG_INF)
    for A_k, B_k in zip(A_terms, B_terms):
        acc = max_plus_matadd(acc, max_plus_matmul(max_plus_matmul(A_k, X), B_k))
    return acc


def solve_sylvester(inst: SylvesterInstance, tolerance=None) -> SolveReport:
    """Decide ⊕_k A_k ⊗ X ⊗ B_k = C by substitution of the greatest candidate."""
    X = sylvester_principal_solution(inst)
    achieved = sylvester_apply(inst.A, inst.B, X)
    eps = effective_tolerance(tolerance, (*inst.A, *inst.B, inst.C))
    return _report(X, achieved, inst.C, eps)


def two_sided_instance(A: TropicalMatrix, B: TropicalMatrix, C: TropicalMatrix) -> SylvesterInstance:
    """A ⊗ X ⊕ X ⊗ B = C rewritten as a two-term instance with unit factors."""
    E_m = TropicalMatrix.max_plus_unit(C.rows)
    E_n = TropicalMatrix.max_plus_unit(C.cols)
    return SylvesterInstance(A=(A, E_m), B=(E_n, B), C=C)


def solve_two_sided_special(A: TropicalMatrix, B: TropicalMatrix, C: TropicalMatrix, tolerance=None) -> SolveReport:
    """Solve A ⊗ X ⊕ X ⊗ B = C through the two-term reduction."""
    return solve_sylvester(two_sided_instance(A, B, C), tolerance)


def is_doubly_r_astic(A: TropicalMatrix) -> bool:
    """True iff every row and every column has at least one finite entry."""
    finite = np.isfinite(A.data)
    return bool(finite.any(axis=1).all() and finite.any(axis=0).all())
