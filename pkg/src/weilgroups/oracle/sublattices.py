"""
Brute-force oracle: E-invariant sublattices of Z^d and their cokernels.

Sublattices of ℓ-power index are enumerated through their Hermite normal
forms (upper triangular, diagonal ℓ^(e_i), entries right of the diagonal
reduced modulo it). A lattice T = H Z^d is E-invariant iff H X = E H has
an integral solution X, and then T / ET is the cokernel of X. Since the
index is an ℓ-power, integrality and ℓ-integrality of X coincide.

The set of cokernels reached is compared with the polygon criterion;
lattices T and ℓT have isomorphic cokernels, so enumerating inside Z^d
with a growing index bound k reaches every class once k is large enough.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Sequence, Tuple

from weilgroups.arith import ord_ell, require_prime
from weilgroups.classify import criterion_local_groups
from weilgroups.errors import (
    BudgetExceededError,
    ConstantTermError,
    InvalidArgumentError,
    MultipleRootsError,
    SingularMatrixError,
)
from weilgroups.lattice import determinant, smith_local
from weilgroups.models import (
    LocalGroupType,
    LocalMatrix,
    OracleComparison,
    OracleSettings,
    SublatticeBasis,
)
from weilgroups.polygons import endpoints_match, first_violation, hodge_polygon_of_group, newton_polygon
from weilgroups.polynomials import IntPoly, is_squarefree

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]
Shape = Tuple[int, ...]


def companion_matrix(f: IntPoly) -> IntMatrix:
    """
    Matrix of multiplication by x on Z[x]/(f) in the basis 1, x, ..., x^(d-1).

    Raises:
        InvalidArgumentError: unless the leading coefficient is ±1.
    """
    d = f.degree
    lead = f.leading_coefficient if not f.is_zero else 0
    if d < 1 or lead not in (1, -1):
        raise InvalidArgumentError(f"companion matrix needs leading coefficient ±1, got {f}")
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -f.coeffs[i] * lead
    return rows


def solve_in_basis(basis: Sequence[Sequence[int]], action: Sequence[Sequence[int]]) -> Optional[IntMatrix]:
    """
    Integral X with H X = E H for upper-triangular H, or ``None`` when the
    lattice spanned by H's columns is not E-invariant.
    """
    d = len(basis)
    image = [[sum(action[i][r] * basis[r][j] for r in range(d)) for j in range(d)] for i in range(d)]
    solution = [[0] * d for _ in range(d)]
    for c in range(d):
        for i in range(d - 1, -1, -1):
            residual = image[i][c] - sum(basis[i][j] * solution[j][c] for j in range(i + 1, d))
            q, r = divmod(residual, basis[i][i])
            if r:
                return None
            solution[i][c] = q
    return solution


def is_invariant(action: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> bool:
    return solve_in_basis(basis, action) is not None


def diagonal_shapes(d: int, k: int) -> Iterator[Shape]:
    """Exponent vectors (e_1, ..., e_d) with e_i >= 0 and Σ e_i <= k."""
    for shape in itertools.product(range(k + 1), repeat=d):
        if sum(shape) <= k:
            yield shape


def _hnf_matrices(ell: int, shape: Shape) -> Iterator[IntMatrix]:
    d = len(shape)
    diagonal = [ell ** e for e in shape]
    slots = [(i, j) for i in range(d) for j in range(i + 1, d)]
    for values in itertools.product(*(range(diagonal[i]) for i, _ in slots)):
        matrix = [[0] * d for _ in range(d)]
        for i in range(d):
            matrix[i][i] = diagonal[i]
        for (i, j), value in zip(slots, values):
            matrix[i][j] = value
        yield matrix


def _invariant_lattices_of_shape(
    action: IntMatrix, ell: int, shape: Shape
) -> List[Tuple[SublatticeBasis, LocalGroupType]]:
    found = []
    index = ell ** sum(shape)
    for matrix in _hnf_matrices(ell, shape):
        restricted = solve_in_basis(matrix, action)
        if restricted is None:
            continue
        cokernel = smith_local(LocalMatrix(prime=ell, rows=restricted)).cokernel()
        basis = SublatticeBasis(matrix=tuple(tuple(row) for row in matrix), index=index)
        found.append((basis, cokernel))
    return found


def _shape_task(args: Tuple[IntMatrix, int, Shape]) -> List[Tuple[SublatticeBasis, LocalGroupType]]:
    return _invariant_lattices_of_shape(*args)


class SublatticeOracle:
    """
    Exhaustive enumeration of invariant sublattices at desk scale.

    Shapes (diagonal exponent vectors) are independent, so they may be
    processed by a process pool; results are merged and sorted, making the
    output independent of scheduling.
    """

    def __init__(self, settings: Optional[OracleSettings] = None):
        self.settings = settings or OracleSettings()

    def check_budget(self, ell: int, d: int, k: int) -> None:
        candidates = ell ** (d * k)
        if candidates > self.settings.budget:
            raise BudgetExceededError(
                f"enumeration bound {ell}^({d}*{k}) = {candidates} exceeds budget {self.settings.budget}",
                bound=k,
                budget=self.settings.budget,
            )

    def invariant_lattices(
        self, action: Sequence[Sequence[int]], ell: int, k: int
    ) -> List[Tuple[SublatticeBasis, LocalGroupType]]:
        """
        Every E-invariant sublattice of index dividing ℓ^k, with its cokernel.

        Raises:
            BudgetExceededError: if ℓ^(d k) exceeds the configured budget.
            SingularMatrixError: if det E = 0.
        """
        require_prime(ell)
        if k < 0:
            raise InvalidArgumentError(f"bound k must be nonnegative, got {k}")
        action = [list(map(int, row)) for row in action]
        d = len(action)
        self.check_budget(ell, d, k)
        if determinant(action) == 0:
            raise SingularMatrixError("singular matrix: E must be invertible")

        shapes = list(diagonal_shapes(d, k))
        tasks = [(action, ell, shape) for shape in shapes]
        if self.settings.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.settings.workers) as pool:
                batches = list(pool.map(_shape_task, tasks))
        else:
            batches = [_shape_task(task) for task in tasks]

        found = [entry for batch in batches for entry in batch]
        found.sort(key=lambda entry: (entry[0].index, entry[0].matrix))
        logger.debug("ℓ=%d k=%d: %d invariant lattices over %d shapes", ell, k, len(found), len(shapes))
        return found

    def enumerate(self, action: Sequence[Sequence[int]], ell: int, k: int) -> List[SublatticeBasis]:
        return [basis for basis, _ in self.invariant_lattices(action, ell, k)]

    def _prepare(self, f_shifted: IntPoly, ell: int, k: Optional[int]) -> Tuple[IntMatrix, int]:
        require_prime(ell)
        if f_shifted.is_zero or f_shifted.constant_term == 0:
            raise ConstantTermError("constant term vanishes", polynomial=f_shifted.to_text())
        if not is_squarefree(f_shifted):
            raise MultipleRootsError("oracle requires no multiple roots", polynomial=f_shifted.to_text())
        if k is None:
            k = ord_ell(f_shifted.constant_term, ell) + self.settings.stabilization_margin
        return companion_matrix(f_shifted), k

    def achievable(self, f_shifted: IntPoly, ell: int, k: Optional[int] = None) -> List[LocalGroupType]:
        """Cokernel types of the companion matrix on invariant lattices."""
        action, k = self._prepare(f_shifted, ell, k)
        return _distinct(group for _, group in self.invariant_lattices(action, ell, k))

    def compare(self, f_shifted: IntPoly, ell: int, k: Optional[int] = None) -> OracleComparison:
        """
        Achievable set at bound k and k + 1, the polygon criterion, and the
        number of lattices whose cokernel violates the polygon inequality.
        """
        action, k = self._prepare(f_shifted, ell, k)
        lattices = self.invariant_lattices(action, ell, k + 1)
        within = [(basis, group) for basis, group in lattices if basis.index <= ell ** k]

        d = f_shifted.degree
        np = newton_polygon(f_shifted, ell)
        violations = 0
        for _, group in lattices:
            hp = hodge_polygon_of_group(group, d)
            if first_violation(np, hp) is not None or not endpoints_match(np, hp):
                violations += 1

        comparison = OracleComparison(
            prime=ell,
            bound=k,
            lattice_count=len(within),
            achievable=tuple(_distinct(group for _, group in within)),
            achievable_next=tuple(_distinct(group for _, group in lattices)),
            criterion=tuple(criterion_local_groups(f_shifted, ell)),
            necessity_violations=violations,
        )
        if violations:
            logger.warning("%d lattices violate the polygon inequality for %s", violations, f_shifted)
        return comparison


def _distinct(groups) -> List[LocalGroupType]:
    return sorted(set(groups), key=lambda g: (g.rank, g.parts))


def enumerate_invariant_sublattices(
    action: Sequence[Sequence[int]], ell: int, k: int, settings: Optional[OracleSettings] = None
) -> List[SublatticeBasis]:
    return SublatticeOracle(settings).enumerate(action, ell, k)


def achievable_groups_bruteforce(
    f_shifted: IntPoly, ell: int, k: Optional[int] = None, settings: Optional[OracleSettings] = None
) -> List[LocalGroupType]:
    return SublatticeOracle(settings).achievable(f_shifted, ell, k)


def compare_with_criterion(
    f_shifted: IntPoly, ell: int, k: Optional[int] = None, settings: Optional[OracleSettings] = None
) -> OracleComparison:
    return SublatticeOracle(settings).compare(f_shifted, ell, k)
