"""The interpolation matrix of a split factorization and its explicit inverse.

For nodes xi_1, ..., xi_n (n = r1 + r2) let Q(xi) = prod_{k > r1} (xi - xi_k) and, for j > r1,
Q_j(xi) = prod_{k != j} (xi - xi_k). Column j <= r1 of A holds the coefficients of xi^(r1 - j) Q(xi), column j > r1
those of Q_j(xi); row i holds the coefficients of xi^(n - i). Its inverse follows from Lagrange interpolation:

    B_jk = xi_j^(n - k) / L_j(xi_j)                                              (j > r1)
    B_jk = sum_{h <= r1} xi_h^(n - k) / L_h(xi_h) * sigma_(j-1)(front nodes without h)   (j <= r1)

with L_h(xi_h) = prod_{l != h} (xi_h - xi_l). Two backends: exact (sympy DomainMatrix over QQ_I) and float (numpy).
"""

import logging
from collections.abc import Sequence
from typing import Any, NamedTuple

import numpy as np
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from regsym.algebra.bivariate import GaussianLike, to_gaussian
from regsym.errors import CoincidentNodes
from regsym.factorization.symmetric import symmetric_coefficients

logger = logging.getLogger(__name__)

NODE_TOL = 1e-12


class InterpMatrix(NamedTuple):
    r1: int
    r2: int
    nodes: tuple[Any, ...]
    matrix: DomainMatrix | np.ndarray

    @property
    def exact(self) -> bool:
        """Whether the matrix lives over QQ_I."""
        return isinstance(self.matrix, DomainMatrix)


def _nodes(xs: Sequence[GaussianLike | complex], r1: int, r2: int, exact: bool) -> list[Any]:
    if len(xs) != r1 + r2:
        raise ValueError(f"expected {r1 + r2} nodes, got {len(xs)}")
    if r1 < 0 or r2 < 0:
        raise ValueError("r1 and r2 must be nonnegative")
    return [to_gaussian(x) for x in xs] if exact else [complex(x) for x in xs]


def _columns(nodes: list[Any], r1: int, r2: int, zero: Any, one: Any) -> list[list[Any]]:  # noqa: ANN401
    n = r1 + r2
    back = symmetric_coefficients(nodes[r1:], one)
    columns = []
    for j in range(r1):
        column = [zero] * n
        for h, sigma in enumerate(back):
            column[j + h] = sigma
        columns.append(column)
    for j in range(r1, n):
        others = nodes[:j] + nodes[j + 1 :]
        columns.append(symmetric_coefficients(others, one))
    return columns


def build_matrix_A(xs: Sequence[GaussianLike | complex], r1: int, r2: int, exact: bool = True) -> InterpMatrix:
    """
    Build the interpolation matrix A.

    Parameters
    ----------
    xs : Sequence
        Nodes xi_1, ..., xi_(r1 + r2).
    r1, r2 : int
        Sizes of the front and back groups.
    exact : bool
        Exact Gaussian-rational arithmetic (nodes must be exact) or complex floats.

    Examples
    --------
    r1 = 1, r2 = 1, xs = (2, 1) gives columns xi - 1 and xi - 2, i.e. A = [[1, 1], [-1, -2]].
    """
    nodes = _nodes(xs, r1, r2, exact)
    n = r1 + r2
    if exact:
        columns = _columns(nodes, r1, r2, QQ_I.zero, QQ_I.one)
        rows = [[columns[j][i] for j in range(n)] for i in range(n)]
        matrix = DomainMatrix(rows, (n, n), QQ_I)
    else:
        columns = _columns(nodes, r1, r2, 0j, 1 + 0j)
        matrix = np.array(columns, dtype=complex).T.reshape(n, n)
    return InterpMatrix(r1, r2, tuple(nodes), matrix)


def _coincide(a: Any, b: Any, exact: bool, scale: float) -> bool:  # noqa: ANN401
    return a == b if exact else abs(a - b) <= NODE_TOL * scale


def _check_back_nodes(nodes: list[Any], r1: int, exact: bool, scale: float) -> None:
    """Every pair involving a back node must be distinct."""
    for j in range(len(nodes)):
        for k in range(max(j + 1, r1), len(nodes)):
            if _coincide(nodes[j], nodes[k], exact, scale):
                raise CoincidentNodes(f"nodes {j + 1} and {k + 1} coincide")


def _lagrange_weights(nodes: list[Any], one: Any) -> list[Any]:  # noqa: ANN401
    weights = []
    for h, node in enumerate(nodes):
        denominator = one
        for l_index, other in enumerate(nodes):
            if l_index != h:
                denominator = denominator * (node - other)
        weights.append(one / denominator)
    return weights


def _explicit_inverse(nodes: list[Any], r1: int, zero: Any, one: Any) -> list[list[Any]]:  # noqa: ANN401
    n = len(nodes)
    weights = _lagrange_weights(nodes, one)
    powers = [[one] * n for _ in range(n)]
    for h, node in enumerate(nodes):
        for k in range(n - 2, -1, -1):
            powers[h][k] = powers[h][k + 1] * node
    # powers[h][k] = node_h^(n - 1 - k), i.e. xi_h^(n - k) for the 1-based column k + 1
    front_sigmas = [symmetric_coefficients(nodes[:h] + nodes[h + 1 : r1], one) for h in range(r1)]
    rows = []
    for j in range(n):
        if j >= r1:
            rows.append([powers[j][k] * weights[j] for k in range(n)])
            continue
        row = []
        for k in range(n):
            total = zero
            for h in range(r1):
                total = total + powers[h][k] * weights[h] * front_sigmas[h][j]
            row.append(total)
        rows.append(row)
    return rows


def inverse_B(xs: Sequence[GaussianLike | complex], r1: int, r2: int, exact: bool = True) -> DomainMatrix | np.ndarray:
    """
    Return the inverse B of the interpolation matrix from the explicit formulas.

    Parameters
    ----------
    xs : Sequence
        Nodes xi_1, ..., xi_(r1 + r2).
    r1, r2 : int
        Sizes of the front and back groups.
    exact : bool
        Exact Gaussian-rational arithmetic or complex floats.

    Raises
    ------
    CoincidentNodes
        If two nodes coincide and one of them is a back node, or (float mode only) two front nodes coincide. In exact
        mode coincident front nodes are allowed: the cancellation in the front rows is carried out by inverting A
        exactly.
    """
    nodes = _nodes(xs, r1, r2, exact)
    n = r1 + r2
    scale = 1.0 if exact else 1 + max((abs(node) for node in nodes), default=0)
    _check_back_nodes(nodes, r1, exact, scale)
    front_coincide = any(_coincide(nodes[j], nodes[k], exact, scale) for j in range(r1) for k in range(j))
    if front_coincide and not exact:
        raise CoincidentNodes("front nodes coincide; use the exact backend")
    if exact:
        if front_coincide:
            logger.debug("front nodes coincide; inverting A exactly")
            return build_matrix_A(nodes, r1, r2, exact=True).matrix.inv()
        return DomainMatrix(_explicit_inverse(nodes, r1, QQ_I.zero, QQ_I.one), (n, n), QQ_I)
    return np.array(_explicit_inverse(nodes, r1, 0j, 1 + 0j), dtype=complex).reshape(n, n)
