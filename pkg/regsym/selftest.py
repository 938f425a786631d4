#!/usr/bin/env python

import argparse
import hashlib
import logging
import sys
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
import pandas as pd
from sympy import Poly, eye
from sympy.polys.domains import QQ_I

from regsym.algebra.bivariate import XI, BivariatePoly, gaussian
from regsym.algebra.quantization import left_from_weyl, weyl_from_left
from regsym.errors import FactorizationIdentityError
from regsym.factorization.composition import compose_operators, expand_factored, weyl_product_standard
from regsym.factorization.interpolation import build_matrix_A, inverse_B
from regsym.factorization.symmetric import symmetric_coefficients
from regsym.utils.arguments import ArgumentParser, configure_logging
from regsym.utils.sampling import (
    random_float_nodes,
    random_gaussian,
    random_nodes,
    random_operator,
    random_symbol,
    random_x_poly,
)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240229
FLOAT_TOL = 1e-9
FLOAT_NODE_RADIUS = 2.0
FLOAT_NODE_GAP = 0.5

DEFAULT_CASES = {
    "quantization round trip": 500,
    "interpolation inverse": 200,
    "symmetric reconstruction": 200,
    "composition associativity": 50,
    "factored expansion": 50,
    "weyl product": 50,
}


class SuiteResult(NamedTuple):
    name: str
    cases: int
    failures: list[str]
    case_log: list[str]


# ----- property suites -----


def quantization_round_trip(rng: np.random.Generator, cases: int) -> SuiteResult:
    """weyl_from_left and left_from_weyl are mutually inverse; x xi gains exactly +i/2."""
    failures, log = [], []
    x_xi = BivariatePoly.from_terms({(1, 1): 1})
    if weyl_from_left(x_xi) - x_xi != BivariatePoly.constant(gaussian(0, "1/2")):
        failures.append("the Weyl symbol of x D is not x xi + i/2")
    for case in range(cases):
        symbol = random_symbol(rng)
        log.append(str(symbol))
        if left_from_weyl(weyl_from_left(symbol)) != symbol or weyl_from_left(left_from_weyl(symbol)) != symbol:
            failures.append(f"case {case}: round trip fails for {symbol}")
    return SuiteResult("quantization round trip", cases, failures, log)


def interpolation_inverse(rng: np.random.Generator, cases: int) -> SuiteResult:
    """A B = I exactly over QQ_I, and within 1e-9 in float mode on well-separated nodes."""
    failures, log = [], []
    for case in range(cases):
        r1, r2 = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        if r1 + r2 == 0:
            r2 = 1
        nodes = random_nodes(rng, r1 + r2)
        log.append(f"{r1},{r2}:{nodes}")
        n = r1 + r2
        product = build_matrix_A(nodes, r1, r2).matrix * inverse_B(nodes, r1, r2)
        if product.to_Matrix() != eye(n):
            failures.append(f"case {case}: exact A B != I for r1={r1}, r2={r2}")
        float_nodes = random_float_nodes(rng, n, radius=FLOAT_NODE_RADIUS, min_gap=FLOAT_NODE_GAP)
        error = np.max(
            np.abs(
                build_matrix_A(float_nodes, r1, r2, exact=False).matrix @ inverse_B(float_nodes, r1, r2, exact=False)
                - np.eye(n)
            )
        )
        if error > FLOAT_TOL:
            failures.append(f"case {case}: float A B - I has max-norm {error:.3g}")
    return SuiteResult("interpolation inverse", cases, failures, log)


def symmetric_reconstruction(rng: np.random.Generator, cases: int) -> SuiteResult:
    """prod (xi - xi_j) = sum sigma_h xi^(m - h) exactly."""
    failures, log = [], []
    for case in range(cases):
        values = [random_gaussian(rng) for _ in range(int(rng.integers(0, 9)))]
        log.append(str(values))
        product = Poly(1, XI, domain=QQ_I)
        for value in values:
            product = product * Poly.from_list([QQ_I.one, -value], XI, domain=QQ_I)
        expected = product.rep.to_list()
        if symmetric_coefficients(values, QQ_I.one) != expected:
            failures.append(f"case {case}: sigma expansion of {values} disagrees with the product")
    return SuiteResult("symmetric reconstruction", cases, failures, log)


def composition_associativity(rng: np.random.Generator, cases: int) -> SuiteResult:
    """(A B) C = A (B C) exactly."""
    failures, log = [], []
    for case in range(cases):
        a, b, c = (random_operator(rng, max_order=2, max_degree=2) for _ in range(3))
        log.append(f"{a!r};{b!r};{c!r}")
        if compose_operators(compose_operators(a, b), c) != compose_operators(a, compose_operators(b, c)):
            failures.append(f"case {case}: composition is not associative")
    return SuiteResult("composition associativity", cases, failures, log)


def factored_expansion(rng: np.random.Generator, cases: int) -> SuiteResult:
    """Leading slots of sum a_k D^(r1 - k) o prod (D - xi_j) are sum a_l sigma_h; constant roots leave no remainder."""
    failures, log = [], []
    for case in range(cases):
        r1, r2 = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        a = [random_x_poly(rng, 3, nonzero=True)] + [random_x_poly(rng, 3) for _ in range(r1)]
        constant = bool(rng.integers(0, 2))
        xi_polys = [random_x_poly(rng, 0 if constant else 3) for _ in range(r2)]
        log.append(f"{[c.as_expr() for c in a]};{[c.as_expr() for c in xi_polys]}")
        try:
            expand_factored(a, xi_polys)
        except FactorizationIdentityError as e:
            failures.append(f"case {case}: {e}")
    return SuiteResult("factored expansion", cases, failures, log)


def weyl_product(rng: np.random.Generator, cases: int) -> SuiteResult:
    """The standard symbol of a Weyl product follows the derivative expansion of its remainders."""
    failures, log = [], []
    for case in range(cases):
        a = [random_x_poly(rng, 2, nonzero=True)] + [random_x_poly(rng, 2) for _ in range(int(rng.integers(0, 3)))]
        b = [random_x_poly(rng, 2, nonzero=True)] + [random_x_poly(rng, 2) for _ in range(int(rng.integers(0, 3)))]
        log.append(f"{[c.as_expr() for c in a]};{[c.as_expr() for c in b]}")
        try:
            weyl_product_standard(a, b)
        except FactorizationIdentityError as e:
            failures.append(f"case {case}: {e}")
    return SuiteResult("weyl product", cases, failures, log)


SUITES: dict[str, Callable[[np.random.Generator, int], SuiteResult]] = {
    "quantization round trip": quantization_round_trip,
    "interpolation inverse": interpolation_inverse,
    "symmetric reconstruction": symmetric_reconstruction,
    "composition associativity": composition_associativity,
    "factored expansion": factored_expansion,
    "weyl product": weyl_product,
}


# ----- runner -----


def selftest(seed: int = DEFAULT_SEED, cases: int | None = None) -> tuple[list[SuiteResult], str]:
    """
    Run every property suite.

    Parameters
    ----------
    seed : int
        Seed of the random case generator; the same seed reproduces the same case lists.
    cases : int | None
        Cases per suite; the per-suite defaults when omitted.

    Returns
    -------
    tuple[list[SuiteResult], str]
        The suite results and a SHA-256 digest of every generated case.
    """
    rng = np.random.default_rng(seed)
    digest = hashlib.sha256()
    results = []
    for name, suite in SUITES.items():
        result = suite(rng, DEFAULT_CASES[name] if cases is None else cases)
        logger.debug("%s: %d cases, %d failures", name, result.cases, len(result.failures))
        for line in result.case_log:
            digest.update(line.encode("utf-8"))
        results.append(result)
    return results, digest.hexdigest()


def report_selftest(seed: int = DEFAULT_SEED, cases: int | None = None) -> int:
    """Print the suite table, the case digest and every failure; return 0 when all properties hold."""
    results, digest = selftest(seed, cases)
    table = pd.DataFrame(
        [{"suite": r.name, "cases": r.cases, "failures": len(r.failures)} for r in results],
        columns=["suite", "cases", "failures"],
    )
    print(table.to_string(index=False))
    failures = [failure for result in results for failure in result.failures]
    for failure in failures:
        print(f"FAIL {failure}", file=sys.stderr)
    print(f"case digest: {digest}")
    print("all properties hold" if not failures else f"{len(failures)} property failures")
    return 1 if failures else 0


def add_selftest_arguments(parser: argparse.ArgumentParser) -> None:
    """Add --seed, --cases and --verbose."""
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the random case generator")
    parser.add_argument("--cases", type=int, default=None, help="cases per suite (default: per-suite counts)")
    parser.add_argument("--verbose", action="store_true", help="log debug messages to standard error")


def main() -> None:  # noqa: D103
    parser = ArgumentParser(description="Runs the exact property suites of the algebra and factorization modules")
    add_selftest_arguments(parser)

    args = parser.parse_args()
    configure_logging(args.verbose)
    if args.cases is not None and args.cases < 0:
        parser.error("--cases must be nonnegative")
    sys.exit(report_selftest(args.seed, args.cases))


if __name__ == "__main__":
    main()
