"""
Forest polynomials W(n, k), their orthogonal companions and the idempotency polynomials.

All three families are B-representable: W through the tree polynomials, the idempotency polynomials through
X_0, 2 X_1, 3 X_2, ... .
"""

from pystirling.derived.brep import BRepFamily
from pystirling.families import (
    FamilyId,
    bell,
    binomial,
    compose_family,
    kronecker,
    potential_hat,
    register_table,
    stirling_a,
    tree_poly_hat,
)
from pystirling.polyring import X, MultiPoly


def _out_of_range(n: int, k: int) -> bool:
    return n < 0 or k < 0 or k > n


def _delta(n: int) -> MultiPoly:
    return MultiPoly.constant(kronecker(n, 0))


def _forest(n: int, k: int) -> MultiPoly:
    return potential_hat(n - k, n) * binomial(n - 1, k - 1)


def _idempotency(n: int, k: int) -> MultiPoly:
    return potential_hat(n - k, k) * binomial(n, k)


_FOREST = register_table(FamilyId.FOREST, _forest)
_IDEMPOTENCY = register_table(FamilyId.IDEMPOTENCY, _idempotency)


def forest(n: int, k: int) -> MultiPoly:
    """Forest polynomial W(n, k) = C(n-1, k-1) P^(n-k, n). Unifies to the number of planted forests."""
    if _out_of_range(n, k):
        return MultiPoly.zero()
    if k == 0:
        return _delta(n)
    return _FOREST.get(n, k)


def forest_via_trees(n: int, k: int) -> MultiPoly:
    """W(n, k) = B(n, k)(T^_1, ..., T^_{n-k+1})."""
    return compose_family(bell(n, k), tree_poly_hat)


def forest_companion(n: int, k: int) -> MultiPoly:
    """Orthogonal companion of W, C(n, k) P^(n-k, -k)."""
    if _out_of_range(n, k):
        return MultiPoly.zero()
    if k == 0:
        return _delta(n)
    return potential_hat(n - k, -k) * binomial(n, k)


def forest_companion_via_trees(n: int, k: int) -> MultiPoly:
    """C(n, k) P^(n-k, -k) = A(n, k)(T^_1, ..., T^_{n-k+1})."""
    return compose_family(stirling_a(n, k), tree_poly_hat)


def idempotency_generator(j: int) -> MultiPoly:
    return X(j - 1) * j


def idempotency(n: int, k: int) -> MultiPoly:
    """Idempotency polynomial C(n, k) P^(n-k, k), unifying to C(n, k) k^(n-k)."""
    if _out_of_range(n, k):
        return MultiPoly.zero()
    return _IDEMPOTENCY.get(n, k)


def idempotency_via_bell(n: int, k: int) -> MultiPoly:
    """C(n, k) P^(n-k, k) = B(n, k)(X_0, 2 X_1, 3 X_2, ...)."""
    return compose_family(bell(n, k), idempotency_generator)


def stirling_a_scaled(n: int, k: int) -> MultiPoly:
    """A(n, k)(X_0, 2 X_1, 3 X_2, ...), equal to C(n-1, k-1) P^(n-k, -n)."""
    return compose_family(stirling_a(n, k), idempotency_generator)


def stirling_a_scaled_check(n: int, k: int) -> bool:
    """A(n, k)(X_0, 2 X_1, 3 X_2, ...) = C(n-1, k-1) P^(n-k, -n) for 1 <= k <= n."""
    return stirling_a_scaled(n, k) == potential_hat(n - k, -n) * binomial(n - 1, k - 1)


def forest_family() -> BRepFamily:
    return BRepFamily(tree_poly_hat, FamilyId.FOREST.value)


def idempotency_family() -> BRepFamily:
    return BRepFamily(idempotency_generator, FamilyId.IDEMPOTENCY.value)
