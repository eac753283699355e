"""Jacobson and prime radicals, their H-equivariant versions, and
H-(semi)primality predicates.

For a finite-dimensional algebra the Jacobson radical is the largest
nilpotent ideal and coincides with the prime radical, so one engine
serves both.  Over characteristic 0 (or p > dim) the radical is the
kernel of the trace form (x, y) |-> tr(L_{xy}); in small positive
characteristic we fall back to an exhaustive search for nilpotent
principal ideals, restricted to the trace-form kernel, which always
contains the radical.
"""

from __future__ import annotations

from dataclasses import dataclass

from psl.algebra import (
    Algebra,
    ideal_closure,
    is_ideal,
    is_nilpotent_subspace,
    nilpotency_index,
    span_products,
)
from psl.exactla import (
    Matrix,
    Subspace,
    enumerate_invariant_subspaces,
    preimage_under,
)
from psl.paction import (
    NotHStable,
    PartialAction,
    colon_ideal,
    is_h_stable,
    quotient_action,
)


class UnsupportedCharacteristic(ValueError):
    """Radical not computable: char p <= dim and the search is over budget."""


class FieldNotFinite(ValueError):
    """Operation needs a finite field."""


class DimensionTooLarge(ValueError):
    """Enumeration caps exceeded."""


# enumeration candidates cap for the brute radical search (p ** dim of search space)
BRUTE_BUDGET = 1 << 17


@dataclass(frozen=True)
class RadicalReport:
    radical: Subspace
    method: str  # "trace-form" | "brute-nilpotent"
    nilpotency_index: int


def trace_form_kernel(A: Algebra) -> Subspace:
    """Kernel of the bilinear form (x, y) |-> tr(L_{xy}); always contains J(A)."""
    n = A.dim
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(A.left_mult_matrix(A.mult[i][j]).trace())
        gram.append(tuple(row))
    return Matrix(A.field, gram, ncols=n).left_kernel()


def _matrix_nilpotent(M: Matrix) -> bool:
    n = M.nrows
    power = M
    steps = 1
    while steps < 2 * n:
        if power.is_zero():
            return True
        power = power * power
        steps *= 2
    return power.is_zero()


def brute_nilpotent_radical(A: Algebra, budget: int = BRUTE_BUDGET) -> Subspace:
    """Largest nilpotent ideal by exhausting principal ideals (finite fields).

    The search space is the trace-form kernel, which contains the radical:
    the radical is the sum of the nilpotent principal ideals it contains.
    """
    if A.field.char == 0:
        raise UnsupportedCharacteristic("brute-force radical needs a finite field")
    K = trace_form_kernel(A)
    if K.is_zero():
        return K
    # frequent fast path: the kernel itself is already a nilpotent ideal
    if is_ideal(A, K) and is_nilpotent_subspace(A, K):
        return K
    p = A.field.char
    candidates = (p ** K.dim - 1) // (p - 1)
    if candidates > budget:
        raise UnsupportedCharacteristic(
            f"char {p} trace kernel of dim {K.dim} needs {candidates} candidates (> {budget})"
        )
    # the compiled kernel prefilters by nilpotency of the left-multiplication
    # operator, a necessary condition for membership in the radical
    from psl import _kernel
    from psl.exactla import Fp

    kbasis = [[x.v for x in row] for row in K.rows]
    mult_flat = [x.v for plane in A.mult for row in plane for x in row]
    survivors = _kernel.nilpotent_lifts_fp(kbasis, mult_flat, A.dim, p)
    J = Subspace.zero_space(A.field, A.dim)
    for raw in survivors:
        v = tuple(Fp(x, p) for x in raw)
        if J.contains(v):
            continue
        closure = ideal_closure(A, [v])
        if is_nilpotent_subspace(A, closure):
            J = J + closure
            if J == K:
                break
    return J


def jacobson_radical(A: Algebra, budget: int = BRUTE_BUDGET) -> RadicalReport:
    """J(A) for a unital finite-dimensional algebra."""
    if A.unit is None:
        raise ValueError("jacobson_radical expects a unital algebra")
    if A.dim == 0:
        return RadicalReport(Subspace.zero_space(A.field, 0), "trace-form", 1)
    p = A.field.char
    if p == 0 or p > A.dim:
        J = trace_form_kernel(A)
        method = "trace-form"
    else:
        J = brute_nilpotent_radical(A, budget=budget)
        method = "brute-nilpotent"
    assert is_ideal(A, J), "radical is not a two-sided ideal"
    idx = nilpotency_index(A, J)
    assert idx is not None, "radical is not nilpotent"
    return RadicalReport(J, method, idx)


def prime_radical(A: Algebra, budget: int = BRUTE_BUDGET) -> Subspace:
    """P(A) = J(A) for finite-dimensional algebras (J is nilpotent and P <= J)."""
    return jacobson_radical(A, budget=budget).radical


def h_jacobson_radical(pa: PartialAction, budget: int = BRUTE_BUDGET) -> Subspace:
    """J_H(A) = (J(A):H)."""
    return colon_ideal(pa, jacobson_radical(pa.alg, budget=budget).radical)


def h_prime_radical(pa: PartialAction, budget: int = BRUTE_BUDGET) -> Subspace:
    """P_H(A) = (P(A):H)."""
    return colon_ideal(pa, prime_radical(pa.alg, budget=budget))


def h_radical_of_ideal(pa: PartialAction, I: Subspace, budget: int = BRUTE_BUDGET) -> Subspace:
    """Smallest H-semiprime ideal containing the H-stable ideal I.

    Computed in the quotient: the preimage of P_H(A/I) under A -> A/I.
    """
    if not is_h_stable(pa, I):
        raise NotHStable("h_radical_of_ideal needs an H-stable ideal")
    if I.is_full():
        raise ValueError("the improper ideal has no H-radical")
    qpa, proj = quotient_action(pa, I)
    ph = h_prime_radical(qpa, budget=budget)
    return preimage_under(proj.matrix, ph)


def is_semiprime(A: Algebra, budget: int = BRUTE_BUDGET) -> bool:
    return prime_radical(A, budget=budget).is_zero()


def is_semiprimitive(A: Algebra, budget: int = BRUTE_BUDGET) -> bool:
    return jacobson_radical(A, budget=budget).radical.is_zero()


def is_h_semiprime(pa: PartialAction, budget: int = BRUTE_BUDGET) -> bool:
    return h_prime_radical(pa, budget=budget).is_zero()


def is_h_semiprimitive(pa: PartialAction, budget: int = BRUTE_BUDGET) -> bool:
    return h_jacobson_radical(pa, budget=budget).is_zero()


def enumerate_h_stable_ideals(
    pa: PartialAction, dim_cap: int = 6, field_cap: int = 5
) -> list[Subspace]:
    """All H-stable two-sided ideals of A (finite fields, capped dimensions).

    These are exactly the subspaces invariant under left and right
    multiplications and under the action of every basis element of H.
    """
    A = pa.alg
    p = A.field.char
    if p == 0:
        raise FieldNotFinite("H-stable ideal enumeration needs a finite field")
    if A.dim > dim_cap:
        raise DimensionTooLarge(f"dim {A.dim} exceeds cap {dim_cap}")
    if p > field_cap:
        raise DimensionTooLarge(f"field size {p} exceeds cap {field_cap}")
    operators = (
        [A.left_mult_matrix(A.basis_vector(i)) for i in range(A.dim)]
        + [A.right_mult_matrix(A.basis_vector(i)) for i in range(A.dim)]
        + [pa.act_matrix(i) for i in range(pa.hopf.dim)]
    )
    return enumerate_invariant_subspaces(A.field, A.dim, operators)


def is_h_prime(
    pa: PartialAction, prime: Subspace, dim_cap: int = 6, field_cap: int = 5
) -> bool:
    """H-primality of a proper H-stable ideal, by exhausting H-stable ideal pairs."""
    A = pa.alg
    if prime.is_full():
        raise ValueError("an H-prime ideal must be proper")
    if not is_ideal(A, prime) or not is_h_stable(pa, prime):
        raise NotHStable("is_h_prime needs a proper H-stable ideal")
    ideals = enumerate_h_stable_ideals(pa, dim_cap=dim_cap, field_cap=field_cap)
    outside = [I for I in ideals if not I <= prime]
    for I in outside:
        for J in outside:
            if span_products(A, I, J) <= prime:
                return False
    return True


def is_h_semiprime_by_enumeration(
    pa: PartialAction, dim_cap: int = 6, field_cap: int = 5
) -> bool:
    """Definition-level check: no nonzero H-stable ideal with I^2 = 0 inside 0."""
    ideals = enumerate_h_stable_ideals(pa, dim_cap=dim_cap, field_cap=field_cap)
    return not any(
        not I.is_zero() and is_nilpotent_subspace(pa.alg, I) for I in ideals
    )
