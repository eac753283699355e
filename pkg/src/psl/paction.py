"""Partial actions of finite-dimensional Hopf algebras on algebras.

The action tensor stores act[i][j] = h_i . e_j as a coordinate vector.
A partial action satisfies, on a unital algebra,

    PA1: 1_H . a = a
    PA3: h . (ab)    = sum (h1 . a)(h2 . b)
    PA4: h . (g . b) = sum (h1 . 1_A)((h2 g) . b)

and is global when additionally h . 1_A = eps(h) 1_A.
"""

from __future__ import annotations

import random
from typing import Sequence

from psl.algebra import (
    Algebra,
    AlgebraMap,
    CheckReport,
    NotAnIdeal,
    is_ideal,
    quotient_algebra,
)
from psl.exactla import (
    DimensionMismatch,
    Matrix,
    Subspace,
    is_zero_vec,
    vec_scale,
    zero_vec,
)
from psl.hopf import GroupTable, HopfAlgebra, dual_group_algebra, dual_hopf, group_algebra


class NotHStable(ValueError):
    """Ideal is not H-stable."""


class NotIdempotent(ValueError):
    pass


class NotRightIdealUnit(ValueError):
    """The idempotent is not an identity element for its right ideal."""


class BadSubgroup(ValueError):
    pass


class CharDividesOrder(ValueError):
    pass


class PartialAction:
    __slots__ = ("hopf", "alg", "act")

    def __init__(self, hopf: HopfAlgebra, alg: Algebra, act):
        if hopf.field != alg.field:
            raise DimensionMismatch("Hopf algebra and algebra over different fields")
        if alg.unit is None:
            raise ValueError("partial actions require a unital algebra")
        if alg.dim == 0:
            raise ValueError("partial actions require a nonzero algebra")
        m, n = hopf.dim, alg.dim
        field = alg.field
        self.hopf = hopf
        self.alg = alg
        self.act = tuple(
            tuple(tuple(field.of(x) for x in act[i][j]) for j in range(n)) for i in range(m)
        )
        if any(len(self.act[i][j]) != n for i in range(m) for j in range(n)):
            raise DimensionMismatch("action tensor shape mismatch")

    @property
    def field(self):
        return self.alg.field

    def __eq__(self, other):
        return (
            isinstance(other, PartialAction)
            and self.hopf == other.hopf
            and self.alg == other.alg
            and self.act == other.act
        )

    def __hash__(self):
        return hash((self.hopf, self.alg, self.act))

    def __repr__(self):
        return f"PartialAction(H dim {self.hopf.dim} on A dim {self.alg.dim} over {self.field})"

    def act_basis(self, i: int, avec: Sequence) -> tuple:
        """h_i . a for a basis element h_i."""
        v = self.alg.coerce(avec)
        out = list(zero_vec(self.field, self.alg.dim))
        for j, c in enumerate(v):
            if not c:
                continue
            for k, x in enumerate(self.act[i][j]):
                if x:
                    out[k] = out[k] + c * x
        return tuple(out)

    def act_vec(self, hvec: Sequence, avec: Sequence) -> tuple:
        """h . a for arbitrary coordinate vectors."""
        h = self.hopf.alg.coerce(hvec)
        out = list(zero_vec(self.field, self.alg.dim))
        for i, c in enumerate(h):
            if not c:
                continue
            for k, x in enumerate(self.act_basis(i, avec)):
                if x:
                    out[k] = out[k] + c * x
        return tuple(out)

    def act_matrix(self, i: int) -> Matrix:
        """Matrix of a |-> h_i . a in the row-vector convention."""
        return Matrix(self.field, self.act[i], ncols=self.alg.dim)

    def unit_image(self, i: int) -> tuple:
        """h_i . 1_A."""
        return self.act_basis(i, self.alg.unit)


def check_partial_action(pa: PartialAction, samples: int = 4) -> CheckReport:
    """PA1, PA3, PA4 on all basis tuples; PA2 re-checked on seeded random samples."""
    failures = []
    H, A = pa.hopf, pa.alg
    m, n = H.dim, A.dim
    basis_a = [A.basis_vector(j) for j in range(n)]

    for j in range(n):
        if pa.act_vec(H.unit, basis_a[j]) != basis_a[j]:
            failures.append(f"PA1 fails: 1_H . a != a at basis a={A.labels[j]}")

    # PA3 on all basis triples
    for i in range(m):
        for j in range(n):
            for k in range(n):
                lhs = pa.act_basis(i, A.mult[j][k])
                rhs = list(zero_vec(pa.field, n))
                for p in range(m):
                    for q in range(m):
                        c = H.comul[i][p][q]
                        if not c:
                            continue
                        prod = A.multiply(pa.act_basis(p, basis_a[j]), pa.act_basis(q, basis_a[k]))
                        for t, x in enumerate(prod):
                            if x:
                                rhs[t] = rhs[t] + c * x
                if lhs != tuple(rhs):
                    failures.append(f"PA3 fails at (h{i}, {A.labels[j]}, {A.labels[k]})")

    # PA4 on all basis triples
    for i in range(m):
        for g in range(m):
            for k in range(n):
                lhs = pa.act_basis(i, pa.act_basis(g, basis_a[k]))
                rhs = list(zero_vec(pa.field, n))
                for p in range(m):
                    for q in range(m):
                        c = H.comul[i][p][q]
                        if not c:
                            continue
                        hq_g = H.alg.mult[q][g]
                        prod = A.multiply(pa.unit_image(p), pa.act_vec(hq_g, basis_a[k]))
                        for t, x in enumerate(prod):
                            if x:
                                rhs[t] = rhs[t] + c * x
                if lhs != tuple(rhs):
                    failures.append(f"PA4 fails at (h{i}, h{g}, {A.labels[k]})")

    # PA2 is implied by PA1+PA3+PA4 for unital A; sample it as redundancy
    rng = random.Random(20107)
    for _ in range(samples):
        i = rng.randrange(m)
        g = rng.randrange(m)
        a = basis_a[rng.randrange(n)]
        b = basis_a[rng.randrange(n)]
        lhs = pa.act_basis(i, A.multiply(a, pa.act_basis(g, b)))
        rhs = list(zero_vec(pa.field, n))
        for p in range(m):
            for q in range(m):
                c = pa.hopf.comul[i][p][q]
                if not c:
                    continue
                hq_g = H.alg.mult[q][g]
                prod = A.multiply(pa.act_basis(p, a), pa.act_vec(hq_g, b))
                for t, x in enumerate(prod):
                    if x:
                        rhs[t] = rhs[t] + c * x
        if lhs != tuple(rhs):
            failures.append(f"PA2 fails at sampled (h{i}, h{g})")

    return CheckReport(not failures, tuple(failures))


def is_global(pa: PartialAction) -> bool:
    """h . 1_A = eps(h) 1_A on every basis element."""
    return all(
        pa.unit_image(i) == vec_scale(pa.hopf.counit[i], pa.alg.unit)
        for i in range(pa.hopf.dim)
    )


# ---------------------------------------------------------------------------
# builders

def trivial_action(H: HopfAlgebra, A: Algebra) -> PartialAction:
    """The global action h . a = eps(h) a."""
    act = [
        [vec_scale(H.counit[i], A.basis_vector(j)) for j in range(A.dim)]
        for i in range(H.dim)
    ]
    return PartialAction(H, A, act)


def c4_triple(field) -> PartialAction:
    """C_4 acting partially on field^3 by shifting the canonical idempotents."""
    from psl.algebra import product_of_fields

    H = group_algebra(field, GroupTable.cyclic(4))
    A = product_of_fields(field, 3)
    z = zero_vec(field, 3)
    e = [A.basis_vector(i) for i in range(3)]
    act = [
        [e[0], e[1], e[2]],
        [z, e[0], e[1]],
        [e[2], z, e[0]],
        [e[1], e[2], z],
    ]
    pa = PartialAction(H, A, act)
    check_partial_action(pa).raise_if_failed("c4_triple axioms")
    return pa


def dual_group_translation_action(field, G: GroupTable) -> PartialAction:
    """The global (kG)*-action on kG given by p_g acting as projection on g."""
    H = dual_group_algebra(field, G)
    B = group_algebra(field, G).alg
    n = G.order
    z = zero_vec(field, n)
    act = [[B.basis_vector(j) if i == j else z for j in range(n)] for i in range(n)]
    pa = PartialAction(H, B, act)
    check_partial_action(pa).raise_if_failed("dual group translation axioms")
    return pa


def induce_from_ideal(global_pa: PartialAction, e: Sequence) -> PartialAction:
    """Restrict a global action to the right ideal eB via a |-> e (h . a)."""
    if not is_global(global_pa):
        raise ValueError("induce_from_ideal needs a global action")
    B = global_pa.alg
    e = B.coerce(e)
    if B.multiply(e, e) != e:
        raise NotIdempotent("e is not idempotent")
    ideal = Subspace.from_vectors(
        B.field, B.dim, [B.multiply(e, B.basis_vector(j)) for j in range(B.dim)]
    )
    for r in ideal.rows:
        if B.multiply(e, r) != r or B.multiply(r, e) != r:
            raise NotRightIdealUnit("e is not an identity element of eB")

    rows = ideal.rows
    k = ideal.dim

    def coords(vec):
        c = ideal.coords_of(vec)
        if c is None:
            raise AssertionError("product escaped the right ideal eB")
        return c

    mult = [[coords(B.multiply(rows[s], rows[t])) for t in range(k)] for s in range(k)]
    A = Algebra(B.field, mult, unit=coords(e), labels=[f"a{s}" for s in range(k)])
    act = [
        [coords(B.multiply(e, global_pa.act_basis(i, rows[s]))) for s in range(k)]
        for i in range(global_pa.hopf.dim)
    ]
    pa = PartialAction(global_pa.hopf, A, act)
    check_partial_action(pa).raise_if_failed("induced partial action axioms")
    return pa


def dual_group_idempotent(field, G: GroupTable, N: Sequence[int]) -> PartialAction:
    """(kG)* acting partially on e_N kG for a normal subgroup N of order prime to char."""
    Ns = sorted(set(int(x) for x in N))
    if not G.is_normal(Ns):
        raise BadSubgroup(f"{Ns} is not a normal subgroup")
    if field.char and len(Ns) % field.char == 0:
        raise CharDividesOrder(f"char {field.char} divides |N| = {len(Ns)}")
    B = group_algebra(field, G).alg
    inv = field.one / field.of(len(Ns))
    e_N = list(zero_vec(field, G.order))
    for idx in Ns:
        e_N[idx] = inv
    return induce_from_ideal(dual_group_translation_action(field, G), tuple(e_N))


# ---------------------------------------------------------------------------
# invariants, stability, quotients

def invariant_subalgebra(pa: PartialAction) -> Subspace:
    """Solutions of h . a = a (h . 1_A) for all basis h."""
    A = pa.alg
    n = A.dim
    unit_images = [pa.unit_image(i) for i in range(pa.hopf.dim)]
    rows = []
    for j in range(n):
        ej = A.basis_vector(j)
        blocks = []
        for i, ci in enumerate(unit_images):
            diff = tuple(
                x - y for x, y in zip(pa.act_basis(i, ej), A.multiply(ej, ci))
            )
            blocks.extend(diff)
        rows.append(tuple(blocks))
    S = Matrix(pa.field, rows, ncols=n * pa.hopf.dim).left_kernel()
    assert S.contains(A.unit), "invariant subalgebra lost the unit"
    for u in S.rows:
        for v in S.rows:
            assert S.contains(A.multiply(u, v)), "invariant subalgebra not closed"
    return S


def colon_ideal(pa: PartialAction, I: Subspace) -> Subspace:
    """(I:H) = {x in I : h . x in I for all h}: largest H-stable ideal inside I."""
    if not is_ideal(pa.alg, I):
        raise NotAnIdeal("colon_ideal needs a two-sided ideal")
    if I.is_zero():
        return I
    rows = []
    for r in I.rows:
        blocks = []
        for i in range(pa.hopf.dim):
            blocks.extend(I.reduce(pa.act_basis(i, r)))
        rows.append(tuple(blocks))
    z = Matrix(pa.field, rows, ncols=pa.alg.dim * pa.hopf.dim).left_kernel()
    result = Subspace.from_vectors(pa.field, pa.alg.dim, [I.lift(c) for c in z.rows])
    assert result <= I
    assert is_h_stable(pa, result), "colon ideal is not H-stable"
    return result


def is_h_stable(pa: PartialAction, I: Subspace) -> bool:
    """H . I <= I, checked on basis pairs."""
    return all(
        I.contains(pa.act_basis(i, r)) for r in I.rows for i in range(pa.hopf.dim)
    )


def quotient_action(pa: PartialAction, I: Subspace) -> tuple[PartialAction, AlgebraMap]:
    """Induced action h . (a + I) = (h . a) + I on the quotient algebra."""
    if not is_h_stable(pa, I):
        raise NotHStable("quotient_action needs an H-stable ideal")
    Q, proj = quotient_algebra(pa.alg, I)
    comp = I.complement_indices()
    lifts = [pa.alg.basis_vector(c) for c in comp]
    act = [
        [proj.apply(pa.act_basis(i, lifts[j])) for j in range(Q.dim)]
        for i in range(pa.hopf.dim)
    ]
    qpa = PartialAction(pa.hopf, Q, act)
    check_partial_action(qpa).raise_if_failed("quotient action axioms")
    return qpa, proj


# ---------------------------------------------------------------------------
# coactions (Eq. h . a = sum a0 a1(h) over the dual Hopf algebra)

class PartialCoaction:
    """rho: A -> A (x) K in first-factor-major coordinates (K coacting)."""

    __slots__ = ("alg", "hopf", "rho")

    def __init__(self, alg: Algebra, hopf: HopfAlgebra, rho: Matrix):
        if rho.nrows != alg.dim or rho.ncols != alg.dim * hopf.dim:
            raise DimensionMismatch("coaction matrix shape mismatch")
        self.alg = alg
        self.hopf = hopf
        self.rho = rho

    @property
    def field(self):
        return self.alg.field

    def rho_of(self, vec: Sequence) -> tuple:
        return self.rho.apply(self.alg.coerce(vec))


def _tensor_multiply(A: Algebra, K: Algebra, u: Sequence, v: Sequence) -> tuple:
    """(a (x) k)(b (x) l) = ab (x) kl on A (x) K coordinate vectors."""
    n, m = A.dim, K.dim
    out = list(zero_vec(A.field, n * m))
    for idx1, c1 in enumerate(u):
        if not c1:
            continue
        a1, k1 = divmod(idx1, m)
        for idx2, c2 in enumerate(v):
            if not c2:
                continue
            a2, k2 = divmod(idx2, m)
            c = c1 * c2
            pa_ = A.mult[a1][a2]
            pk = K.mult[k1][k2]
            for a, xa in enumerate(pa_):
                if not xa:
                    continue
                ca = c * xa
                for k, xk in enumerate(pk):
                    if xk:
                        out[a * m + k] = out[a * m + k] + ca * xk
    return tuple(out)


def action_to_coaction(pa: PartialAction) -> PartialCoaction:
    """rho(a) = sum_i (h_i . a) (x) p_i over the dual basis of H*."""
    K = dual_hopf(pa.hopf)
    n, m = pa.alg.dim, K.dim
    rows = []
    for j in range(n):
        row = list(zero_vec(pa.field, n * m))
        for i in range(m):
            img = pa.act_basis(i, pa.alg.basis_vector(j))
            for a, x in enumerate(img):
                if x:
                    row[a * m + i] = row[a * m + i] + x
        rows.append(tuple(row))
    return PartialCoaction(pa.alg, K, Matrix(pa.field, rows, ncols=n * m))


def coaction_to_action(pc: PartialCoaction, hopf: HopfAlgebra) -> PartialAction:
    """Reconstruct h . a = sum a0 a1(h) (dual-basis pairing against K = H*)."""
    n, m = pc.alg.dim, pc.hopf.dim
    if hopf.dim != m:
        raise DimensionMismatch("Hopf algebra does not match the coacting dual")
    act = [
        [
            tuple(pc.rho.rows[j][a * m + i] for a in range(n))
            for j in range(n)
        ]
        for i in range(m)
    ]
    return PartialAction(hopf, pc.alg, act)


def check_partial_coaction(pc: PartialCoaction) -> CheckReport:
    """PC1, PC2 on basis pairs, PC3 on all basis elements."""
    failures = []
    A, K = pc.alg, pc.hopf
    n, m = A.dim, K.dim
    field = pc.field

    for j in range(n):
        row = pc.rho.rows[j]
        counit_applied = list(zero_vec(field, n))
        for idx, c in enumerate(row):
            if not c:
                continue
            a, k = divmod(idx, m)
            if K.counit[k]:
                counit_applied[a] = counit_applied[a] + c * K.counit[k]
        if tuple(counit_applied) != A.basis_vector(j):
            failures.append(f"PC1 fails at basis {A.labels[j]}")

    for j in range(n):
        for k in range(n):
            lhs = pc.rho.apply(A.mult[j][k])
            rhs = _tensor_multiply(A, K.alg, pc.rho.rows[j], pc.rho.rows[k])
            if lhs != rhs:
                failures.append(f"PC2 fails at basis pair ({A.labels[j]}, {A.labels[k]})")

    rho_unit = pc.rho_of(A.unit)
    for j in range(n):
        lhs: dict = {}
        for idx, c in enumerate(pc.rho.rows[j]):
            if not c:
                continue
            a, k = divmod(idx, m)
            for idx2, c2 in enumerate(pc.rho.rows[a]):
                if not c2:
                    continue
                b, l = divmod(idx2, m)
                key = (b, l, k)
                lhs[key] = lhs.get(key, field.zero) + c * c2
        rhs: dict = {}
        for idx, c in enumerate(pc.rho.rows[j]):
            if not c:
                continue
            a, k = divmod(idx, m)
            for l1 in range(m):
                for l2 in range(m):
                    d = K.comul[k][l1][l2]
                    if not d:
                        continue
                    # multiply (rho(1) (x) 1_K) on the left
                    for idx0, c0 in enumerate(rho_unit):
                        if not c0:
                            continue
                        b0, l0 = divmod(idx0, m)
                        coef = c * d * c0
                        pa_ = A.mult[b0][a]
                        pk = K.alg.mult[l0][l1]
                        for b, xb in enumerate(pa_):
                            if not xb:
                                continue
                            for l, xl in enumerate(pk):
                                if xl:
                                    key = (b, l, l2)
                                    rhs[key] = rhs.get(key, field.zero) + coef * xb * xl
        keys = set(lhs) | set(rhs)
        if any(lhs.get(t, field.zero) != rhs.get(t, field.zero) for t in keys):
            failures.append(f"PC3 fails at basis {A.labels[j]}")

    return CheckReport(not failures, tuple(failures))


def coinvariant_subalgebra(pc: PartialCoaction) -> Subspace:
    """Solutions of rho(x) = (x (x) 1_K) rho(1)."""
    A, K = pc.alg, pc.hopf
    n, m = A.dim, K.dim
    rho_unit = pc.rho_of(A.unit)
    rows = []
    for j in range(n):
        x_tensor_one = list(zero_vec(pc.field, n * m))
        for k, c in enumerate(K.unit):
            if c:
                x_tensor_one[j * m + k] = c
        rhs = _tensor_multiply(A, K.alg, tuple(x_tensor_one), rho_unit)
        rows.append(tuple(a - b for a, b in zip(pc.rho.rows[j], rhs)))
    return Matrix(pc.field, rows, ncols=n * m).left_kernel()
