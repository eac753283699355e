"""Smash products of a partial action: A # H and A #_par H = (A # H)(1_A # 1_H).

Tensor coordinates on A (x) H are A-block-major (index = a*dim_H + h), so
the embedded copy a # 1_H of A keeps its own coordinates inside each block.
The carrier of the partial smash product is the image of right
multiplication by 1_A # 1_H, with its RREF rows as basis.
"""

from __future__ import annotations

from typing import Sequence

from psl.algebra import (
    Algebra,
    AlgebraMap,
    NotAnIdeal,
    check_algebra,
    is_ideal,
)
from psl.exactla import Matrix, Subspace, zero_vec
from psl.hopf import dual_hopf
from psl.paction import (
    NotHStable,
    PartialAction,
    check_partial_action,
    is_global,
    is_h_stable,
    quotient_action,
)


def tensor_coords(pa: PartialAction, avec: Sequence, hvec: Sequence) -> tuple:
    """Coordinates of a (x) h in A-block-major layout."""
    m = pa.hopf.dim
    out = list(zero_vec(pa.field, pa.alg.dim * m))
    for j, ca in enumerate(avec):
        if not ca:
            continue
        for i, ch in enumerate(hvec):
            if ch:
                out[j * m + i] = ca * ch
    return tuple(out)


def build_full_smash(pa: PartialAction) -> Algebra:
    """A # H with (a#h)(b#g) = sum a(h1.b) # h2 g; non-unital unless global."""
    H, A = pa.hopf, pa.alg
    m, n = H.dim, A.dim
    N = n * m
    field = pa.field
    basis_a = [A.basis_vector(j) for j in range(n)]
    mult = [[None] * N for _ in range(N)]
    for j in range(n):
        for i in range(m):
            for k in range(n):
                for g in range(m):
                    out = list(zero_vec(field, N))
                    for p in range(m):
                        for q in range(m):
                            c = H.comul[i][p][q]
                            if not c:
                                continue
                            apart = A.multiply(basis_a[j], pa.act_basis(p, basis_a[k]))
                            hpart = H.alg.mult[q][g]
                            for t, xa in enumerate(apart):
                                if not xa:
                                    continue
                                cxa = c * xa
                                for u, xh in enumerate(hpart):
                                    if xh:
                                        out[t * m + u] = out[t * m + u] + cxa * xh
                    mult[j * m + i][k * m + g] = tuple(out)
    labels = tuple(f"{A.labels[j]}#{H.alg.labels[i]}" for j in range(n) for i in range(m))
    candidate_unit = tensor_coords(pa, A.unit, H.unit)
    full = Algebra(field, mult, unit=None, labels=labels)
    unit_ok = all(
        full.multiply(candidate_unit, full.basis_vector(i)) == full.basis_vector(i)
        and full.multiply(full.basis_vector(i), candidate_unit) == full.basis_vector(i)
        for i in range(N)
    )
    if unit_ok:
        full = Algebra(field, mult, unit=candidate_unit, labels=labels)
    return full


class SmashProduct:
    """The unital partial smash product with its carrier data."""

    __slots__ = ("pa", "full", "carrier", "coords", "include_A", "unit_element", "dual_action")

    def __init__(self, pa, full, carrier, coords, include_A, unit_element, dual_action):
        self.pa = pa
        self.full = full
        self.carrier = carrier
        self.coords = coords
        self.include_A = include_A
        self.unit_element = unit_element
        self.dual_action = dual_action

    @property
    def field(self):
        return self.pa.field

    def __repr__(self):
        return (
            f"SmashProduct(A dim {self.pa.alg.dim} # H dim {self.pa.hopf.dim}: "
            f"full {self.full.dim}, carrier {self.carrier.dim})"
        )

    def carrier_coords(self, tensor_vec: Sequence) -> tuple:
        """Express an A(x)H vector lying in the carrier in carrier coordinates."""
        space = Subspace(self.field, self.full.dim, self.coords.rows, self._pivots())
        c = space.coords_of(tensor_vec)
        if c is None:
            raise ValueError("vector is not in the partial smash carrier")
        return c

    def _pivots(self):
        pivots = []
        for row in self.coords.rows:
            pivots.append(next(i for i, x in enumerate(row) if x))
        return tuple(pivots)

    def project(self, tensor_vec: Sequence) -> tuple:
        """(x)(1_A # 1_H) in carrier coordinates, for any x in A # H."""
        return self.carrier_coords(self.full.multiply(tensor_vec, self.unit_element))

    def include_a(self, avec: Sequence) -> tuple:
        return self.include_A.apply(avec)


def build_partial_smash(pa: PartialAction) -> SmashProduct:
    H, A = pa.hopf, pa.alg
    m, n = H.dim, A.dim
    field = pa.field
    full = build_full_smash(pa)
    u = tensor_coords(pa, A.unit, H.unit)

    image = Subspace.from_vectors(
        field, full.dim, [full.multiply(full.basis_vector(i), u) for i in range(full.dim)]
    )
    rows = image.rows
    d = image.dim
    coords = Matrix(field, rows, ncols=full.dim)

    def in_carrier(vec):
        c = image.coords_of(vec)
        if c is None:
            raise AssertionError("carrier is not multiplicatively closed")
        return c

    mult = [[in_carrier(full.multiply(rows[s], rows[t])) for t in range(d)] for s in range(d)]
    unit = in_carrier(u)
    labels = tuple(f"w{s}" for s in range(d))
    carrier = Algebra(field, mult, unit=unit, labels=labels)
    check_algebra(carrier).raise_if_failed("partial smash carrier axioms")

    incl_rows = [in_carrier(tensor_coords(pa, A.basis_vector(j), H.unit)) for j in range(n)]
    include_A = AlgebraMap(A, carrier, Matrix(field, incl_rows, ncols=d))
    assert include_A.is_injective(), "A does not embed in the partial smash product"
    assert include_A.is_multiplicative(), "A -> A#H is not an algebra map"

    K = dual_hopf(H)
    act = []
    for r in range(m):
        act_r = []
        for s in range(d):
            out = list(zero_vec(field, full.dim))
            row = rows[s]
            for idx, c in enumerate(row):
                if not c:
                    continue
                j, i = divmod(idx, m)
                for p in range(m):
                    x = H.comul[i][p][r]
                    if x:
                        out[j * m + p] = out[j * m + p] + c * x
            act_r.append(in_carrier(tuple(out)))
        act.append(act_r)
    dual_action = PartialAction(K, carrier, act)
    check_partial_action(dual_action).raise_if_failed("dual Hopf action axioms")
    assert is_global(dual_action), "H* action on the partial smash product must be global"

    return SmashProduct(pa, full, carrier, coords, include_A, u, dual_action)


def dual_hopf_action(sp: SmashProduct) -> PartialAction:
    """The global H*-action phi |> (a # h) = sum a # h1 phi(h2) on the carrier."""
    return sp.dual_action


def phi_ideal(sp: SmashProduct, I: Subspace) -> Subspace:
    """Phi(I) = I # H in carrier coordinates, for an H-stable ideal I of A."""
    pa = sp.pa
    if not is_ideal(pa.alg, I):
        raise NotAnIdeal("phi_ideal needs a two-sided ideal of A")
    if not is_h_stable(pa, I):
        raise NotHStable("phi_ideal needs an H-stable ideal")
    vecs = []
    for x in I.rows:
        for i in range(pa.hopf.dim):
            t = tensor_coords(pa, x, pa.hopf.alg.basis_vector(i))
            vecs.append(sp.project(t))
    return Subspace.from_vectors(sp.field, sp.carrier.dim, vecs)


def psi_ideal(sp: SmashProduct, J: Subspace) -> Subspace:
    """Psi(J) = J intersect A pulled back to A, for an ideal J of the carrier."""
    if not is_ideal(sp.carrier, J):
        raise NotAnIdeal("psi_ideal needs a two-sided ideal of the carrier")
    incl = sp.include_A.matrix
    image_of_a = Subspace.from_vectors(sp.field, sp.carrier.dim, incl.rows)
    inter = J.intersect(image_of_a)
    back = []
    for w in inter.rows:
        a = incl.solve_left(w)
        assert a is not None, "intersection escaped the image of A"
        back.append(a)
    result = Subspace.from_vectors(sp.field, sp.pa.alg.dim, back)
    assert is_ideal(sp.pa.alg, result) and is_h_stable(sp.pa, result), (
        "psi image must be an H-stable ideal of A"
    )
    return result


def smash_quotient_map(sp: SmashProduct, I: Subspace) -> tuple[SmashProduct, AlgebraMap]:
    """Carrier of A #_par H onto the carrier of (A/I) #_par H, for H-stable I."""
    pa = sp.pa
    qpa, proj = quotient_action(pa, I)
    sq = build_partial_smash(qpa)
    m = pa.hopf.dim
    rows = []
    for r in sp.coords.rows:
        out = list(zero_vec(sp.field, qpa.alg.dim * m))
        for idx, c in enumerate(r):
            if not c:
                continue
            j, i = divmod(idx, m)
            img = proj.apply(pa.alg.basis_vector(j))
            for t, x in enumerate(img):
                if x:
                    out[t * m + i] = out[t * m + i] + c * x
        rows.append(sq.carrier_coords(tuple(out)))
    amap = AlgebraMap(sp.carrier, sq.carrier, Matrix(sp.field, rows, ncols=sq.carrier.dim))
    assert amap.is_multiplicative(), "smash quotient map is not an algebra map"
    return sq, amap
