"""Exact linear algebra over Q and over prime fields F_p.

Scalars are `fractions.Fraction` (over Q) or `Fp` instances (over F_p);
vectors are tuples of scalars, matrices are row-major tuples of such
tuples, and subspaces are kept in reduced row echelon form so that
equality of subspaces is structural equality.  Everything is immutable
and every operation is a pure function.

Row reduction over F_p dispatches to the compiled kernel when the
extension is available (see psl._kernel).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from psl import _kernel


class FieldMismatch(ValueError):
    """Operands live over different fields."""


class AmbientMismatch(ValueError):
    """Subspaces of different ambient dimension were combined."""


class DimensionMismatch(ValueError):
    """Vector or matrix shapes do not agree."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Fp:
    """Residue mod a prime p, reduced to [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _check(self, other: "Fp") -> None:
        if self.p != other.p:
            raise FieldMismatch(f"F_{self.p} vs F_{other.p}")

    def __add__(self, other):
        if isinstance(other, Fp):
            self._check(other)
            return Fp(self.v + other.v, self.p)
        if isinstance(other, int):
            return Fp(self.v + other, self.p)
        raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Fp):
            self._check(other)
            return Fp(self.v - other.v, self.p)
        if isinstance(other, int):
            return Fp(self.v - other, self.p)
        raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")

    def __rsub__(self, other):
        if isinstance(other, int):
            return Fp(other - self.v, self.p)
        raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")

    def __mul__(self, other):
        if isinstance(other, Fp):
            self._check(other)
            return Fp(self.v * other.v, self.p)
        if isinstance(other, int):
            return Fp(self.v * other, self.p)
        raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fp(other, self.p)
        if isinstance(other, Fp):
            self._check(other)
            if other.v == 0:
                raise ZeroDivisionError("division by zero in F_p")
            return Fp(self.v * pow(other.v, self.p - 2, self.p), self.p)
        raise FieldMismatch(f"cannot combine F_{self.p} with {type(other).__name__}")

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


class Field:
    """Field descriptor; char 0 means Q, prime char means F_p."""

    char: int

    def of(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise NotImplementedError

    def format_scalar(self, x):
        raise NotImplementedError

    def sort_key(self, x):
        raise NotImplementedError


class RationalField(Field):
    char = 0

    def of(self, x):
        if isinstance(x, Fp):
            raise FieldMismatch("F_p value used over Q")
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise FieldMismatch(f"cannot coerce {type(x).__name__} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def elements(self):
        raise FieldMismatch("Q is not finite")

    def format_scalar(self, x):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else f"{x.numerator}"

    def sort_key(self, x):
        return (x.numerator, x.denominator)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.char = p

    @property
    def p(self) -> int:
        return self.char

    def of(self, x):
        if isinstance(x, Fp):
            if x.p != self.char:
                raise FieldMismatch(f"F_{x.p} value used over F_{self.char}")
            return x
        if isinstance(x, int):
            return Fp(x, self.char)
        if isinstance(x, str):
            return Fp(int(x), self.char)
        raise FieldMismatch(f"cannot coerce {type(x).__name__} into F_{self.char}")

    @property
    def zero(self):
        return Fp(0, self.char)

    @property
    def one(self):
        return Fp(1, self.char)

    def elements(self):
        return (Fp(v, self.char) for v in range(self.char))

    def format_scalar(self, x):
        return str(x.v)

    def sort_key(self, x):
        return (x.v,)

    def __repr__(self):
        return f"GF({self.char})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))


QQ = RationalField()
_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def parse_field(spec: dict) -> Field:
    """Workspace field descriptor: {"kind": "Q"} or {"kind": "Fp", "p": 5}."""
    kind = spec.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(spec["p"]))
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# vectors (tuples of scalars)

def zero_vec(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def unit_vec(field: Field, n: int, i: int) -> tuple:
    z = field.zero
    return tuple(field.one if j == i else z for j in range(n))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def is_zero_vec(v: Sequence) -> bool:
    return not any(v)


def all_vectors(field: Field, n: int) -> Iterator[tuple]:
    """Every vector of F_p^n (finite fields only)."""
    if field.char == 0:
        raise FieldMismatch("cannot enumerate vectors over Q")
    p = field.char
    total = p ** n
    for code in range(total):
        vec = []
        c = code
        for _ in range(n):
            vec.append(Fp(c % p, p))
            c //= p
        yield tuple(vec)


def projective_vectors(field: Field, n: int) -> Iterator[tuple]:
    """Nonzero vectors of F_p^n, one per scalar line (first nonzero entry 1)."""
    for v in all_vectors(field, n):
        lead = next((x for x in v if x), None)
        if lead is not None and lead.v == 1:
            yield v


# ---------------------------------------------------------------------------
# matrices

def _rref_generic(rows: list[list]) -> tuple[list[list], int, list[int]]:
    """Field-generic fraction-style elimination (used over Q)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return rows, 0, []
    a = [list(row) for row in rows]
    piv_r = 0
    pivots = []
    for c in range(n):
        r = next((i for i in range(piv_r, m) if a[i][c]), -1)
        if r < 0:
            continue
        if r != piv_r:
            a[r], a[piv_r] = a[piv_r], a[r]
        f = a[piv_r][c]
        prow = a[piv_r]
        for j in range(c, n):
            prow[j] = prow[j] / f
        for i in range(m):
            if i == piv_r:
                continue
            f = a[i][c]
            if not f:
                continue
            irow = a[i]
            for j in range(c, n):
                irow[j] = irow[j] - f * prow[j]
        pivots.append(c)
        piv_r += 1
        if piv_r == m:
            break
    return a, piv_r, pivots


class Matrix:
    """Immutable dense matrix with a uniform field descriptor."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        rws = tuple(tuple(field.of(x) for x in row) for row in rows)
        if rws:
            ncols = len(rws[0])
            if any(len(r) != ncols for r in rws):
                raise DimensionMismatch("ragged rows")
        elif ncols is None:
            ncols = 0
        self.field = field
        self.rows = rws
        self.nrows = len(rws)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [unit_vec(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "Matrix":
        return cls(field, [zero_vec(field, n) for _ in range(m)], ncols=n)

    def _check_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.ncols == other.ncols
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: [{body}])"

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], ncols=self.nrows)

    def stack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.ncols and self.nrows and other.nrows:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.field, self.rows + other.rows, ncols=max(self.ncols, other.ncols))

    def apply(self, vec: Sequence) -> tuple:
        """Row-vector action: vec @ self (rows of self are images of basis)."""
        if len(vec) != self.nrows:
            raise DimensionMismatch(f"vector length {len(vec)} != {self.nrows}")
        out = list(zero_vec(self.field, self.ncols))
        for c, row in zip(vec, self.rows):
            if not c:
                continue
            for j, x in enumerate(row):
                if x:
                    out[j] = out[j] + c * x
        return tuple(out)

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        return Matrix(self.field, [other.apply(r) for r in self.rows], ncols=other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shapes differ")
        return Matrix(self.field, [vec_add(r, s) for r, s in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("shapes differ")
        return Matrix(self.field, [vec_sub(r, s) for r, s in zip(self.rows, other.rows)], ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field.of(c)
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows], ncols=self.ncols)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of non-square matrix")
        t = self.field.zero
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)

    def _rref_raw(self) -> tuple[list[list], int, list[int]]:
        if not self.rows:
            return [], 0, []
        if self.field.char:
            p = self.field.char
            raw = [[x.v for x in row] for row in self.rows]
            red, rank, pivots = _kernel.rref_fp(raw, p)
            return [[Fp(x, p) for x in row] for row in red], rank, pivots
        return _rref_generic([list(r) for r in self.rows])

    def rref(self) -> tuple["Matrix", int]:
        red, rank, _ = self._rref_raw()
        return Matrix(self.field, red, ncols=self.ncols), rank

    def rank(self) -> int:
        return self._rref_raw()[1]

    def kernel(self) -> "Subspace":
        """Null space {x : self @ x^T = 0} as a subspace of F^ncols."""
        red, rank, pivots = self._rref_raw()
        n = self.ncols
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            vec = list(zero_vec(self.field, n))
            vec[fc] = self.field.one
            for r, pc in enumerate(pivots):
                vec[pc] = -red[r][fc]
            basis.append(vec)
        return Subspace.from_vectors(self.field, n, basis)

    def left_kernel(self) -> "Subspace":
        """Solutions of x @ self = 0 as a subspace of F^nrows."""
        return self.transpose().kernel()

    def solve_left(self, target: Sequence) -> tuple | None:
        """One solution x of x @ self = target, or None if inconsistent."""
        t = tuple(self.field.of(x) for x in target)
        if len(t) != self.ncols:
            raise DimensionMismatch("target length mismatch")
        # augmented column reduction of the transposed system
        aug = Matrix(
            self.field,
            [row + (t[r],) for r, row in enumerate(self.transpose().rows)],
            ncols=self.nrows + 1,
        )
        red, rank, pivots = aug._rref_raw()
        if self.nrows in pivots:
            return None
        sol = list(zero_vec(self.field, self.nrows))
        for r, c in enumerate(pivots):
            sol[c] = red[r][self.nrows]
        return tuple(sol)


def rref(m: Matrix) -> tuple[Matrix, int]:
    return m.rref()


def kernel(m: Matrix) -> "Subspace":
    return m.kernel()


# ---------------------------------------------------------------------------
# subspaces (canonical RREF bases)

class Subspace:
    """Subspace of F^ambient given by an RREF basis with no zero rows."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: Field, ambient: int, rows: tuple, pivots: tuple):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field.of(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector length {len(v)} != ambient {ambient}")
        if not vecs:
            return cls(field, ambient, (), ())
        red, rank, pivots = Matrix(field, vecs, ncols=ambient)._rref_raw()
        return cls(field, ambient, tuple(tuple(r) for r in red[:rank]), tuple(pivots))

    @classmethod
    def zero_space(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full_space(cls, field: Field, ambient: int) -> "Subspace":
        rows = tuple(unit_vec(field, ambient, i) for i in range(ambient))
        return cls(field, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.rows, ncols=self.ambient)

    def _check_compat(self, other: "Subspace") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} vs {other.ambient}")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format_scalar(x) for x in r) for r in self.rows)
        return f"Subspace(dim {self.dim} of {self.ambient}: [{body}])"

    def sort_key(self):
        return (self.dim, tuple(self.field.sort_key(x) for row in self.rows for x in row))

    def reduce(self, vec: Sequence) -> tuple:
        """Residual of vec after elimination against the basis."""
        v = tuple(self.field.of(x) for x in vec)
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        if not self.rows:
            return v
        if self.field.char:
            p = self.field.char
            raw = _kernel.reduce_fp(
                [x.v for x in v], [[x.v for x in r] for r in self.rows], list(self.pivots), p
            )
            return tuple(Fp(x, p) for x in raw)
        out = list(v)
        for row, c in zip(self.rows, self.pivots):
            f = out[c]
            if not f:
                continue
            for j in range(self.ambient):
                out[j] = out[j] - f * row[j]
        return tuple(out)

    def contains(self, vec: Sequence) -> bool:
        return is_zero_vec(self.reduce(vec))

    def contains_space(self, other: "Subspace") -> bool:
        self._check_compat(other)
        return all(self.contains(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_space(self)

    def coords_of(self, vec: Sequence) -> tuple | None:
        """Coordinates of vec in the RREF basis, or None if vec is outside."""
        v = tuple(self.field.of(x) for x in vec)
        if not self.contains(v):
            return None
        return tuple(v[c] for c in self.pivots)

    def lift(self, coords: Sequence) -> tuple:
        """Linear combination of the basis rows with the given coefficients."""
        if len(coords) != self.dim:
            raise DimensionMismatch(f"{len(coords)} coords for dim {self.dim}")
        out = list(zero_vec(self.field, self.ambient))
        for c, row in zip(coords, self.rows):
            c = self.field.of(c)
            if not c:
                continue
            for j, x in enumerate(row):
                if x:
                    out[j] = out[j] + c * x
        return tuple(out)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compat(other)
        return Subspace.from_vectors(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compat(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero_space(self.field, self.ambient)
        stacked = Matrix(self.field, list(self.rows) + list(other.rows), ncols=self.ambient)
        null = stacked.left_kernel()
        k = self.dim
        vecs = [self.lift(z[:k]) for z in null.rows]
        return Subspace.from_vectors(self.field, self.ambient, vecs)

    def complement_indices(self) -> tuple[int, ...]:
        """Unit-vector indices extending the basis, in increasing order."""
        return tuple(c for c in range(self.ambient) if c not in self.pivots)

    def vectors(self) -> Iterator[tuple]:
        """All vectors of the subspace (finite fields only)."""
        for coords in all_vectors(self.field, self.dim):
            yield self.lift(coords)


def sum_spaces(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def intersect_spaces(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def contains(u: Subspace, x: Sequence) -> bool:
    return u.contains(x)


def span_of_products(space_rows: Iterable[Sequence], mult) -> list[tuple]:
    """Helper: all pairwise products under a bilinear map (used by callers)."""
    rows = list(space_rows)
    return [mult(a, b) for a in rows for b in rows]


def preimage_under(matrix: Matrix, target: Subspace) -> Subspace:
    """{x : x @ matrix in target} as a subspace of F^nrows."""
    if matrix.ncols != target.ambient:
        raise AmbientMismatch("map target and subspace ambient differ")
    rows = [target.reduce(r) for r in matrix.rows]
    return Matrix(matrix.field, rows, ncols=matrix.ncols).left_kernel()


def closure_under_operators(
    field: Field, ambient: int, vecs: Iterable[Sequence], operators: Sequence[Matrix]
) -> Subspace:
    """Smallest subspace containing vecs and invariant under the row-vector operators."""
    S = Subspace.from_vectors(field, ambient, [tuple(field.of(x) for x in v) for v in vecs])
    for _ in range(ambient + 1):
        new = list(S.rows)
        for r in S.rows:
            for op in operators:
                new.append(op.apply(r))
        S2 = Subspace.from_vectors(field, ambient, new)
        if S2.dim == S.dim:
            return S2
        S = S2
    return S


def enumerate_invariant_subspaces(
    field: Field, ambient: int, operators: Sequence[Matrix], budget: int = 1 << 17
) -> list[Subspace]:
    """All subspaces invariant under the operators (finite fields only).

    Every invariant subspace is the join of the cyclic closures of its
    vectors, so the lattice is generated by the closures of the projective
    representatives plus pairwise joins.  Returned in canonical order.
    """
    if field.char == 0:
        raise FieldMismatch("invariant-subspace enumeration needs a finite field")
    count = (field.char ** ambient - 1) // (field.char - 1)
    if count > budget:
        raise ValueError(f"projective space too large ({count} > {budget})")
    found: dict = {}
    zero = Subspace.zero_space(field, ambient)
    found[zero.rows] = zero
    for v in projective_vectors(field, ambient):
        c = closure_under_operators(field, ambient, [v], operators)
        found.setdefault(c.rows, c)
    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for a in frontier:
            for b in current:
                s = a + b
                if s.rows not in found:
                    found[s.rows] = s
                    fresh.append(s)
        frontier = fresh
    return sorted(found.values(), key=lambda s: s.sort_key())
