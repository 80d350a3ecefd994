"""Finitely generated abelian groups by exact integer linear algebra.

Everything is computed over Z with Python's arbitrary-precision integers;
no floats, no fixed-width arithmetic anywhere.  A group is a presentation
(number of generators plus a relation matrix whose rows are relators), and
the single primitive underneath is Smith normal form with tracked
unimodular transforms: normal forms, invariant factors, kernels, images,
quotients and lattice membership all reduce to it.

Matrices are sequences of rows.  A matrix with zero rows or zero columns
carries no shape of its own, so every internal helper takes explicit
dimensions; the public classes recover shapes from their endpoints.
"""

from __future__ import annotations

from .errors import DomainError

Matrix = tuple  # tuple of row tuples; shape known from context
Vector = tuple


# ---------------------------------------------------------------------------
# plain matrix helpers (lists of lists internally, explicit shapes)

def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_vec(A, v, rows):
    return [sum(a * x for a, x in zip(row, v)) for row in A[:rows]]


def _mat_mul(A, B, m, k, n):
    # A is m*k, B is k*n
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    Oi[j] += a * Bt[j]
    return out


def _transpose(A, rows, cols):
    return [[A[i][j] for i in range(rows)] for j in range(cols)]


def _freeze(A):
    return tuple(tuple(row) for row in A)


def _columns(A, rows, cols):
    return [tuple(A[i][j] for i in range(rows)) for j in range(cols)]


def _from_columns(cols_list, rows):
    return [[col[i] for col in cols_list] for i in range(rows)]


def _hstack(A, B, rows):
    return [list(A[i]) + list(B[i]) for i in range(rows)]


def _xgcd(a, b):
    """Return (g, s, t) with g = gcd(a,b) > 0 and g = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# ---------------------------------------------------------------------------
# Smith normal form

def _snf_with_transforms(A, m, n):
    """Diagonalize A (m*n) as U*A*V = D.

    Returns (U, Uinv, D, V, Vinv) as lists of lists.  U, V are unimodular;
    D is diagonal with nonnegative entries, each dividing the next.  Row
    operations are mirrored on U and undone on Uinv (columnwise), column
    operations on V and Vinv (rowwise), so U*A*V == D and A == Uinv*D*Vinv
    hold exactly at every step.
    """
    D = [list(row) for row in A]
    U, Uinv = _identity(m), _identity(m)
    V, Vinv = _identity(n), _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    def add_row(i, j, c):
        # row i += c * row j
        Di, Dj = D[i], D[j]
        for t in range(n):
            Di[t] += c * Dj[t]
        Ui, Uj = U[i], U[j]
        for t in range(m):
            Ui[t] += c * Uj[t]
        for r in Uinv:
            r[j] -= c * r[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_col(i, j, c):
        # col i += c * col j
        for r in D:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]
        Vj, Vi = Vinv[j], Vinv[i]
        for t in range(n):
            Vj[t] -= c * Vi[t]

    s = 0
    while s < m and s < n:
        # pivot: nonzero entry of least magnitude in the trailing block
        best, pi, pj = None, -1, -1
        for i in range(s, m):
            row = D[i]
            for j in range(s, n):
                x = row[j]
                if x and (best is None or abs(x) < best):
                    best, pi, pj = abs(x), i, j
        if best is None:
            break
        if pi != s:
            swap_rows(s, pi)
        if pj != s:
            swap_cols(s, pj)
        while True:
            # clear row s and column s; any nonzero remainder becomes the
            # new, strictly smaller pivot, so this terminates
            while True:
                if D[s][s] < 0:
                    negate_row(s)
                d = D[s][s]
                dirty = False
                for i in range(s + 1, m):
                    if D[i][s]:
                        add_row(i, s, -(D[i][s] // d))
                        if D[i][s]:
                            swap_rows(s, i)
                            dirty = True
                            break
                if dirty:
                    continue
                for j in range(s + 1, n):
                    if D[s][j]:
                        add_col(j, s, -(D[s][j] // d))
                        if D[s][j]:
                            swap_cols(s, j)
                            dirty = True
                            break
                if dirty:
                    continue
                break
            # divisibility: the pivot must divide the whole trailing block
            d = D[s][s]
            offender = None
            for i in range(s + 1, m):
                row = D[i]
                for j in range(s + 1, n):
                    if row[j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(s, offender, 1)
        s += 1
    return U, Uinv, D, V, Vinv


def smith_normal_form(A, shape=None):
    """Return (U, D, V) with U*A*V = D, U and V unimodular.

    D is diagonal, entries nonnegative, each dividing the next.  `shape`
    is required when A has no rows (the column count is otherwise lost).
    """
    if shape is not None:
        m, n = shape
    else:
        m = len(A)
        n = len(A[0]) if m else 0
    for row in A:
        if len(row) != n:
            raise DomainError("smith_normal_form: ragged matrix")
    U, _, D, V, _ = _snf_with_transforms(A, m, n)
    return _freeze(U), _freeze(D), _freeze(V)


# ---------------------------------------------------------------------------
# derived lattice routines

def kernel_basis(A, rows, cols):
    """Basis (list of length-`cols` vectors) of {x in Z^cols : A x = 0}."""
    _, _, D, V, _ = _snf_with_transforms(A, rows, cols)
    rank = sum(1 for i in range(min(rows, cols)) if D[i][i])
    return [tuple(V[i][j] for i in range(cols)) for j in range(rank, cols)]


def column_lattice_basis(vectors, dim):
    """Canonical basis of the sublattice of Z^dim spanned by `vectors`.

    The output vectors are d_i * (column i of Uinv) for the nonzero Smith
    invariants d_i, so they are deterministic and in echelon-like order.
    """
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    S = _from_columns(vecs, dim)
    _, Uinv, D, _, _ = _snf_with_transforms(S, dim, len(vecs))
    out = []
    for i in range(min(dim, len(vecs))):
        d = D[i][i]
        if d:
            out.append(tuple(d * Uinv[t][i] for t in range(dim)))
    return out


class ColumnSolver:
    """Factor a fixed integer matrix once, then solve A y = b repeatedly."""

    def __init__(self, A, rows, cols):
        U, _, D, V, _ = _snf_with_transforms(A, rows, cols)
        self.rows = rows
        self.cols = cols
        self._U = U
        self._V = V
        self._diag = [D[i][i] for i in range(min(rows, cols))]

    def solve(self, b):
        """An integer solution of A y = b, or None if none exists."""
        if len(b) != self.rows:
            raise DomainError("ColumnSolver.solve: length mismatch")
        c = _mat_vec(self._U, b, self.rows)
        y = [0] * self.cols
        for i, d in enumerate(self._diag):
            if d:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        for i in range(len(self._diag), self.rows):
            if c[i]:
                return None
        return tuple(_mat_vec(self._V, y, self.cols))


def solve(A, b, rows, cols):
    """One-shot integer solve of A x = b; None when unsolvable."""
    return ColumnSolver(A, rows, cols).solve(b)


def preimage_basis(M, rows, cols, lattice_columns):
    """Basis of {x in Z^cols : M x lies in the span of lattice_columns}.

    Computed as the projection to the x-block of the kernel of the
    augmented matrix [M | L]; the projection of a spanning set spans the
    projected lattice, which column_lattice_basis then canonicalizes.
    """
    t = len(lattice_columns)
    if t:
        C = _hstack(M, _from_columns(lattice_columns, rows), rows)
    else:
        C = [list(row) for row in M]
    ker = kernel_basis(C, rows, cols + t)
    return column_lattice_basis([v[:cols] for v in ker], cols)


class IntLattice:
    """Incremental membership for a sublattice of Z^n.

    Rows are kept in echelon form (strictly increasing pivot columns,
    positive pivots); insertion uses extended-gcd combinations so the
    stored rows always generate exactly the vectors added so far.
    """

    def __init__(self, n, vectors=()):
        self.n = n
        self.rows = []
        for v in vectors:
            self.add(v)

    def _lead(self, v):
        for j in range(self.n):
            if v[j]:
                return j
        return None

    def add(self, vector):
        """Insert a vector; True iff the lattice actually grew."""
        if len(vector) != self.n:
            raise DomainError("IntLattice.add: wrong length")
        grew = False
        work = [list(vector)]
        while work:
            v = work.pop()
            i = 0
            while True:
                lead = self._lead(v)
                if lead is None:
                    break
                while i < len(self.rows) and self._lead(self.rows[i]) < lead:
                    i += 1
                if i == len(self.rows) or self._lead(self.rows[i]) > lead:
                    if v[lead] < 0:
                        v = [-x for x in v]
                    self.rows.insert(i, v)
                    grew = True
                    break
                row = self.rows[i]
                a, b = row[lead], v[lead]
                if b % a == 0:
                    q = b // a
                    v = [x - q * y for x, y in zip(v, row)]
                else:
                    g, s, t = _xgcd(a, b)
                    comb = [s * x + t * y for x, y in zip(row, v)]
                    displaced = [x - (a // g) * z for x, z in zip(row, comb)]
                    v = [y - (b // g) * z for y, z in zip(v, comb)]
                    self.rows[i] = comb
                    grew = True
                    if any(displaced):
                        work.append(displaced)
        return grew

    def contains(self, vector):
        if len(vector) != self.n:
            raise DomainError("IntLattice.contains: wrong length")
        v = list(vector)
        i = 0
        while True:
            lead = self._lead(v)
            if lead is None:
                return True
            while i < len(self.rows) and self._lead(self.rows[i]) < lead:
                i += 1
            if i == len(self.rows) or self._lead(self.rows[i]) > lead:
                return False
            row = self.rows[i]
            if v[lead] % row[lead]:
                return False
            q = v[lead] // row[lead]
            v = [x - q * y for x, y in zip(v, row)]


# ---------------------------------------------------------------------------
# finitely generated abelian groups

class FgAbGroup:
    """Abelian group presented by generators and integer relation rows.

    The Smith decomposition of the transposed relation matrix is computed
    eagerly: with U * R^T * V = D, an element x (a coordinate vector over
    the generators) lies in the relation lattice iff U x is componentwise
    divisible by the diagonal, which yields a unique normal form per
    element and the canonical invariant factors.
    """

    def __init__(self, ngens, relations=()):
        if ngens < 0:
            raise DomainError("FgAbGroup: ngens must be nonnegative")
        relations = _freeze(relations)
        for row in relations:
            if len(row) != ngens:
                raise DomainError("FgAbGroup: relation length != ngens")
        self.ngens = ngens
        self.relations = relations
        r = len(relations)
        Rt = _transpose(relations, r, ngens) if r else [[] for _ in range(ngens)]
        U, Uinv, D, _, _ = _snf_with_transforms(Rt, ngens, r)
        diag = [D[i][i] for i in range(min(ngens, r))]
        self._U = U
        self._Uinv = Uinv
        self._diag = diag
        self._rank = sum(1 for d in diag if d)
        self.free_rank = ngens - self._rank
        self.torsion = tuple(d for d in diag if d > 1)
        # columns d_i * Uinv[:,i] form a canonical basis of the relation lattice
        self.relation_basis = tuple(
            tuple(diag[i] * Uinv[t][i] for t in range(ngens))
            for i in range(len(diag)) if diag[i]
        )

    def __repr__(self):
        return "FgAbGroup(%d gens, %s)" % (self.ngens, factor_string(self.invariant_factors()))

    def __eq__(self, other):
        return (isinstance(other, FgAbGroup)
                and self.ngens == other.ngens
                and self.relations == other.relations)

    def __hash__(self):
        return hash((self.ngens, self.relations))

    def invariant_factors(self):
        """(free_rank, torsion) with torsion ascending, each dividing the next."""
        return (self.free_rank, self.torsion)

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def normal_form(self, coords):
        """Canonical representative of coords modulo the relation lattice."""
        if len(coords) != self.ngens:
            raise DomainError("normal_form: wrong coordinate length")
        z = _mat_vec(self._U, coords, self.ngens)
        diag = self._diag
        for i, d in enumerate(diag):
            if d:
                z[i] %= d
        return tuple(z)

    def in_relation_lattice(self, coords):
        return not any(self.normal_form(coords))

    def element(self, coords):
        return AbElement(self, tuple(coords))

    def zero(self):
        return AbElement(self, (0,) * self.ngens)

    def elements(self):
        """All elements of a finite group, as AbElements (raises if infinite)."""
        if self.free_rank:
            raise DomainError("elements: group is infinite")
        ranges = [range(d) for d in self._diag]
        Uinv = self._Uinv
        n = self.ngens

        def rec(i, z):
            if i == len(ranges):
                yield self.element(tuple(_mat_vec(Uinv, z, n)))
                return
            for v in ranges[i]:
                z[i] = v
                yield from rec(i + 1, z)
            z[i] = 0

        yield from rec(0, [0] * len(ranges))


def free_group(rank):
    return FgAbGroup(rank, ())


def cyclic_group(n):
    """Z/n as a one-generator presentation (n = 0 gives Z)."""
    if n < 0:
        raise DomainError("cyclic_group: modulus must be nonnegative")
    return FgAbGroup(1, ((n,),)) if n else FgAbGroup(1, ())


def factor_string(invariants):
    """Human-readable form of (free_rank, torsion), e.g. 'Z^2 x Z/4'."""
    free, torsion = invariants
    parts = []
    if free == 1:
        parts.append("Z")
    elif free > 1:
        parts.append("Z^%d" % free)
    parts.extend("Z/%d" % d for d in torsion)
    return " x ".join(parts) if parts else "0"


class AbElement:
    """Coordinate vector in an FgAbGroup, compared by normal form."""

    def __init__(self, group, coords):
        if len(coords) != group.ngens:
            raise DomainError("AbElement: wrong coordinate length")
        self.group = group
        self.coords = tuple(coords)
        self._nf = None

    def normal_form(self):
        if self._nf is None:
            self._nf = self.group.normal_form(self.coords)
        return self._nf

    def is_zero(self):
        return not any(self.normal_form())

    def __add__(self, other):
        self._check(other)
        return AbElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AbElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AbElement(self.group, tuple(-a for a in self.coords))

    def _check(self, other):
        if self.group != other.group:
            raise DomainError("AbElement arithmetic: mismatched groups")

    def __eq__(self, other):
        return (isinstance(other, AbElement)
                and self.group == other.group
                and self.normal_form() == other.normal_form())

    def __hash__(self):
        return hash((self.group, self.normal_form()))

    def __repr__(self):
        return "AbElement%r" % (self.coords,)


def equal_elements(x, y):
    """Whether two elements of the same group agree modulo relations."""
    if x.group != y.group:
        raise DomainError("equal_elements: elements of different groups")
    return x == y


class AbHom:
    """Homomorphism of presented groups, given by a matrix on generators.

    The matrix has target.ngens rows and source.ngens columns and acts on
    coordinate columns.  Construction checks well-definedness: each source
    relation must map into the target's relation lattice.
    """

    def __init__(self, source, target, matrix, _checked=False):
        matrix = _freeze(matrix)
        if len(matrix) != target.ngens or any(len(r) != source.ngens for r in matrix):
            raise DomainError("AbHom: matrix shape does not match endpoints")
        self.source = source
        self.target = target
        self.matrix = matrix
        if not _checked:
            for rel in source.relations:
                img = _mat_vec(matrix, rel, target.ngens)
                if not target.in_relation_lattice(img):
                    raise DomainError("AbHom: matrix does not respect source relations")

    def apply(self, x):
        if isinstance(x, AbElement):
            if x.group != self.source:
                raise DomainError("AbHom.apply: element not in source")
            coords = x.coords
        else:
            coords = x
        return AbElement(self.target, tuple(_mat_vec(self.matrix, coords, self.target.ngens)))

    def apply_coords(self, coords):
        return tuple(_mat_vec(self.matrix, coords, self.target.ngens))

    def is_zero(self):
        return all(self.target.in_relation_lattice(col)
                   for col in _columns(self.matrix, self.target.ngens, self.source.ngens))

    def __add__(self, other):
        self._check_parallel(other)
        M = tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix))
        return AbHom(self.source, self.target, M, _checked=True)

    def __sub__(self, other):
        self._check_parallel(other)
        M = tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.matrix, other.matrix))
        return AbHom(self.source, self.target, M, _checked=True)

    def _check_parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise DomainError("AbHom arithmetic: mismatched endpoints")

    def __eq__(self, other):
        if not isinstance(other, AbHom):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return (self - other).is_zero()

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return "AbHom(%d -> %d gens)" % (self.source.ngens, self.target.ngens)


def identity_hom(A):
    return AbHom(A, A, _freeze(_identity(A.ngens)), _checked=True)


def zero_hom(A, B):
    return AbHom(A, B, tuple((0,) * A.ngens for _ in range(B.ngens)), _checked=True)


def compose(f, g):
    """f after g (apply g first); endpoints must chain."""
    if g.target != f.source:
        raise DomainError("compose: endpoints do not chain")
    M = _mat_mul(f.matrix, g.matrix, f.target.ngens, f.source.ngens, g.source.ngens)
    return AbHom(g.source, f.target, _freeze(M), _checked=True)


def is_zero_hom(f):
    return f.is_zero()


class SubgroupInclusion:
    """A subgroup presented in its own right, with its inclusion map.

    Membership and coordinate queries factor a matrix once per instance
    and are cached, so repeated closure checks stay cheap.
    """

    def __init__(self, group, inclusion):
        if inclusion.source != group:
            raise DomainError("SubgroupInclusion: inclusion source mismatch")
        self.group = group
        self.inclusion = inclusion
        self._lattice = None
        self._solver = None

    @property
    def ambient(self):
        return self.inclusion.target

    def _membership(self):
        if self._lattice is None:
            amb = self.ambient
            lat = IntLattice(amb.ngens)
            for col in _columns(self.inclusion.matrix, amb.ngens, self.group.ngens):
                lat.add(col)
            for col in amb.relation_basis:
                lat.add(col)
            self._lattice = lat
        return self._lattice

    def contains_vector(self, coords):
        return self._membership().contains(coords)

    def coordinates(self, coords):
        """Express an ambient vector in subgroup generators, or None.

        Solves [incl | ambient relations] * w = v and keeps the generator
        block, so the answer is exact modulo the ambient relations.
        """
        amb = self.ambient
        if self._solver is None:
            aug = _hstack(self.inclusion.matrix,
                          _from_columns(list(amb.relation_basis), amb.ngens),
                          amb.ngens)
            self._solver = ColumnSolver(aug, amb.ngens,
                                        self.group.ngens + len(amb.relation_basis))
        w = self._solver.solve(list(coords))
        if w is None:
            return None
        return w[:self.group.ngens]

    def contains_subgroup(self, other):
        amb = self.ambient
        cols = _columns(other.inclusion.matrix, amb.ngens, other.group.ngens)
        return all(self.contains_vector(c) for c in cols)

    def same_subgroup(self, other):
        return self.contains_subgroup(other) and other.contains_subgroup(self)

    def is_zero(self):
        return all(self.ambient.in_relation_lattice(col)
                   for col in _columns(self.inclusion.matrix,
                                       self.ambient.ngens, self.group.ngens))

    def is_full(self):
        n = self.ambient.ngens
        return all(self.contains_vector(tuple(1 if t == j else 0 for t in range(n)))
                   for j in range(n))

    def invariant_factors(self):
        return self.group.invariant_factors()


def subgroup_generated(A, elems):
    """Smallest subgroup of A containing the given elements.

    Accepts AbElements of A or raw coordinate vectors.  The subgroup is
    presented on the given generators; its relations are all integer
    combinations that land in A's relation lattice.
    """
    vecs = []
    for e in elems:
        if isinstance(e, AbElement):
            if e.group != A:
                raise DomainError("subgroup_generated: element of a different group")
            vecs.append(e.coords)
        else:
            if len(e) != A.ngens:
                raise DomainError("subgroup_generated: wrong coordinate length")
            vecs.append(tuple(e))
    s = len(vecs)
    if not s:
        zero = FgAbGroup(0, ())
        incl = AbHom(zero, A, tuple(() for _ in range(A.ngens)), _checked=True)
        return SubgroupInclusion(zero, incl)
    V = _freeze(_from_columns(vecs, A.ngens))
    rel_cols = preimage_basis(V, A.ngens, s, list(A.relation_basis))
    S = FgAbGroup(s, tuple(rel_cols))
    incl = AbHom(S, A, V, _checked=True)
    return SubgroupInclusion(S, incl)


def full_subgroup(A):
    return SubgroupInclusion(A, identity_hom(A))


def zero_subgroup(A):
    return subgroup_generated(A, [])


def kernel(f):
    """Kernel of an AbHom as a SubgroupInclusion into the source."""
    basis = preimage_basis(f.matrix, f.target.ngens, f.source.ngens,
                           list(f.target.relation_basis))
    return subgroup_generated(f.source, basis)


def image(f):
    """Image of an AbHom as a SubgroupInclusion into the target."""
    cols = _columns(f.matrix, f.target.ngens, f.source.ngens)
    return subgroup_generated(f.target, cols)


def quotient(A, S):
    """Quotient of A by a subgroup, as (group, projection).

    The quotient keeps A's generators and adds one relator per subgroup
    generator, so the projection matrix is the identity.
    """
    if S.ambient != A:
        raise DomainError("quotient: subgroup of a different group")
    extra = _columns(S.inclusion.matrix, A.ngens, S.group.ngens)
    Q = FgAbGroup(A.ngens, A.relations + tuple(extra))
    proj = AbHom(A, Q, _freeze(_identity(A.ngens)), _checked=True)
    return Q, proj


def direct_sum(groups):
    """Block sum of presentations, with injection coordinate offsets."""
    ngens = sum(g.ngens for g in groups)
    rows = []
    offset = 0
    for g in groups:
        for rel in g.relations:
            rows.append((0,) * offset + tuple(rel) + (0,) * (ngens - offset - g.ngens))
        offset += g.ngens
    return FgAbGroup(ngens, tuple(rows))
