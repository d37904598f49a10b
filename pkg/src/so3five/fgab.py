"""Exact arithmetic for finitely generated abelian groups.

This module is the integer backbone of the package: Smith normal form
with unimodular transforms, cokernels of integer matrices, tensor and
Tor in invariant-factor form, and element arithmetic with canonical
reduction.  Everything runs on arbitrary-precision Python integers;
there is no floating point anywhere.

Groups are kept in invariant-factor form, i.e. a free rank together
with torsion coefficients d1 | d2 | ... | dk, each di >= 2.  With that
normalisation two groups are isomorphic iff they are equal as values,
so structural equality is the only equality we ever need.

>>> G = FgAbGroup.from_cyclic_orders(0, [2, 3])
>>> str(G)
'Z/6'
>>> str(G.tensor(FgAbGroup.from_cyclic_orders(0, [4])))
'Z/2'
>>> cokernel(IntegerMatrix.from_rows([[2, 4], [6, 8]])).torsion
(2, 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import gcd


__all__ = [
    "IntegerMatrix",
    "SnfDecomposition",
    "FgAbGroup",
    "GroupElement",
    "smith_normal_form",
    "cokernel",
    "cokernel_with_projection",
    "mod_p_dimension",
    "solve_divisibility",
    "has_element_of_order",
    "direct_sum_elements",
    "tensor_reduction_moduli",
    "tensor_reduction",
    "vector_content",
]


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerMatrix:
    """A dense rectangular matrix of Python integers.

    The class is immutable; all operations return new matrices.  It is
    deliberately small: just what integer homological algebra needs.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("entry grid does not match the row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("entry grid is not rectangular")

    @staticmethod
    def from_rows(rows: object) -> "IntegerMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        return IntegerMatrix(nrows, ncols, data)

    @staticmethod
    def identity(n: int) -> "IntegerMatrix":
        return IntegerMatrix(
            n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "IntegerMatrix":
        return IntegerMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def diagonal(values: object) -> "IntegerMatrix":
        vals = tuple(int(v) for v in values)
        n = len(vals)
        return IntegerMatrix(
            n, n, tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n))
        )

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def multiply(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not compose")
        out = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return IntegerMatrix(self.rows, other.cols, out)

    def apply(self, vector: object) -> tuple[int, ...]:
        """Matrix times column vector, returned as a tuple."""
        vec = tuple(int(x) for x in vector)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match the column count")
        return tuple(sum(row[k] * vec[k] for k in range(self.cols)) for row in self.entries)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def determinant(self) -> int:
        """Exact determinant by the fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def vector_content(vector: object) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in vector:
        g = gcd(g, int(x))
    return g


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnfDecomposition:
    """U * A * V = D with U, V unimodular and D in Smith normal form.

    D is diagonal with nonnegative entries d1 | d2 | ... along the
    diagonal (trailing zeros allowed).
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D.entries[i][i] for i in range(n))


def smith_normal_form(A: IntegerMatrix) -> SnfDecomposition:
    """Smith normal form by elementary row/column reduction.

    The least-absolute-value pivot is re-selected on every clearing
    pass and quotients are balanced (nearest integer), which keeps the
    intermediate entries of D, U and V small.  Row operations
    accumulate into U, column operations into V, so U*A*V = D holds
    exactly on return.
    """
    m, n = A.rows, A.cols
    d = [list(row) for row in A.entries]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_sub(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        drow, srow = d[dst], d[src]
        for jj in range(n):
            drow[jj] -= q * srow[jj]
        drow2, srow2 = u[dst], u[src]
        for jj in range(m):
            drow2[jj] -= q * srow2[jj]

    def col_sub(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def negate_row(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(m, n)):
        while True:
            # Pivot with least nonzero absolute value, re-selected on
            # every pass; balanced remainders shrink it strictly.
            best = None
            pi = pj = -1
            for i in range(t, m):
                for j in range(t, n):
                    e = d[i][j]
                    if e != 0 and (best is None or abs(e) < best):
                        best = abs(e)
                        pi, pj = i, j
            if best is None:
                break
            if pi != t:
                swap_rows(pi, t)
            if pj != t:
                swap_cols(pj, t)
            if d[t][t] < 0:
                negate_row(t)
            pivot = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                e = d[i][t]
                if e:
                    row_sub(i, t, (2 * e + pivot) // (2 * pivot))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, n):
                e = d[t][j]
                if e:
                    col_sub(j, t, (2 * e + pivot) // (2 * pivot))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            # Divisibility sweep: the pivot must divide every remaining
            # entry so the diagonal forms a chain.
            offender = -1
            for i in range(t + 1, m):
                if any(x % pivot for x in d[i][t + 1 :]):
                    offender = i
                    break
            if offender < 0:
                break
            row_sub(t, offender, -1)
        if d[t][t] == 0:
            break

    return SnfDecomposition(
        IntegerMatrix.from_rows(u) if m else IntegerMatrix.zero(0, 0),
        IntegerMatrix.from_rows(d) if m else IntegerMatrix.zero(0, n),
        IntegerMatrix.from_rows(v) if n else IntegerMatrix.zero(0, 0),
    )


# ---------------------------------------------------------------------------
# groups in invariant-factor form
# ---------------------------------------------------------------------------


def _factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (inputs here are small)."""
    if n < 1:
        raise ValueError("factorisation needs a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and _factorize(n) == {n: 1}


@dataclass(frozen=True)
class FgAbGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``free_rank`` copies of Z plus cyclic factors Z/d1 + ... + Z/dk with
    d1 | d2 | ... | dk and every di >= 2.  The constructor rejects
    anything not already canonical; use :meth:`from_cyclic_orders` to
    normalise an arbitrary list of cyclic orders.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    # -- construction -------------------------------------------------

    @classmethod
    def from_cyclic_orders(cls, free_rank: int = 0, orders: object = ()) -> "FgAbGroup":
        """Canonicalise a direct sum of cyclic groups.

        Order 0 means an infinite cyclic factor, order 1 a trivial one.
        Any other list of orders is smoothed into a divisibility chain
        with repeated gcd/lcm exchanges (which preserve the isomorphism
        type of the direct sum).

        >>> FgAbGroup.from_cyclic_orders(0, [6, 4])
        FgAbGroup(free_rank=0, torsion=(2, 12))
        """
        ds = [abs(int(d)) for d in orders]
        free = int(free_rank) + ds.count(0)
        ds = [d for d in ds if d >= 2]
        changed = True
        while changed:
            changed = False
            for i in range(len(ds)):
                for j in range(i + 1, len(ds)):
                    if ds[j] % ds[i]:
                        g = gcd(ds[i], ds[j])
                        ds[i], ds[j] = g, ds[i] * ds[j] // g
                        changed = True
        ds = sorted(d for d in ds if d >= 2)
        return cls(free, tuple(ds))

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    # -- structure ----------------------------------------------------

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def torsion_subgroup(self) -> "FgAbGroup":
        return FgAbGroup(0, self.torsion)

    def order(self) -> int | None:
        """Number of elements, or None when the group is infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def exponent(self) -> int | None:
        """Least n >= 1 with n*x = 0 for all x; None when infinite rank."""
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def direct_sum(self, *others: "FgAbGroup") -> "FgAbGroup":
        free = self.free_rank + sum(g.free_rank for g in others)
        orders = list(self.torsion)
        for g in others:
            orders.extend(g.torsion)
        return FgAbGroup.from_cyclic_orders(free, orders)

    def tensor(self, other: "FgAbGroup") -> "FgAbGroup":
        """Tensor product over Z.

        Z (x) A = A and Z/m (x) Z/n = Z/gcd(m, n), extended bilinearly.
        """
        orders: list[int] = []
        orders.extend([0] * (self.free_rank * other.free_rank))
        orders.extend(list(other.torsion) * self.free_rank)
        orders.extend(list(self.torsion) * other.free_rank)
        for a in self.torsion:
            for b in other.torsion:
                orders.append(gcd(a, b))
        return FgAbGroup.from_cyclic_orders(0, orders)

    def tor(self, other: "FgAbGroup") -> "FgAbGroup":
        """Tor_1 over Z: free factors drop out, Tor(Z/m, Z/n) = Z/gcd."""
        orders = [gcd(a, b) for a in self.torsion for b in other.torsion]
        return FgAbGroup.from_cyclic_orders(0, orders)

    # -- elements -----------------------------------------------------

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.free_rank, (0,) * len(self.torsion))

    def element(self, free: object = (), torsion: object = ()) -> "GroupElement":
        return GroupElement(self, tuple(int(c) for c in free), tuple(int(c) for c in torsion))

    def elements(self):
        """Iterate over all elements (finite groups only)."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        for coords in _cartesian(*(range(d) for d in self.torsion)):
            yield GroupElement(self, (), coords)

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    """An element of an FgAbGroup, stored in reduced coordinates.

    Free coordinates are plain integers, the i-th torsion coordinate is
    reduced modulo the i-th torsion coefficient on construction, so
    equality of elements is equality of tuples.
    """

    group: FgAbGroup
    free: tuple[int, ...] = ()
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.free) != self.group.free_rank:
            raise ValueError("free coordinate count does not match the group")
        if len(self.torsion) != len(self.group.torsion):
            raise ValueError("torsion coordinate count does not match the group")
        object.__setattr__(self, "free", tuple(int(c) for c in self.free))
        object.__setattr__(
            self,
            "torsion",
            tuple(int(c) % d for c, d in zip(self.torsion, self.group.torsion)),
        )

    def _check_same_group(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise ValueError("elements live in different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_group(other)
        return GroupElement(
            self.group,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> "GroupElement":
        return self.scale(-1)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scale(self, k: int) -> "GroupElement":
        k = int(k)
        return GroupElement(
            self.group,
            tuple(k * c for c in self.free),
            tuple(k * c for c in self.torsion),
        )

    def __rmul__(self, k: int) -> "GroupElement":
        return self.scale(k)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        bits = [str(c) for c in self.free]
        bits.extend(f"{c} mod {d}" for c, d in zip(self.torsion, self.group.torsion))
        return "(" + ", ".join(bits) + ")"


# ---------------------------------------------------------------------------
# cokernels
# ---------------------------------------------------------------------------


def cokernel_with_projection(A: IntegerMatrix):
    """Cokernel of A : Z^cols -> Z^rows together with the quotient map.

    Returns ``(G, project)`` where G is Z^rows / column-span(A) in
    canonical form and ``project`` sends a coordinate vector in Z^rows
    to its class in G.  The identification comes from the Smith normal
    form: if U*A*V = D then x + im(A) corresponds to U*x + im(D).
    """
    snf = smith_normal_form(A)
    diag = list(snf.diagonal) + [0] * (A.rows - min(A.rows, A.cols))
    free_positions = [i for i, d in enumerate(diag) if d == 0]
    torsion_positions = [i for i, d in enumerate(diag) if d >= 2]
    group = FgAbGroup(len(free_positions), tuple(diag[i] for i in torsion_positions))
    U = snf.U

    def project(coords: object) -> GroupElement:
        y = U.apply(coords)
        return GroupElement(
            group,
            tuple(y[i] for i in free_positions),
            tuple(y[i] for i in torsion_positions),
        )

    return group, project


def cokernel(A: IntegerMatrix) -> FgAbGroup:
    """Z^rows modulo the column span of A, in canonical form."""
    group, _ = cokernel_with_projection(A)
    return group


# ---------------------------------------------------------------------------
# divisibility, orders, mod-p dimensions
# ---------------------------------------------------------------------------


def mod_p_dimension(group: FgAbGroup, p: int) -> int:
    """dim over Z/p of G (x) Z/p, i.e. free rank plus the count of
    torsion coefficients divisible by p.  p must be prime."""
    if not _is_prime(p):
        raise ValueError("mod-p dimension needs a prime p")
    return group.free_rank + sum(1 for d in group.torsion if d % p == 0)


def solve_divisibility(x: GroupElement, n: int) -> GroupElement | None:
    """Solve n*y = x in the ambient group; None when no solution exists.

    Coordinatewise: a free coordinate c needs n | c; a coordinate c in
    Z/d is solvable iff gcd(n, d) | c.

    >>> G = FgAbGroup(0, (3,))
    >>> solve_divisibility(G.element(torsion=[1]), 5).torsion
    (2,)
    """
    if n <= 0:
        raise ValueError("divisor must be a positive integer")
    free: list[int] = []
    for c in x.free:
        if c % n:
            return None
        free.append(c // n)
    torsion: list[int] = []
    for c, d in zip(x.torsion, x.group.torsion):
        g = gcd(n, d)
        if c % g:
            return None
        dd = d // g
        y = ((c // g) * pow(n // g, -1, dd)) % dd if dd > 1 else 0
        torsion.append(y)
    return GroupElement(x.group, tuple(free), tuple(torsion))


def has_element_of_order(group: FgAbGroup, n: int) -> bool:
    """Whether some element has exact finite order n.

    An element of exact order n exists iff n divides the exponent of
    the torsion subgroup (take the corresponding multiple of a
    generator of the largest cyclic factor).
    """
    if n <= 0:
        raise ValueError("order must be a positive integer")
    if n == 1:
        return True
    if not group.torsion:
        return False
    return group.torsion[-1] % n == 0


# ---------------------------------------------------------------------------
# coefficient reduction G -> G (x) Z/m
# ---------------------------------------------------------------------------


def tensor_reduction_moduli(group: FgAbGroup, m: int) -> tuple[int, ...]:
    """Cyclic moduli of G (x) Z/m, one per coordinate of G.

    A free coordinate reduces into Z/m, a Z/d coordinate into
    Z/gcd(d, m).  Positions are kept aligned with the coordinates of G
    (modulus-1 positions are identically zero)."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    return (m,) * group.free_rank + tuple(gcd(d, m) for d in group.torsion)


def tensor_reduction(x: GroupElement, m: int) -> tuple[int, ...]:
    """Image of x under G -> G (x) Z/m in the matched coordinates."""
    moduli = tensor_reduction_moduli(x.group, m)
    coords = x.free + x.torsion
    return tuple(c % mod for c, mod in zip(coords, moduli))


# ---------------------------------------------------------------------------
# canonical merge of elements of a direct sum
# ---------------------------------------------------------------------------


def _crt(residues: list[tuple[int, int]]) -> int:
    """x mod prod(m) with x = r (mod m) for each pair; moduli coprime."""
    x, mod = 0, 1
    for r, m in residues:
        if m == 1:
            continue
        k = ((r - x) * pow(mod % m, -1, m)) % m
        x += mod * k
        mod *= m
    return x % mod if mod > 1 else 0


def direct_sum_elements(parts: object) -> GroupElement:
    """Canonical element of the direct sum of the parts' groups.

    The merged group is the canonical invariant-factor form of the
    direct sum.  Coordinates are fixed by splitting every torsion
    coordinate into its prime-power components (a canonical operation),
    regrouping components by prime with exponents descending, and
    recombining per invariant factor with the Chinese remainder
    theorem.  Components with equal prime power are ordered by value,
    and free coordinates are sorted; both choices are automorphisms of
    the sum, so the result is a well-defined representative that makes
    the merge commutative and associative.
    """
    parts = list(parts)
    free_rank = sum(p.group.free_rank for p in parts)
    free = sorted(c for p in parts for c in p.free)

    # prime-power components (p, e, value mod p**e) of all torsion coords
    components: dict[int, list[tuple[int, int]]] = {}
    for part in parts:
        for c, d in zip(part.torsion, part.group.torsion):
            for p, e in _factorize(d).items():
                q = p**e
                components.setdefault(p, []).append((e, c % q))

    # exponents descending; equal prime powers ordered by value
    for p in components:
        components[p].sort(key=lambda ev: (-ev[0], ev[1]))

    depth = max((len(v) for v in components.values()), default=0)
    factors: list[tuple[int, int]] = []  # (order, coordinate), largest first
    for slot in range(depth):
        residues = []
        order = 1
        for p, comps in sorted(components.items()):
            if slot < len(comps):
                e, val = comps[slot]
                order *= p**e
                residues.append((val, p**e))
        factors.append((order, _crt(residues)))

    factors.reverse()  # ascending divisibility chain
    group = FgAbGroup(free_rank, tuple(order for order, _ in factors))
    return GroupElement(group, tuple(free), tuple(val for _, val in factors))
