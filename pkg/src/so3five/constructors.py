"""Geometric constructors for 5-manifold invariant profiles.

Recipes covered: a small catalog of standard spaces, connected sums,
products of a closed oriented 3-manifold with a closed oriented
surface, degree-d hypersurfaces in complex projective 3-space (as
4-manifold bases), and circle bundles over simply connected closed
oriented 4-manifolds via the Gysin sequence.  An exhaustive bounded
search for Euler classes with prescribed orthogonality and torsion
completes the circle-bundle pipeline.

Every constructor returns a profile that passes topology.validate();
internal cross-checks (signature theorem, content invariance under the
unimodular intersection form, the dual cokernel computation of the
torsion) are asserted on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import gcd

from .fgab import (
    FgAbGroup,
    GroupElement,
    IntegerMatrix,
    cokernel,
    direct_sum_elements,
    vector_content,
)
from .topology import ManifoldProfile, Mod2Fragment, require_valid


__all__ = [
    "FourManifoldProfile",
    "CircleBundleSpec",
    "catalog",
    "catalog_names",
    "connected_sum",
    "product_3x2",
    "hypersurface",
    "hyperplane_class",
    "circle_bundle",
    "find_euler_class",
]


# ---------------------------------------------------------------------------
# 4-manifold bases
# ---------------------------------------------------------------------------


def _symmetric_pivots(q: IntegerMatrix) -> list[Fraction]:
    """Congruence-diagonalize a symmetric matrix, returning the pivots.

    Fractions keep every step exact.  Simultaneous row/column swaps,
    symmetric additions and the elimination steps all preserve the
    determinant, so the pivot product equals det(q); the pivot signs
    give the signature.  Zero rows yield zero pivots.  Updates touch
    only the support of the pivot row, so block forms stay cheap.
    """
    if not q.is_symmetric():
        raise ValueError("signature needs a symmetric matrix")
    n = q.rows
    a = [[Fraction(x) for x in row] for row in q.entries]
    pivots: list[Fraction] = []
    for t in range(n):
        if a[t][t] == 0:
            if all(a[t][j] == 0 for j in range(t, n)):
                pivots.append(Fraction(0))
                continue
            k = next((i for i in range(t + 1, n) if a[i][i] != 0), None)
            if k is not None:
                a[t], a[k] = a[k], a[t]
                for row in a:
                    row[t], row[k] = row[k], row[t]
            else:
                # every remaining diagonal entry vanishes; fold a nonzero
                # off-diagonal entry onto the diagonal (giving 2*a[t][j])
                j = next(j for j in range(t + 1, n) if a[t][j] != 0)
                for col in range(n):
                    a[t][col] += a[j][col]
                for row in a:
                    row[t] += row[j]
        pivot = a[t][t]
        pivots.append(pivot)
        support = [j for j in range(t + 1, n) if a[t][j] != 0]
        if not support:
            continue
        row_t = a[t]
        for i in range(t + 1, n):
            factor = a[i][t]
            if factor == 0:
                continue
            ratio = factor / pivot
            row_i = a[i]
            for j in support:
                row_i[j] -= ratio * row_t[j]
            row_i[t] = Fraction(0)
    return pivots


def _signature_of_symmetric(q: IntegerMatrix) -> int:
    """Signature of a symmetric integer matrix, exactly."""
    sig = 0
    for pivot in _symmetric_pivots(q):
        if pivot > 0:
            sig += 1
        elif pivot < 0:
            sig -= 1
    return sig


@dataclass(frozen=True)
class FourManifoldProfile:
    """Invariants of a simply connected closed oriented 4-manifold.

    Q is the intersection form on H^2 (symmetric, unimodular) and
    w2_vector the mod-2 characteristic vector of Q, which represents
    the second Stiefel-Whitney class; it vanishes exactly for spin.
    """

    b2: int
    Q: IntegerMatrix
    w2_vector: tuple[int, ...]
    euler_char: int
    p1_eval: int
    signature: int

    def __post_init__(self) -> None:
        if self.b2 < 0:
            raise ValueError("b2 must be nonnegative")
        if self.Q.rows != self.b2 or self.Q.cols != self.b2:
            raise ValueError("intersection form must be b2 x b2")
        if not self.Q.is_symmetric():
            raise ValueError("intersection form must be symmetric")
        pivots = _symmetric_pivots(self.Q)
        determinant = Fraction(1)
        signature = 0
        for pivot in pivots:
            determinant *= pivot
            signature += 1 if pivot > 0 else -1 if pivot < 0 else 0
        if abs(determinant) != 1:
            raise ValueError("intersection form must be unimodular")
        if self.signature != signature:
            raise ValueError("signature does not match the intersection form")
        if self.p1_eval != 3 * self.signature:
            raise ValueError("p1 evaluation must equal 3 * signature")
        if self.euler_char != self.b2 + 2:
            raise ValueError("Euler characteristic must be b2 + 2")
        object.__setattr__(self, "w2_vector", tuple(int(b) for b in self.w2_vector))
        if len(self.w2_vector) != self.b2 or any(
            b not in (0, 1) for b in self.w2_vector
        ):
            raise ValueError("w2 vector must be a 0/1 vector of length b2")
        qw = self.Q.apply(self.w2_vector)
        for i in range(self.b2):
            if (qw[i] - self.Q.entries[i][i]) % 2:
                raise ValueError("w2 vector must be characteristic for Q")

    @property
    def spin(self) -> bool:
        return not any(self.w2_vector)


_E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)

_HYPERBOLIC = ((0, 1), (1, 0))


def _block_diagonal(blocks: list[tuple[tuple[int, ...], ...]]) -> IntegerMatrix:
    size = sum(len(b) for b in blocks)
    rows = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, x in enumerate(row):
                rows[offset + i][offset + j] = x
        offset += len(block)
    return IntegerMatrix.from_rows(rows) if size else IntegerMatrix.zero(0, 0)


# Coordinates of the restricted hyperplane class in the explicit bases
# below; pinned only for the degrees whose basis is pinned.
_HYPERPLANE = {1: (1,), 3: (3, -1, -1, -1, -1, -1, -1)}


def hyperplane_class(d: int) -> tuple[int, ...] | None:
    """Coordinates of the hyperplane-class restriction, where the basis
    of hypersurface(d) is explicit (degrees 1 and 3); None otherwise."""
    return _HYPERPLANE.get(d)


def hypersurface(d: int) -> FourManifoldProfile:
    """Degree-d hypersurface in complex projective 3-space.

    b2 = (6 - 4d + d^2) d - 2, Euler characteristic b2 + 2, first
    Pontryagin number (4 - d^2) d, signature a third of that (always an
    integer: d(2-d)(2+d) contains three consecutive factors), spin iff
    d is even.  The intersection form is realized explicitly: odd d
    gives the odd indefinite diagonal form, even d a direct sum of
    hyperbolic planes and negative E8 blocks.  For d = 3 the basis is
    the standard one of the projective plane with six reversed blowups,
    in which the hyperplane class restricts to (3, -1, ..., -1).
    """
    if d < 1:
        raise ValueError("hypersurface degree must be a positive integer")
    b2 = (6 - 4 * d + d * d) * d - 2
    p1_eval = (4 - d * d) * d
    assert p1_eval % 3 == 0
    signature = p1_eval // 3
    if d % 2:
        pos = (b2 + signature) // 2
        neg = b2 - pos
        assert pos >= 0 and neg >= 0 and pos - neg == signature
        q = IntegerMatrix.diagonal([1] * pos + [-1] * neg)
        w2 = (1,) * b2
    else:
        e8_count, rem = divmod(-signature, 8)
        assert rem == 0 and e8_count >= 0
        hyp_count, rem = divmod(b2 - 8 * e8_count, 2)
        assert rem == 0 and hyp_count >= 1
        neg_e8 = tuple(tuple(-x for x in row) for row in _E8)
        q = _block_diagonal([_HYPERBOLIC] * hyp_count + [neg_e8] * e8_count)
        w2 = (0,) * b2
    return FourManifoldProfile(
        b2=b2,
        Q=q,
        w2_vector=w2,
        euler_char=b2 + 2,
        p1_eval=p1_eval,
        signature=signature,
    )


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


_Z = FgAbGroup(1, ())
_O = FgAbGroup.trivial()
_Z2 = FgAbGroup(0, (2,))


def _trivial_degree4_fragment(h2_dim: int, w2_class: tuple[int, ...]) -> Mod2Fragment:
    # all catalog spaces have H^4(M;Z) = 0, so degree-4 values are empty
    empty: tuple[int, ...] = ()
    return Mod2Fragment(
        h2_dim=h2_dim,
        cup22=tuple(tuple(empty for _ in range(h2_dim)) for _ in range(h2_dim)),
        psquare=tuple(empty for _ in range(h2_dim)),
        w2_class=w2_class,
    )


def _catalog_s5() -> ManifoldProfile:
    return ManifoldProfile(
        name="S^5",
        homology=(_Z, _O, _O, _O, _O, _Z),
        spin=True,
        w4_is_zero=True,
        p1=_O.zero(),
        mod2_fragment=_trivial_degree4_fragment(0, ()),
    )


def _catalog_wu() -> ManifoldProfile:
    return ManifoldProfile(
        name="SU(3)/SO(3)",
        homology=(_Z, _O, _Z2, _O, _O, _Z),
        spin=False,
        w4_is_zero=True,
        p1=_O.zero(),
        mod2_fragment=_trivial_degree4_fragment(1, (1,)),
    )


def _catalog_s3xs2() -> ManifoldProfile:
    return ManifoldProfile(
        name="S^3 x S^2",
        homology=(_Z, _O, _Z, _Z, _O, _Z),
        spin=True,
        w4_is_zero=True,
        p1=_O.zero(),
        mod2_fragment=_trivial_degree4_fragment(1, (0,)),
    )


def _catalog_s3xs2_twisted() -> ManifoldProfile:
    return ManifoldProfile(
        name="S^3 x~ S^2",
        homology=(_Z, _O, _Z, _Z, _O, _Z),
        spin=False,
        w4_is_zero=True,
        p1=_O.zero(),
        mod2_fragment=_trivial_degree4_fragment(1, (1,)),
    )


_CATALOG = {
    "s5": _catalog_s5,
    "wu": _catalog_wu,
    "s3xs2": _catalog_s3xs2,
    "s3~xs2": _catalog_s3xs2_twisted,
}


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG))


def catalog(name: str) -> ManifoldProfile:
    """One of the hardcoded standard profiles: s5, wu, s3xs2, s3~xs2."""
    try:
        builder = _CATALOG[name]
    except KeyError:
        known = ", ".join(catalog_names())
        raise ValueError(f"unknown catalog name {name!r} (known: {known})") from None
    profile = builder()
    require_valid(profile)
    return profile


# ---------------------------------------------------------------------------
# connected sums and products
# ---------------------------------------------------------------------------


def connected_sum(a: ManifoldProfile, b: ManifoldProfile) -> ManifoldProfile:
    """Invariant profile of the connected sum of two profiles.

    Middle homology adds, spin and w4 vanishing are intersected, and p1
    is the pair (p1(a), p1(b)) written canonically in the merged H^4.
    The mod-2 fragment is not propagated: the summands' degree-4
    coordinates are rewritten by an element-dependent isomorphism during
    the merge, and carrying the tables through it is not implemented.
    """
    require_valid(a)
    require_valid(b)
    middle = tuple(a.homology[i].direct_sum(b.homology[i]) for i in range(1, 5))
    homology = (_Z,) + middle + (_Z,)
    p1 = direct_sum_elements([a.p1, b.p1])
    assert p1.group == FgAbGroup(homology[4].free_rank, homology[3].torsion)
    out = ManifoldProfile(
        name=f"{a.name} # {b.name}",
        homology=homology,
        spin=a.spin and b.spin,
        w4_is_zero=a.w4_is_zero and b.w4_is_zero,
        p1=p1,
        mod2_fragment=None,
    )
    require_valid(out)
    return out


def _kunneth(
    left: tuple[FgAbGroup, ...], right: tuple[FgAbGroup, ...], k: int
) -> FgAbGroup:
    out = FgAbGroup.trivial()
    for i, gl in enumerate(left):
        for j, gr in enumerate(right):
            if i + j == k:
                out = out.direct_sum(gl.tensor(gr))
            elif i + j == k - 1:
                out = out.direct_sum(gl.tor(gr))
    return out


def product_3x2(n3_homology: object, genus: int) -> ManifoldProfile:
    """Product of a closed oriented 3-manifold with a genus-g surface.

    The 3-manifold enters through its homology (H_0..H_3), validated
    against Poincare duality; the surface contributes (Z, Z^2g, Z).
    Homology of the product follows the Kunneth formula.  Both factors
    are spin and the 3-manifold is parallelizable, so the product
    profile is spin with w4 = 0 and p1 = 0.
    """
    n3 = tuple(n3_homology)
    if len(n3) != 4 or any(not isinstance(g, FgAbGroup) for g in n3):
        raise ValueError("3-manifold homology must be four groups H_0..H_3")
    if n3[0] != _Z or n3[3] != _Z:
        raise ValueError("closed oriented 3-manifold needs H_0 = H_3 = Z")
    if n3[2].torsion:
        raise ValueError("H_2 of a closed oriented 3-manifold is torsion-free")
    if n3[2].free_rank != n3[1].free_rank:
        raise ValueError("rank H_2 must equal rank H_1 (Poincare duality)")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    surface = (_Z, FgAbGroup(2 * genus, ()), _Z)
    homology = tuple(_kunneth(n3, surface, k) for k in range(6))
    h4 = FgAbGroup(homology[4].free_rank, homology[3].torsion)
    out = ManifoldProfile(
        name=f"N3(H1={n3[1]}) x Sigma_{genus}",
        homology=homology,
        spin=True,
        w4_is_zero=True,
        p1=h4.zero(),
        mod2_fragment=None,
    )
    require_valid(out)
    return out


# ---------------------------------------------------------------------------
# circle bundles via the Gysin sequence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleBundleSpec:
    """A circle bundle over a simply connected 4-manifold base, given by
    the coordinates of its Euler class in the basis of the form."""

    base: FourManifoldProfile
    euler_class: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "euler_class", tuple(int(x) for x in self.euler_class)
        )
        if len(self.euler_class) != self.base.b2:
            raise ValueError("Euler class must have one coordinate per basis class")


def circle_bundle(spec: CircleBundleSpec) -> ManifoldProfile:
    """Total space of the circle bundle, through the Gysin sequence.

    With c the Euler class and phi = Q c the evaluation functional
    x -> <c cup x, [base]>, the sequence gives homology
    (Z, Z_g, Z^{b2-1}, Z^{b2-1} + Z_g, 0, Z) for g = content(phi);
    spin iff w2 of the base is 0 or congruent to c mod 2 (pullback
    kills exactly those classes); w4 = 0 iff the base's top class is
    zero mod 2 (even Euler characteristic) or hit by cup with c
    (phi nonzero mod 2); p1 is the reduction of the base's Pontryagin
    number in H^4 = Z_g.  The fragment is expressed on the basis of
    pullback classes.
    """
    base, c = spec.base, spec.euler_class
    if not any(c):
        raise ValueError(
            "trivial circle bundle rejected: the Gysin route needs a nonzero Euler class"
        )
    b2 = base.b2
    phi = base.Q.apply(c)
    g = vector_content(phi)
    # the unimodular form preserves content, and the cokernel of cup-c
    # must agree with the cokernel of the evaluation functional
    assert g == vector_content(c)
    tors = (g,) if g > 1 else ()
    assert cokernel(IntegerMatrix.from_rows([[x] for x in phi])) == FgAbGroup(
        b2 - 1, tors
    )

    homology = (
        _Z,
        FgAbGroup(0, tors),
        FgAbGroup(b2 - 1, ()),
        FgAbGroup(b2 - 1, tors),
        _O,
        _Z,
    )
    w = base.w2_vector
    spin = not any(w) or all((wi - ci) % 2 == 0 for wi, ci in zip(w, c))
    w4_zero = base.euler_char % 2 == 0 or any(x % 2 for x in phi)
    h4 = FgAbGroup(0, tors)
    p1 = h4.element(torsion=[base.p1_eval] if g > 1 else [])

    # fragment on the pullback basis of H^2(M;Z_2)
    if g % 2:
        # c has an odd coordinate; its pullback relation removes one
        # basis class, and w2 may need the relation added to have a
        # representative supported away from the removed index
        j0 = next(i for i, ci in enumerate(c) if ci % 2)
        if w[j0] % 2:
            w = tuple((wi + ci) % 2 for wi, ci in zip(w, c))
        basis = [i for i in range(b2) if i != j0]
    else:
        basis = list(range(b2))
    m2, m4 = gcd(g, 2), gcd(g, 4)

    def deg4_mod2(value: int) -> tuple[int, ...]:
        return (value % m2,) if g > 1 else ()

    def deg4_mod4(value: int) -> tuple[int, ...]:
        return (value % m4,) if g > 1 else ()

    fragment = Mod2Fragment(
        h2_dim=len(basis),
        cup22=tuple(
            tuple(deg4_mod2(base.Q.entries[i][j]) for j in basis) for i in basis
        ),
        psquare=tuple(deg4_mod4(base.Q.entries[i][i]) for i in basis),
        w2_class=tuple(w[i] % 2 for i in basis),
    )

    out = ManifoldProfile(
        name="S1-bundle(c=" + ",".join(str(x) for x in c) + ")",
        homology=homology,
        spin=spin,
        w4_is_zero=w4_zero,
        p1=p1,
        mod2_fragment=fragment,
    )
    require_valid(out)
    return out


def find_euler_class(
    base: FourManifoldProfile,
    u: object,
    target_torsion: int,
    search_bound: int = 3,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First vector w (lexicographically, in the box [-bound, bound]^b2)
    with Q(u, w) = 0, w != u and content(Q (u + w)) = target_torsion.

    Returns (c, w) with c = u + w, or None when the box contains no
    such w.  The last coordinate is solved from the orthogonality
    constraint instead of enumerated, which preserves the lexicographic
    order of hits while trimming the search space by one dimension.
    """
    u = tuple(int(x) for x in u)
    if len(u) != base.b2:
        raise ValueError("u must have one coordinate per basis class")
    if search_bound < 0:
        raise ValueError("search bound must be nonnegative")
    if target_torsion < 0:
        raise ValueError("target torsion must be nonnegative")
    if base.b2 == 0:
        return None
    phi_u = base.Q.apply(u)
    last = base.b2 - 1
    box = range(-search_bound, search_bound + 1)

    def admit(w: tuple[int, ...]):
        if w == u:
            return None
        c = tuple(a + b for a, b in zip(u, w))
        if vector_content(base.Q.apply(c)) != target_torsion:
            return None
        return c

    for prefix in _cartesian(*[box] * last):
        partial = sum(p * f for p, f in zip(prefix, phi_u))
        if phi_u[last]:
            q, r = divmod(-partial, phi_u[last])
            if r or not -search_bound <= q <= search_bound:
                continue
            w = prefix + (q,)
            c = admit(w)
            if c is not None:
                return c, w
        else:
            if partial:
                continue
            for wl in box:
                w = prefix + (wl,)
                c = admit(w)
                if c is not None:
                    return c, w
    return None
