"""Invariant profiles of closed oriented connected 5-manifolds.

A profile records integral homology H_0..H_5 in invariant-factor form,
the spin flag (w_2 = 0), a flag for the vanishing of w_4, the first
Pontryagin class as an element of H^4(M; Z), and optionally a small
mod-2 cohomology fragment (cup products and Pontryagin squares on a
basis of H^2(M; Z_2)) for bundle-existence checks.

Cohomology is never stored: it is derived from homology through the
universal coefficient theorem, so the profile cannot drift out of sync
with itself.  The validator enforces the Poincare duality constraints
that a closed oriented connected 5-manifold imposes on such data.

Degree-4 coefficient classes (values of cup products mod 2 and of
Pontryagin squares mod 4) are represented in *matched coordinates*:
one cyclic coordinate per coordinate of H^4(M; Z), with moduli given by
``tensor_reduction_moduli``.  In these coordinates the coefficient
reduction maps Z -> Z/4 and Z/2 -> Z/4 are componentwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .fgab import (
    FgAbGroup,
    GroupElement,
    mod_p_dimension,
    tensor_reduction_moduli,
)


__all__ = [
    "CoefficientRing",
    "Mod2Fragment",
    "ManifoldProfile",
    "ProfileValidationError",
    "cohomology",
    "validate",
    "require_valid",
    "semicharacteristic",
    "kervaire_semicharacteristic",
    "homology_mod2_dimension",
    "mod2_class_moduli",
    "mod4_class_moduli",
    "zero_mod2_class",
    "zero_mod4_class",
    "cup_product",
    "pontryagin_square",
    "include_mod2_into_mod4",
    "profile_to_dict",
    "profile_from_dict",
    "profile_to_json",
    "profile_from_json",
    "group_to_dict",
    "group_from_dict",
]


_TRIVIAL = FgAbGroup.trivial()
_Z2 = FgAbGroup(0, (2,))


class CoefficientRing(Enum):
    """Coefficient rings supported by the cohomology computation."""

    Z = "Z"
    Z2 = "Z2"
    Z4 = "Z4"
    Z5 = "Z5"
    Z10 = "Z10"
    R = "R"

    @property
    def modulus(self) -> int | None:
        return {"Z2": 2, "Z4": 4, "Z5": 5, "Z10": 10}.get(self.value)


@dataclass(frozen=True)
class Mod2Fragment:
    """Partial ring data on a basis of H^2(M; Z_2).

    cup22[i][j] is the cup product of the i-th and j-th basis classes,
    a degree-4 mod-2 class in matched coordinates; psquare[i] is the
    Pontryagin square of the i-th basis class, a degree-4 mod-4 class.
    w2_class is the coordinate vector of w_2(M) in the same basis.
    Pontryagin squares of non-basis classes are derived through the
    quadratic law P(x + y) = P(x) + P(y) + i(x cup y), where i doubles
    a mod-2 class into a mod-4 class.
    """

    h2_dim: int
    cup22: tuple[tuple[tuple[int, ...], ...], ...]
    psquare: tuple[tuple[int, ...], ...]
    w2_class: tuple[int, ...]


@dataclass(frozen=True)
class ManifoldProfile:
    """Invariants of a closed oriented connected 5-manifold.

    The name is a label only and does not participate in equality;
    profiles are equal iff their invariants are.
    """

    name: str = field(compare=False)
    homology: tuple[FgAbGroup, ...]
    spin: bool
    w4_is_zero: bool
    p1: GroupElement
    mod2_fragment: Mod2Fragment | None = None

    def __post_init__(self) -> None:
        if len(self.homology) != 6:
            raise ValueError("a 5-manifold profile needs homology H_0..H_5")
        object.__setattr__(self, "homology", tuple(self.homology))


class ProfileValidationError(ValueError):
    """Raised when an operation requires a valid profile."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid profile: " + "; ".join(self.violations))


# ---------------------------------------------------------------------------
# cohomology via universal coefficients
# ---------------------------------------------------------------------------


def cohomology(
    profile: ManifoldProfile, k: int, ring: CoefficientRing = CoefficientRing.Z
) -> FgAbGroup:
    """H^k(M; R) computed from the stored homology.

    Integral coefficients: H^k = Z^{rank H_k} + torsion(H_{k-1}).
    Finite cyclic coefficients Z/m: H_k (x) Z/m + Tor(H_{k-1}, Z/m)
    (for finitely generated homology this agrees with the Hom/Ext
    description).  Real coefficients keep the free rank only.
    """
    if not 0 <= k <= 5:
        raise ValueError("cohomology degree must be between 0 and 5")
    hk = profile.homology[k]
    prev = profile.homology[k - 1] if k >= 1 else _TRIVIAL
    if ring is CoefficientRing.Z:
        return FgAbGroup(hk.free_rank, prev.torsion)
    if ring is CoefficientRing.R:
        return FgAbGroup(hk.free_rank, ())
    zm = FgAbGroup(0, (ring.modulus,))
    return hk.tensor(zm).direct_sum(prev.tor(zm))


def homology_mod2_dimension(profile: ManifoldProfile, i: int) -> int:
    """dim over Z_2 of H_i(M; Z_2) = H_i (x) Z_2 + Tor(H_{i-1}, Z_2)."""
    if not 0 <= i <= 5:
        return 0
    h = profile.homology[i]
    prev = profile.homology[i - 1] if i >= 1 else _TRIVIAL
    g = h.tensor(_Z2).direct_sum(prev.tor(_Z2))
    return len(g.torsion)


def semicharacteristic(profile: ManifoldProfile) -> int:
    """Mod-2 semi-characteristic: sum of dim H_i(M; Z_2), i = 0..2, mod 2.

    This is the obstruction-theoretic invariant; it is *not* the
    Kervaire semi-characteristic, which uses real coefficients.
    """
    return sum(homology_mod2_dimension(profile, i) for i in range(3)) % 2


def kervaire_semicharacteristic(profile: ManifoldProfile) -> int:
    """Kervaire semi-characteristic: (b_0 + b_2 + b_4) mod 2.

    Betti numbers are real-coefficient ranks.  Do not conflate this
    with the mod-2 semi-characteristic: on profiles whose H_2 carries
    2-torsion the two differ.
    """
    ranks = (profile.homology[0].free_rank, profile.homology[2].free_rank,
             profile.homology[4].free_rank)
    return sum(ranks) % 2


# ---------------------------------------------------------------------------
# degree-4 coefficient classes in matched coordinates
# ---------------------------------------------------------------------------


def mod2_class_moduli(profile: ManifoldProfile) -> tuple[int, ...]:
    """Cyclic moduli of H^4(M; Z_2) matched to the coordinates of H^4(M; Z)."""
    return tensor_reduction_moduli(cohomology(profile, 4), 2)


def mod4_class_moduli(profile: ManifoldProfile) -> tuple[int, ...]:
    """Cyclic moduli of H^4(M; Z_4) matched to the coordinates of H^4(M; Z)."""
    return tensor_reduction_moduli(cohomology(profile, 4), 4)


def zero_mod2_class(profile: ManifoldProfile) -> tuple[int, ...]:
    return (0,) * len(mod2_class_moduli(profile))


def zero_mod4_class(profile: ManifoldProfile) -> tuple[int, ...]:
    return (0,) * len(mod4_class_moduli(profile))


def include_mod2_into_mod4(profile: ManifoldProfile, vec: tuple[int, ...]) -> tuple[int, ...]:
    """The map H^4(M; Z_2) -> H^4(M; Z_4) induced by doubling Z_2 -> Z_4.

    Componentwise 2*a in the matched coordinates.  On a coordinate of
    modulus 2 on both sides (torsion coefficient 2 mod 4) this is the
    zero map, which is the correct induced map there.
    """
    moduli4 = mod4_class_moduli(profile)
    if len(vec) != len(moduli4):
        raise ValueError("mod-2 class has the wrong number of coordinates")
    return tuple((2 * a) % m for a, m in zip(vec, moduli4))


def _vec_sum(vectors, moduli: tuple[int, ...]) -> tuple[int, ...]:
    acc = [0] * len(moduli)
    for vec in vectors:
        for i, a in enumerate(vec):
            acc[i] += a
    return tuple(a % m for a, m in zip(acc, moduli))


def _require_fragment(profile: ManifoldProfile) -> Mod2Fragment:
    if profile.mod2_fragment is None:
        raise ValueError("insufficient ring data: profile has no mod-2 fragment")
    return profile.mod2_fragment


def _check_bits(vec, n: int, what: str) -> None:
    if len(vec) != n or any(b not in (0, 1) for b in vec):
        raise ValueError(f"{what} must be a 0/1 vector of length {n}")


def cup_product(profile: ManifoldProfile, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """Cup product of two mod-2 degree-2 classes, from the fragment tables."""
    frag = _require_fragment(profile)
    _check_bits(x, frag.h2_dim, "degree-2 class")
    _check_bits(y, frag.h2_dim, "degree-2 class")
    moduli = mod2_class_moduli(profile)
    terms = [
        frag.cup22[i][j]
        for i in range(frag.h2_dim)
        if x[i]
        for j in range(frag.h2_dim)
        if y[j]
    ]
    return _vec_sum(terms, moduli)


def pontryagin_square(profile: ManifoldProfile, x: tuple[int, ...]) -> tuple[int, ...]:
    """Pontryagin square of a mod-2 degree-2 class, a mod-4 class.

    Basis values come from the fragment table; the quadratic law
    extends them to arbitrary classes:
    P(sum x_i e_i) = sum x_i P(e_i) + sum_{i<j} x_i x_j i(e_i cup e_j).
    """
    frag = _require_fragment(profile)
    _check_bits(x, frag.h2_dim, "degree-2 class")
    moduli = mod4_class_moduli(profile)
    terms = [frag.psquare[i] for i in range(frag.h2_dim) if x[i]]
    terms.extend(
        include_mod2_into_mod4(profile, frag.cup22[i][j])
        for i in range(frag.h2_dim)
        if x[i]
        for j in range(i + 1, frag.h2_dim)
        if x[j]
    )
    return _vec_sum(terms, moduli)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _validate_fragment(profile: ManifoldProfile, out: list[str]) -> None:
    frag = profile.mod2_fragment
    assert frag is not None
    n = frag.h2_dim
    if n < 0:
        out.append("mod-2 fragment dimension must be nonnegative")
        return
    expected = mod_p_dimension(cohomology(profile, 2, CoefficientRing.Z2), 2)
    if n != expected:
        out.append(
            f"mod-2 fragment dimension {n} does not match dim H^2(M;Z2) = {expected}"
        )
    moduli2 = mod2_class_moduli(profile)
    moduli4 = mod4_class_moduli(profile)
    if len(frag.w2_class) != n or any(b not in (0, 1) for b in frag.w2_class):
        out.append("w2 class must be a 0/1 vector in the fragment basis")
        return
    if len(frag.cup22) != n or any(len(row) != n for row in frag.cup22):
        out.append("cup product table must be square of the fragment dimension")
        return
    if len(frag.psquare) != n:
        out.append("Pontryagin square table must cover the fragment basis")
        return
    for i in range(n):
        for j in range(n):
            val = frag.cup22[i][j]
            if len(val) != len(moduli2) or any(
                not 0 <= a < max(m, 1) for a, m in zip(val, moduli2)
            ):
                out.append("cup product values must be reduced degree-4 mod-2 classes")
                return
    for i in range(n):
        val = frag.psquare[i]
        if len(val) != len(moduli4) or any(
            not 0 <= a < max(m, 1) for a, m in zip(val, moduli4)
        ):
            out.append("Pontryagin square values must be reduced degree-4 mod-4 classes")
            return
    for i in range(n):
        for j in range(i + 1, n):
            if frag.cup22[i][j] != frag.cup22[j][i]:
                out.append("cup product table must be symmetric")
    for i in range(n):
        doubled = tuple((2 * a) % m for a, m in zip(frag.psquare[i], moduli4))
        diag = include_mod2_into_mod4(profile, frag.cup22[i][i])
        if _vec_sum([doubled, diag], moduli4) != (0,) * len(moduli4):
            out.append(
                "Pontryagin square table violates the quadratic law on basis classes"
            )
            break
    w2_zero = not any(frag.w2_class)
    if w2_zero != profile.spin:
        out.append("fragment w2 class must vanish exactly when the profile is spin")


def validate(profile: ManifoldProfile) -> list[str]:
    """All constraint violations of the profile (empty for a valid one).

    Checks connectivity and closedness (H_0 = H_5 = Z), the Poincare
    duality constraints (H_4 torsion-free of rank b_1, torsion of H_1
    equal to torsion of H_3, b_2 = b_3), the Wu-formula consequences
    for the flags, the home of p1, and the internal consistency of the
    mod-2 fragment when present.
    """
    out: list[str] = []
    h = profile.homology
    z = FgAbGroup(1, ())
    if h[0] != z:
        out.append("H0 must be Z (connected)")
    if h[5] != z:
        out.append("H5 must be Z (closed oriented)")
    if h[4].torsion:
        out.append("H4 must be torsion-free")
    if h[4].free_rank != h[1].free_rank:
        out.append("rank H4 must equal rank H1 (Poincare duality)")
    if h[1].torsion != h[3].torsion:
        out.append("torsion of H1 must equal torsion of H3 (Poincare duality)")
    if h[2].free_rank != h[3].free_rank:
        out.append("rank H2 must equal rank H3 (Poincare duality)")
    if profile.spin and not profile.w4_is_zero:
        out.append("spin forces w4 = 0 (Wu formula)")
    if cohomology(profile, 4, CoefficientRing.Z2).is_trivial() and not profile.w4_is_zero:
        out.append("w4 lives in H^4(M;Z2) = 0, so the w4 flag must be set")
    if profile.p1.group != cohomology(profile, 4):
        out.append("p1 must be an element of H^4(M;Z)")
    if profile.mod2_fragment is not None and not out:
        _validate_fragment(profile, out)
    return out


def require_valid(profile: ManifoldProfile) -> None:
    violations = validate(profile)
    if violations:
        raise ProfileValidationError(violations)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def group_to_dict(group: FgAbGroup) -> dict:
    return {"free": group.free_rank, "torsion": list(group.torsion)}


def group_from_dict(data: dict) -> FgAbGroup:
    return FgAbGroup(int(data["free"]), tuple(int(d) for d in data.get("torsion", ())))


def _fragment_to_dict(frag: Mod2Fragment) -> dict:
    return {
        "h2_dim": frag.h2_dim,
        "cup22": [[list(v) for v in row] for row in frag.cup22],
        "psquare": [list(v) for v in frag.psquare],
        "w2_class": list(frag.w2_class),
    }


def _fragment_from_dict(data: dict) -> Mod2Fragment:
    return Mod2Fragment(
        h2_dim=int(data["h2_dim"]),
        cup22=tuple(
            tuple(tuple(int(a) for a in v) for v in row) for row in data["cup22"]
        ),
        psquare=tuple(tuple(int(a) for a in v) for v in data["psquare"]),
        w2_class=tuple(int(b) for b in data["w2_class"]),
    )


def profile_to_dict(profile: ManifoldProfile) -> dict:
    out = {
        "name": profile.name,
        "homology": [group_to_dict(g) for g in profile.homology],
        "spin": profile.spin,
        "w4_zero": profile.w4_is_zero,
        "p1": {"free": list(profile.p1.free), "torsion": list(profile.p1.torsion)},
        "mod2_fragment": (
            _fragment_to_dict(profile.mod2_fragment)
            if profile.mod2_fragment is not None
            else None
        ),
    }
    return out


def profile_from_dict(data: dict) -> ManifoldProfile:
    try:
        homology = tuple(group_from_dict(g) for g in data["homology"])
        if len(homology) != 6:
            raise ValueError("homology must list H_0..H_5")
        h4 = FgAbGroup(homology[4].free_rank, homology[3].torsion)
        p1_data = data.get("p1", {"free": [], "torsion": []})
        p1 = GroupElement(
            h4,
            tuple(int(c) for c in p1_data.get("free", ())),
            tuple(int(c) for c in p1_data.get("torsion", ())),
        )
        frag_data = data.get("mod2_fragment")
        fragment = _fragment_from_dict(frag_data) if frag_data is not None else None
        return ManifoldProfile(
            name=str(data.get("name", "profile")),
            homology=homology,
            spin=bool(data["spin"]),
            w4_is_zero=bool(data["w4_zero"]),
            p1=p1,
            mod2_fragment=fragment,
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed profile data: {exc}") from exc


def profile_to_json(profile: ManifoldProfile) -> str:
    return json.dumps(profile_to_dict(profile), sort_keys=True)


def profile_from_json(text: str) -> ManifoldProfile:
    return profile_from_dict(json.loads(text))
