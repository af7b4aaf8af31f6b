"""Shifted families M_n = <n, n+r_1, ..., n+r_k> and presentation lifting.

Fix offsets r_1 < ... < r_k and let d = gcd(r_1, ..., r_k).  Once the shift
parameter n clears the threshold r_k^2, minimal presentations of M_n and of
M_{n+r_k} correspond through an explicit map on relations: a relation whose
sides differ in length by L gains L on coordinate 0 of the longer side and L
on coordinate k of the shorter side; equal-length relations are untouched.
The correspondence composes across steps, so a minimal presentation computed
directly at a small base shift determines one at any larger shift in the same
residue class mod r_k in closed form.  That removes the expensive part of the
direct algorithm (the Betti-element candidate scan, whose elements grow like
n^2) and is what makes shifts in the tens of thousands tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import NumericalMonoid, frobenius, normalize_generators
from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotARelation,
    NotInImage,
    NotMinimal,
    NotPrimitive,
    ShiftBelowThreshold,
    VerificationFailed,
)
from .oracle import congruence_closure_check
from .presentations import (
    Presentation,
    Relation,
    _canonical_star,
    factorization_graph,
    make_presentation,
    make_relation,
    minimal_presentation,
)
from .unionfind import UnionFind


@dataclass(frozen=True)
class ShiftedFamily:
    """The offset tuple r_1 < ... < r_k defining the family n -> M_n."""

    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if not r:
            raise InvalidInput("at least one offset is required")
        if r[0] < 1:
            raise InvalidInput("offsets must be positive")
        if any(b <= a for a, b in zip(r, r[1:])):
            raise InvalidInput("offsets must be strictly increasing")
        object.__setattr__(self, "r", r)

    @property
    def k(self) -> int:
        return len(self.r)

    @property
    def d(self) -> int:
        return gcd(*self.r)

    @property
    def step(self) -> int:
        """The largest offset r_k; consecutive family members differ by it."""
        return self.r[-1]

    @property
    def threshold(self) -> int:
        """r_k squared; the lifting correspondence needs n > threshold."""
        return self.r[-1] ** 2

    def generators_at(self, n: int) -> tuple[int, ...]:
        return (n, *(n + ri for ri in self.r))


@dataclass(frozen=True)
class FamilyMember:
    """M_n together with the flags the standing assumptions depend on."""

    family: ShiftedFamily
    n: int
    monoid: NumericalMonoid
    minimal: bool
    primitive: bool


def monoid_at(F: ShiftedFamily, n: int) -> FamilyMember:
    """Construct M_n and flag primitivity and minimal generation.

    M_n is primitive iff gcd(n, d) = 1.  For n > r_k the tuple is always
    minimal (any sum of two generators exceeds n + r_k); for n <= r_k it is
    checked explicitly.  Non-minimal or non-primitive members are returned
    flagged, and the operations that need the standing assumptions raise.
    """
    if n < 1:
        raise InvalidInput("shift parameter must be positive")
    gens = F.generators_at(n)
    monoid = NumericalMonoid(gens)
    primitive = gcd(n, F.d) == 1
    minimal = True if n > F.step else normalize_generators(gens).generators == gens
    return FamilyMember(F, n, monoid, minimal, primitive)


def _sides(rel):
    """Accept a Relation or a bare (left, right) pair; tag which it was."""
    if isinstance(rel, Relation):
        return rel.left, rel.right, True
    left, right = rel
    return tuple(left), tuple(right), False


def _checked_value(gens: tuple[int, ...], coords: tuple[int, ...]) -> int:
    if len(coords) != len(gens):
        raise DimensionMismatch(
            f"expected {len(gens)} coordinates, got {len(coords)}"
        )
    if any(c < 0 for c in coords):
        raise InvalidInput("coordinates must be non-negative")
    return sum(c * g for c, g in zip(coords, gens))


def _shift_pair(left, right, amount: int, k_index: int):
    """Add amount to coordinate 0 of the longer side and k of the shorter."""
    gap = sum(left) - sum(right)
    if gap == 0 or amount == 0:
        return left, right
    if gap > 0:
        longer, shorter = list(left), list(right)
    else:
        longer, shorter = list(right), list(left)
    longer[0] += amount
    shorter[k_index] += amount
    if gap > 0:
        return tuple(longer), tuple(shorter)
    return tuple(shorter), tuple(longer)


def lift_relation(F: ShiftedFamily, n: int, rel):
    """Image of a relation of M_n inside M_{n + r_k}.

    With L the length gap of the two sides, the longer side gains L on
    coordinate 0 and the shorter side gains L on coordinate k; equal-length
    relations map to themselves.  The output is verified to be a relation of
    M_{n + r_k} and keeps the same length gap.  Accepts a Relation or a bare
    pair (the diagonal (z, z) only makes sense as a pair) and returns the
    same kind.
    """
    left, right, wrapped = _sides(rel)
    gens_n = F.generators_at(n)
    if _checked_value(gens_n, left) != _checked_value(gens_n, right):
        raise NotARelation(
            f"{left} ~ {right} is not a relation of M_{n} in this family"
        )
    ell = abs(sum(left) - sum(right))
    new_left, new_right = _shift_pair(left, right, ell, F.k)
    target = NumericalMonoid(F.generators_at(n + F.step))
    if new_left == new_right:
        return (new_left, new_right)  # diagonal pair, only reachable unwrapped
    out = make_relation(target, new_left, new_right)
    return out if wrapped else out.pair()


def lower_relation(F: ShiftedFamily, n: int, rel):
    """Preimage under lift_relation: a relation of M_{n+r_k} pulled to M_n.

    Requires, when the length gap L is positive, coordinate 0 of the longer
    side and coordinate k of the shorter side to be at least L; otherwise the
    relation is not in the image of the lift.
    """
    left, right, wrapped = _sides(rel)
    gens_up = F.generators_at(n + F.step)
    if _checked_value(gens_up, left) != _checked_value(gens_up, right):
        raise NotARelation(
            f"{left} ~ {right} is not a relation of M_{n + F.step}"
        )
    ell = abs(sum(left) - sum(right))
    if ell == 0:
        new_left, new_right = left, right
    else:
        longer, shorter = (left, right) if sum(left) > sum(right) else (right, left)
        if longer[0] < ell or shorter[F.k] < ell:
            raise NotInImage(
                f"{left} ~ {right} lacks the coordinate margin to pull back"
            )
        new_left, new_right = _shift_pair(left, right, -ell, F.k)
    if new_left == new_right:
        return (new_left, new_right)
    base = NumericalMonoid(F.generators_at(n))
    out = make_relation(base, new_left, new_right)
    return out if wrapped else out.pair()


def lift_presentation(
    F: ShiftedFamily, n: int, pres: Presentation, steps: int
) -> Presentation:
    """steps-fold lift of a presentation of M_n, in closed form.

    The length gap of a relation is invariant along the orbit, so steps
    applications collapse to a single vector adjustment of steps * gap per
    relation.  Betti tags are recomputed at the target shift.
    """
    if n <= F.threshold:
        raise ShiftBelowThreshold(
            f"lifting requires n > {F.threshold}, got n = {n}"
        )
    if steps < 0:
        raise InvalidInput("steps must be non-negative")
    gens_n = F.generators_at(n)
    if pres.monoid.generators != gens_n:
        raise InvalidInput(
            f"presentation is over {pres.monoid.generators}, expected {gens_n}"
        )
    target = NumericalMonoid(F.generators_at(n + steps * F.step))
    rels = []
    for rel in pres.relations:
        ell = abs(sum(rel.left) - sum(rel.right))
        new_left, new_right = _shift_pair(rel.left, rel.right, steps * ell, F.k)
        rels.append(make_relation(target, new_left, new_right))
    return make_presentation(target, rels)


def accelerated_minimal_presentation(
    F: ShiftedFamily,
    n: int,
    *,
    paranoid: bool = False,
    deadline: float | None = None,
) -> Presentation:
    """Minimal presentation of M_n via a small base shift plus lifting.

    For n within r_k of the threshold (or below) this is just the direct
    computation.  Otherwise the base shift n0 is the smallest integer above
    r_k^2 congruent to n mod r_k; the direct computation runs there, the
    result is lifted (n - n0)/r_k steps, and the lift is re-canonicalized:
    each lifted Betti element's factorization graph at the target is built,
    the lifted relations are checked to span its components (the structural
    verification), and the canonical spanning star is emitted, so the output
    matches the direct canonical choice exactly.  With paranoid=True the
    output is additionally closure-checked over the window frobenius + 2m_t.
    """
    member = monoid_at(F, n)
    if not member.primitive:
        raise NotPrimitive(
            f"M_{n} has gcd {gcd(n, F.d)}; the correspondence needs a primitive member"
        )
    if not member.minimal:
        raise NotMinimal(f"generator tuple {member.monoid.generators} is not minimal")
    if n <= F.threshold + F.step:
        result = minimal_presentation(member.monoid, deadline=deadline)
    else:
        n0 = F.threshold + 1 + (n - F.threshold - 1) % F.step
        steps = (n - n0) // F.step
        base = minimal_presentation(
            monoid_at(F, n0).monoid, deadline=deadline
        )
        lifted = lift_presentation(F, n0, base, steps)
        target = member.monoid
        rels = []
        for beta, beta_rels in sorted(lifted.by_betti().items()):
            graph = factorization_graph(target, beta, deadline=deadline)
            if len(graph.components) < 2:
                raise VerificationFailed(
                    f"lifted value {beta} has a connected graph; lift is unsound"
                )
            comp_of = {}
            for ci, comp in enumerate(graph.components):
                for vi in comp:
                    comp_of[graph.vertices[vi]] = ci
            uf = UnionFind(len(graph.components))
            for rel in beta_rels:
                ci = comp_of.get(rel.left)
                cj = comp_of.get(rel.right)
                if ci is None or cj is None:
                    raise VerificationFailed(
                        f"lifted side of {rel} does not factor {beta}"
                    )
                if not uf.union(ci, cj):
                    raise VerificationFailed(
                        f"lifted relations at {beta} do not join distinct components"
                    )
            if uf.n_components != 1:
                raise VerificationFailed(
                    f"lifted relations at {beta} do not span the components"
                )
            rels.extend(_canonical_star(target, graph))
        result = make_presentation(target, rels)
    if paranoid:
        window = frobenius(result.monoid) + 2 * result.monoid.generators[-1]
        report = congruence_closure_check(result.monoid, result.relations, window)
        if not report.ok:
            raise VerificationFailed(
                f"closure check failed at {report.failures[0][0]}"
            )
    return result


def equal_length_projection(
    F: ShiftedFamily, n: int, pres: Presentation
) -> tuple[Relation, ...]:
    """Drop coordinate 0 from the equal-length relations of a presentation.

    For n > r_k^2 the projected pairs present the offset monoid
    S = <r_1, ..., r_k> (possibly redundantly; minimality is not promised
    and S need not be primitive or minimally generated as written).  The
    result is closure-verified over a window of S; a failure indicates a
    bug, not bad input, and raises VerificationFailed.
    """
    if n <= F.threshold:
        raise ShiftBelowThreshold(
            f"projection requires n > {F.threshold}, got n = {n}"
        )
    gens_n = F.generators_at(n)
    if pres.monoid.generators != gens_n:
        raise InvalidInput(
            f"presentation is over {pres.monoid.generators}, expected {gens_n}"
        )
    S = NumericalMonoid(F.r)
    rels = set()
    for rel in pres.relations:
        if sum(rel.left) == sum(rel.right):
            rels.add(make_relation(S, rel.left[1:], rel.right[1:]))
    out = sorted(rels, key=lambda r: (r.betti, r.left, r.right))
    small = F.r[-2] if F.k >= 2 else F.r[-1]
    window = small * F.r[-1] + 2 * F.r[-1]
    report = congruence_closure_check(S, out, window)
    if not report.ok:
        raise VerificationFailed(
            f"projected relations fail closure at {report.failures[0][0]}"
        )
    return tuple(out)


def family_from_generators(gens: tuple[int, ...]):
    """View a generator tuple as the member at n = m_1 of its shifted family.

    Every tuple with at least two generators arises exactly one way as
    (n, n + r_1, ..., n + r_k); returns (family, n).  Single-generator
    tuples have no offsets and no family.
    """
    if len(gens) < 2:
        return None, gens[0]
    n = gens[0]
    return ShiftedFamily(tuple(g - n for g in gens[1:])), n
