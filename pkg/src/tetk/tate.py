"""Laurent windows of class functions over central extensions, the rotation
condition, and the moonshine transform identity.

A Tate series over an extension C~ with denominator N is a finite family of
class-function coefficients V_j, to be read as sum_j V_j q^(j/N).  The series
belongs to the twisted theory's [g]-summand when a chosen central lift xi of
order N acts on the coefficients as V_j(xi x) = zeta_N^j V_j(x); the
moonshine transform identity F(g, xi h; q) = F(g, h; zeta_N q) is the same
condition at the level of series algebra and is implemented independently as
a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from tetk.cochain import CheckResult, Cochain, is_normalized
from tetk.cyclotomic import CycSum
from tetk.extension import (CentralExtension, central_extension,
                            find_central_lifts, order_of_lift,
                            trivial_group_cochain)
from tetk.groups import FiniteGroup, GroupAction, conjugacy_classes


def _classes(group: FiniteGroup):
    cached = getattr(group, "_classes", None)
    if cached is None:
        cached = conjugacy_classes(group)
        group._classes = cached
    return cached


class ClassFunction:
    """One exact CycSum value per conjugacy class of a finite group."""

    def __init__(self, group: FiniteGroup, values):
        classes, _ = _classes(group)
        values = list(values)
        if len(values) != len(classes):
            raise ValueError(
                f"need {len(classes)} class values, got {len(values)}")
        self.group = group
        self.values = [v if isinstance(v, CycSum) else CycSum.from_rational(v)
                       for v in values]

    @staticmethod
    def zero(group):
        n = len(_classes(group)[0])
        return ClassFunction(group, [CycSum.zero() for _ in range(n)])

    @staticmethod
    def from_callable(group, fn):
        classes, _ = _classes(group)
        return ClassFunction(group, [fn(cls[0]) for cls in classes])

    def evaluate(self, element):
        _, class_index = _classes(self.group)
        return self.values[int(class_index[element])]

    def translate(self, element):
        """x |-> self(element * x); a class function again when element is central."""
        classes, _ = _classes(self.group)
        mul = self.group.mul
        return ClassFunction(
            self.group,
            [self.evaluate(int(mul[element, cls[0]])) for cls in classes])

    def scale(self, c):
        return ClassFunction(self.group, [v * c for v in self.values])

    def add(self, other):
        if other.group is not self.group and other.group != self.group:
            raise ValueError("class functions over different groups")
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    @property
    def is_zero(self):
        return all(v.is_zero for v in self.values)

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and (self.group is other.group or self.group == other.group)
                and all(a == b for a, b in zip(self.values, other.values)))

    def __repr__(self):
        return f"ClassFunction({self.values!r})"


@dataclass
class TateSeries:
    """Finite q^(j/denominator) window with class-function coefficients."""
    group: FiniteGroup
    denominator: int
    coefficients: dict = field(default_factory=dict)  # j -> ClassFunction

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be >= 1")
        self.coefficients = {int(j): v for j, v in self.coefficients.items()}

    def support(self):
        return sorted(self.coefficients)

    def coefficient(self, j):
        return self.coefficients.get(int(j), ClassFunction.zero(self.group))

    def map_coefficients(self, fn):
        return TateSeries(self.group, self.denominator,
                          {j: fn(j, v) for j, v in self.coefficients.items()})

    def coefficient_sum(self):
        total = ClassFunction.zero(self.group)
        for v in self.coefficients.values():
            total = total.add(v)
        return total

    def equals(self, other):
        if self.denominator != other.denominator:
            return False
        if self.group is not other.group and self.group != other.group:
            return False
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(j) == other.coefficient(j) for j in keys)


def is_central(group: FiniteGroup, element) -> bool:
    return all(group.mul[element, h] == group.mul[h, element]
               for h in range(group.order))


def _validated_lift(series_group, xi, denominator):
    if not is_central(series_group, xi):
        raise ValueError(f"lift {xi} is not central")
    N = series_group.element_order(xi)
    if N != denominator:
        raise ValueError(
            f"denominator mismatch: lift has order {N}, series denominator "
            f"is {denominator}")
    return N


def rotation_check(series: TateSeries, xi) -> CheckResult:
    """V_j(xi x) = zeta_N^j V_j(x) for every coefficient and class, exactly."""
    N = _validated_lift(series.group, xi, series.denominator)
    classes, _ = _classes(series.group)
    mul = series.group.mul
    for j in series.support():
        V = series.coefficients[j]
        zeta_j = CycSum.root(N, j % N)
        for cls in classes:
            x = cls[0]
            lhs = V.evaluate(int(mul[xi, x]))
            rhs = zeta_j * V.evaluate(x)
            if lhs != rhs:
                return CheckResult(
                    False, witness=(j, x),
                    detail=(f"coefficient j={j}, class of {x}: V_j(xi.x) = "
                            f"{lhs!r} but zeta^j V_j(x) = {rhs!r}"))
    return CheckResult(True)


def moonshine_transform_check(series: TateSeries, xi) -> CheckResult:
    """Series-level form of the rotation condition, as an independent check.

    Substituting h -> xi h coefficientwise must equal rescaling the q
    variable by zeta_N (coefficient j picks up zeta_N^j).
    """
    N = _validated_lift(series.group, xi, series.denominator)
    shifted = series.map_coefficients(lambda j, V: V.translate(xi))
    rescaled = series.map_coefficients(
        lambda j, V: V.scale(CycSum.root(N, j % N)))
    if shifted.equals(rescaled):
        return CheckResult(True)
    for j in series.support():
        if shifted.coefficient(j) != rescaled.coefficient(j):
            return CheckResult(
                False, witness=j,
                detail=f"series disagree at q-exponent {j}/{N}")
    return CheckResult(False, detail="series disagree")


def q_graded_projection(chi: ClassFunction, xi) -> TateSeries:
    """Split a character into its rotation-graded pieces.

    V_j(x) = (1/N) sum_t zeta_N^(-jt) chi(xi^t x) for j = 0..N-1; the pieces
    sum back to chi and each satisfies the rotation condition.
    """
    group = chi.group
    if not is_central(group, xi):
        raise ValueError(f"lift {xi} is not central")
    N = group.element_order(xi)
    mul = group.mul
    powers = [0]
    for _ in range(N - 1):
        powers.append(int(mul[powers[-1], xi]))
    classes, _ = _classes(group)
    coeffs = {}
    for j in range(N):
        values = []
        for cls in classes:
            x = cls[0]
            acc = CycSum.zero()
            for t in range(N):
                acc = acc + CycSum.root(N, (-j * t) % N) * chi.evaluate(int(mul[powers[t], x]))
            values.append(acc * Fraction(1, N))
        coeffs[j] = ClassFunction(group, values)
    series = TateSeries(group, N, coeffs)
    assert rotation_check(series, xi)
    return series


def identity_summand_triviality(alpha: Cochain) -> bool:
    """Whether the transgressed twist restricted to the identity class is
    trivial (it always is for normalized alpha)."""
    if not is_normalized(alpha):
        raise ValueError("alpha must be normalized")
    from tetk.transgression import transgress3

    res = transgress3(alpha)
    return res.restrictions[0].is_zero()


class AssemblyError(RuntimeError):
    pass


@dataclass
class TateSummand:
    rep: int
    extension: CentralExtension
    series: TateSeries
    lift: int                    # element index of xi in the extension
    lift_order: object           # LiftOrder report (N, h, |g|, divides)


@dataclass
class TateElement:
    """One rotation-checked summand per conjugacy class of the group."""
    group: FiniteGroup
    summands: list


def assemble_tetk_element(action: GroupAction, alpha: Cochain,
                          series_by_class=None, lift_exponents=None) -> TateElement:
    """Assemble a twisted-theory element: per conjugacy class [g], the
    central extension of C_g by the transgressed twist, a chosen central
    lift, and a series passing the rotation check.

    Series are taken from series_by_class (keyed by class representative;
    every class must be present) or generated as the graded projection of
    the twisted regular character.  lift_exponents optionally picks the
    mu_m exponent z of the lift (g, z) per class; default z = 0, the
    canonical lift g~.

    Classes with empty fixed sets contribute zero series over the untwisted
    extension.  Fixed sets with more than one point are out of scope for the
    extension-based assembly and are rejected.
    """
    if not is_normalized(alpha):
        raise ValueError("alpha must be normalized")
    from tetk.transgression import source_class_order, transgress3

    res = transgress3(alpha)
    G = action.group
    summands = []
    for comp in res.components:
        rep = comp.rep
        if len(comp.fixed_points) > 1:
            raise AssemblyError(
                f"class {rep}: fixed set has {len(comp.fixed_points)} points; "
                "the extension-based assembly needs at most one")
        cg = comp.centralizer
        if comp.fixed_points:
            theta_g = res.restrictions[rep]
            ext = central_extension(cg, theta_g)
            x0 = comp.fixed_points[0]
        else:
            ext = central_extension(cg, trivial_group_cochain(cg, alpha.modulus))
            x0 = None
        g_pos = cg.position_of(rep)
        z = 0 if lift_exponents is None else int(lift_exponents.get(rep, 0))
        lifts = find_central_lifts(ext, g_pos)
        if z % ext.modulus not in lifts:
            raise AssemblyError(
                f"class {rep}: no central lift (g, {z}) exists")
        xi = ext.index(g_pos, z)

        # divisibility report against the source cocycle restricted to <g>
        h = source_class_order(alpha, rep, x0) if x0 is not None else 1
        report = order_of_lift(ext, g_pos, source_order=h)

        if series_by_class is not None:
            if rep not in series_by_class:
                raise AssemblyError(f"class {rep}: series missing")
            series = series_by_class[rep]
            N = ext.element_order(xi)
            if series.denominator != N:
                raise AssemblyError(
                    f"class {rep}: series denominator {series.denominator} "
                    f"differs from the lift order {N}")
        elif comp.fixed_points:
            from tetk.reps import twisted_regular_rep

            _, chi = twisted_regular_rep(cg, ext.theta)
            series = q_graded_projection(chi, xi)
        else:
            series = TateSeries(ext, ext.element_order(xi), {})
        chk = rotation_check(series, xi)
        if not chk:
            raise AssemblyError(f"class {rep}: rotation check failed: {chk.detail}")
        summands.append(TateSummand(rep, ext, series, xi, report))
    return TateElement(G, summands)
