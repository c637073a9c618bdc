"""Skein systems of cyclically symmetric multilinear polynomials.

A skein system of parity nu is a sequence f_J (J = nu, nu+2, ...) of
polynomials, multilinear and invariant under cyclic shift, satisfying the
reduction f_J(x1, 0, x3, ..., xJ) = f_{J-2}(x1+x3, x4, ..., xJ).  The
normalized family determinants i^alpha * det are such systems in the twist
counts, so each is pinned by a short list of initial values; the explicit
realization is through the circulant-band matrices A_J^+- below.

Coefficients live in the Gaussian integers so the same representation
carries the integer-valued systems and their i-weighted homogeneous
expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .gaussian import GaussianInteger, i_power
from .intmatrix import exact_determinant


@dataclass(frozen=True)
class MultilinearCyclicPoly:
    """A multilinear polynomial in x_1..x_J, keyed by monomial support sets."""

    arity: int
    coeffs: tuple[tuple[frozenset[int], GaussianInteger], ...]

    @staticmethod
    def from_dict(arity: int,
                  data: dict[frozenset[int], GaussianInteger]) -> "MultilinearCyclicPoly":
        items = tuple(sorted(
            ((s, c) for s, c in data.items() if not c.is_zero()),
            key=lambda it: (len(it[0]), sorted(it[0])),
        ))
        for s, _ in items:
            if any(not 1 <= j <= arity for j in s):
                raise ValueError("monomial variable out of range")
        return MultilinearCyclicPoly(arity, items)

    def as_dict(self) -> dict[frozenset[int], GaussianInteger]:
        return dict(self.coeffs)

    def coefficient(self, subset: Iterable[int]) -> GaussianInteger:
        key = frozenset(subset)
        for s, c in self.coeffs:
            if s == key:
                return c
        return GaussianInteger(0, 0)

    def evaluate(self, xs: Sequence[int]) -> GaussianInteger:
        if len(xs) != self.arity:
            raise ValueError("wrong number of arguments")
        total = GaussianInteger(0, 0)
        for s, c in self.coeffs:
            prod = 1
            for j in s:
                prod *= xs[j - 1]
            total = total + c * prod
        return total

    def cyclic_shift(self) -> "MultilinearCyclicPoly":
        """The polynomial f(x_J, x_1, ..., x_{J-1})."""
        J = self.arity
        data: dict[frozenset[int], GaussianInteger] = {}
        for s, c in self.coeffs:
            data[frozenset(j % J + 1 for j in s)] = c
        return MultilinearCyclicPoly.from_dict(J, data)

    def is_cyclic(self) -> bool:
        return self == self.cyclic_shift()

    def substitute_zero(self, var: int) -> "MultilinearCyclicPoly":
        data = {s: c for s, c in self.coeffs if var not in s}
        return MultilinearCyclicPoly.from_dict(self.arity, data)

    def __add__(self, other: "MultilinearCyclicPoly") -> "MultilinearCyclicPoly":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        data = dict(self.coeffs)
        for s, c in other.coeffs:
            data[s] = data.get(s, GaussianInteger(0, 0)) + c
        return MultilinearCyclicPoly.from_dict(self.arity, data)

    def __sub__(self, other: "MultilinearCyclicPoly") -> "MultilinearCyclicPoly":
        return self + other.scale(GaussianInteger(-1, 0))

    def scale(self, factor: GaussianInteger | int) -> "MultilinearCyclicPoly":
        data = {s: c * factor for s, c in self.coeffs}
        return MultilinearCyclicPoly.from_dict(self.arity, data)

    @staticmethod
    def constant(arity: int, value: GaussianInteger | int) -> "MultilinearCyclicPoly":
        if isinstance(value, int):
            value = GaussianInteger(value, 0)
        return MultilinearCyclicPoly.from_dict(arity, {frozenset(): value})


def axiom_iii_holds(f_j: MultilinearCyclicPoly,
                    f_jm2: MultilinearCyclicPoly) -> bool:
    """f_J(x1, 0, x3, x4, ...) == f_{J-2}(x1+x3, x4, ...) at coefficient level."""
    if f_j.arity != f_jm2.arity + 2:
        raise ValueError("arities must differ by 2")
    lhs = f_j.substitute_zero(2).as_dict()
    # expand the right side in the variables x1, x3, x4, ..., xJ
    rhs: dict[frozenset[int], GaussianInteger] = {}
    for s, c in f_jm2.coeffs:
        tail = frozenset(j + 2 for j in s if j >= 2)
        if 1 in s:
            for head in (frozenset([1]), frozenset([3])):
                key = head | tail
                rhs[key] = rhs.get(key, GaussianInteger(0, 0)) + c
        else:
            rhs[tail] = rhs.get(tail, GaussianInteger(0, 0)) + c
    rhs_poly = MultilinearCyclicPoly.from_dict(f_j.arity, rhs)
    return MultilinearCyclicPoly.from_dict(f_j.arity, lhs) == rhs_poly


def check_skein_axioms(seq: Sequence[MultilinearCyclicPoly]) -> bool:
    """Multilinearity, cyclic symmetry, and the two-step reduction, symbolically."""
    if not seq:
        return True
    for f in seq:
        if not f.is_cyclic():
            return False
    for prev, cur in zip(seq, seq[1:]):
        if cur.arity != prev.arity + 2:
            raise ValueError("consecutive arities must differ by 2")
        if not axiom_iii_holds(cur, prev):
            return False
    return True


# ---------------------------------------------------------------------------
# the circulant-band matrices and their normalized determinants


def banded_matrix(j: int, sign: int, xs: Sequence[int]) -> list[list[int]]:
    """-2 diag(x) + off-diagonal band of ones +- ones in the corners.

    For j == 2 the band and the corner coincide, giving off-diagonal
    entries 2 and 0 for the two signs.
    """
    if j < 1:
        raise ValueError("arity must be positive")
    if len(xs) != j:
        raise ValueError("need exactly j entries")
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    m = [[0] * j for _ in range(j)]
    for idx in range(j):
        m[idx][idx] = -2 * xs[idx]
    for idx in range(j - 1):
        m[idx][idx + 1] += 1
        m[idx + 1][idx] += 1
    if j == 1:
        m[0][0] += 2 * sign
    else:
        m[0][j - 1] += sign
        m[j - 1][0] += sign
    return m


def A_matrix_det(j: int, sign: int, xs: Sequence[int]) -> int:
    return exact_determinant(banded_matrix(j, sign, list(xs)))


def a_pm(j: int, sign: int, xs: Sequence[int]) -> int:
    """The normalized determinant: the J mod 4 pattern of signed band dets."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    if j % 4 in (0, 1):
        return sign * A_matrix_det(j, sign, xs)
    return -sign * A_matrix_det(j, -sign, xs)


def _constant_band(j: int, sign: int) -> list[list[int]]:
    return banded_matrix(j, sign, [0] * j)


def A_matrix_det_symbolic(j: int, sign: int) -> MultilinearCyclicPoly:
    """det A_J^+- as a multilinear polynomial in x_1..x_J.

    Splitting the matrix into diagonal and constant band, the coefficient of
    the monomial over S is (-2)^|S| times the complementary principal minor
    of the band part.
    """
    band = _constant_band(j, sign)
    data: dict[frozenset[int], GaussianInteger] = {}
    for size in range(j + 1):
        for subset in combinations(range(j), size):
            rest = [r for r in range(j) if r not in subset]
            minor = [[band[r][c] for c in rest] for r in rest]
            coeff = (-2) ** size * exact_determinant(minor)
            if coeff:
                data[frozenset(v + 1 for v in subset)] = GaussianInteger(coeff, 0)
    return MultilinearCyclicPoly.from_dict(j, data)


def a_pm_symbolic(j: int, sign: int) -> MultilinearCyclicPoly:
    if j % 4 in (0, 1):
        return A_matrix_det_symbolic(j, sign).scale(sign)
    return A_matrix_det_symbolic(j, -sign).scale(-sign)


# ---------------------------------------------------------------------------
# homogeneous building blocks: disjoint edge sets of the J-cycle


def cycle_matchings(j: int, edges: int) -> list[tuple[tuple[int, int], ...]]:
    """All sets of `edges` pairwise-disjoint edges of the J-cycle."""
    if j == 1:
        all_edges: list[tuple[int, int]] = []
    elif j == 2:
        all_edges = [(1, 2)]
    else:
        all_edges = [(idx, idx + 1) for idx in range(1, j)] + [(j, 1)]
    out = []
    for combo in combinations(all_edges, edges):
        used: set[int] = set()
        ok = True
        for a, b in combo:
            if a in used or b in used:
                ok = False
                break
            used.update((a, b))
        if ok:
            out.append(combo)
    return out


def f_Jk(j: int, k: int) -> MultilinearCyclicPoly:
    """Sum over disjoint edge-sets covering J-k variables of the complementary monomial."""
    if k < 0 or k > j or (j - k) % 2:
        raise ValueError("k must have the parity of J and lie in [0, J]")
    data: dict[frozenset[int], GaussianInteger] = {}
    full = frozenset(range(1, j + 1))
    for combo in cycle_matchings(j, (j - k) // 2):
        covered = {v for e in combo for v in e}
        mono = full - covered
        data[mono] = data.get(mono, GaussianInteger(0, 0)) + GaussianInteger(1, 0)
    return MultilinearCyclicPoly.from_dict(j, data)


def a_pm_homogeneous(j: int, sign: int) -> MultilinearCyclicPoly:
    """a_J^+- assembled from the homogeneous pieces with i-power weights."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    if j % 2 == 0:
        plus = MultilinearCyclicPoly.constant(j, 0)
        for k in range(2, j + 1, 2):
            weight = (GaussianInteger(0, 2)) ** k
            plus = plus + f_Jk(j, k).scale(weight)
        if sign == 1:
            return plus
        return MultilinearCyclicPoly.constant(j, -4) - plus
    plus = MultilinearCyclicPoly.constant(j, 2)
    for k in range(1, j + 1, 2):
        weight = GaussianInteger(0, 1) * (GaussianInteger(0, 2)) ** k
        plus = plus + f_Jk(j, k).scale(weight)
    if sign == 1:
        return plus
    return MultilinearCyclicPoly.constant(j, 4) - plus


# ---------------------------------------------------------------------------
# reconstruction from initial data


@dataclass(frozen=True)
class SkeinSystemSpec:
    """Initial data pinning a skein system of the given parity.

    parity 1: c0 = f_1(0) plus the all-ones values c_J for odd J.
    parity 2: c0 = f_2(0,0) and c1 = f_2(1,0) plus the all-ones values.
    """

    parity: int
    c0: GaussianInteger
    all_ones: Callable[[int], GaussianInteger]
    c1: GaussianInteger | None = None

    def __post_init__(self) -> None:
        if self.parity not in (1, 2):
            raise ValueError("parity must be 1 or 2")
        if self.parity == 2 and self.c1 is None:
            raise ValueError("parity-2 systems need c1 = f_2(1,0)")


class InconsistentSpecError(ValueError):
    """The reduction produced contradictory vertex values."""


def reconstruct_from_initial(spec: SkeinSystemSpec, j: int) -> MultilinearCyclicPoly:
    """The unique multilinear cyclic polynomial with the given initial data.

    Values at 0/1 vertices with a zero reduce to arity J-2 through the
    two-step axiom; the all-ones vertex is the prescribed c_J; multilinear
    interpolation fills in everything else.  The result is checked to be
    cyclically symmetric and to satisfy the reduction, so an inconsistent
    spec raises instead of silently producing a non-system.
    """
    if j < spec.parity or (j - spec.parity) % 2:
        raise ValueError("arity does not match the parity")

    def value(arity: int, xs: tuple[int, ...]) -> GaussianInteger:
        if arity == 1:
            # f_1(x) = c0 + (c1 - c0) x with c1 = all_ones(1)
            return spec.c0 + (spec.all_ones(1) - spec.c0) * xs[0]
        if arity == 2:
            assert spec.c1 is not None
            b = spec.c1 - spec.c0
            c2 = spec.all_ones(2)
            quad = c2 - spec.c1 - b  # c2 - c0 - 2b
            return spec.c0 + b * (xs[0] + xs[1]) + quad * (xs[0] * xs[1])
        if all(x == 1 for x in xs):
            return spec.all_ones(arity)
        if 0 in xs:
            pos = xs.index(0)
            # rotate the zero into slot 2
            rot = tuple(xs[(pos - 1 + t) % arity] for t in range(arity))
            reduced = (rot[0] + rot[2],) + rot[3:]
            return value(arity - 2, reduced)
        # reduce the first coordinate not in {0,1} by linearity
        pos = next(t for t in range(arity) if xs[t] not in (0, 1))
        x = xs[pos]
        at0 = xs[:pos] + (0,) + xs[pos + 1:]
        at1 = xs[:pos] + (1,) + xs[pos + 1:]
        f0 = value(arity, at0)
        f1 = value(arity, at1)
        return f0 + (f1 - f0) * x

    data: dict[frozenset[int], GaussianInteger] = {}
    for size in range(j + 1):
        for subset in combinations(range(1, j + 1), size):
            # Moebius inversion over the vertex values of the cube
            total = GaussianInteger(0, 0)
            for inner_size in range(size + 1):
                for inner in combinations(subset, inner_size):
                    point = tuple(1 if t + 1 in inner else 0 for t in range(j))
                    term = value(j, point)
                    if (size - inner_size) % 2:
                        term = -term
                    total = total + term
            if not total.is_zero():
                data[frozenset(subset)] = total
    poly = MultilinearCyclicPoly.from_dict(j, data)
    if not poly.is_cyclic():
        raise InconsistentSpecError("reconstructed polynomial is not cyclic")
    if j >= spec.parity + 2:
        prev = reconstruct_from_initial(spec, j - 2)
        if not axiom_iii_holds(poly, prev):
            raise InconsistentSpecError("reconstruction violates the reduction axiom")
    return poly


def a_plus_spec() -> SkeinSystemSpec:
    """Initial data of the odd {a_J^+} system."""
    return SkeinSystemSpec(
        parity=1,
        c0=GaussianInteger(2, 0),
        all_ones=lambda j: (i_power(j + 1) + 1) * 2,
    )


def a_minus_even_spec() -> SkeinSystemSpec:
    """Initial data of the even {a_J^-} system."""
    return SkeinSystemSpec(
        parity=2,
        c0=GaussianInteger(-4, 0),
        c1=GaussianInteger(-4, 0),
        all_ones=lambda j: (i_power(j) + 1) * -2,
    )


# ---------------------------------------------------------------------------
# closed forms for the normalized family determinants


class FormulaNotEstablished(ValueError):
    """The requested parameters fall outside the proven closed forms."""


def tilde_closed_form(kind: str, n: int, k: int, j: int,
                      alphas: Sequence[int]) -> GaussianInteger:
    """The normalized determinant i^alpha * det of the family braid.

    Five parity cases; the narrow family at n = 0 mod 4 needs k = 1 (larger
    k vanishes identically), and the wide family is undefined there.
    """
    if kind not in ("b", "c"):
        raise ValueError("kind must be 'b' or 'c'")
    if n < 1 or k < 1 or j < 1:
        raise ValueError("n, k, J must be positive")
    if (n - j) % 2:
        raise ValueError("J must have the parity of n")
    if len(alphas) != j or any(a < 0 for a in alphas):
        raise ValueError("alphas must be J nonnegative integers")
    if kind == "c" and k < 2:
        raise ValueError("the wide family requires k >= 2")
    xs = list(alphas)
    if n % 4 == 0:
        if kind == "c":
            raise FormulaNotEstablished(
                "wide family at n = 0 mod 4 has no proven closed form")
        if k > 1:
            return GaussianInteger(0, 0)
        return GaussianInteger(a_pm(j, 1, xs), 0)
    if n % 4 == 2:
        return GaussianInteger(-(4 ** (k - 1)) * a_pm(j, -1, xs), 0)
    # n odd
    if (n + 2 * k) % 4 == 1:
        scale = i_power(-k) * 2 ** (k - 1)
        return scale * a_pm(j, -1 if kind == "b" else 1, xs)
    scale = i_power(k) * 2 ** (k - 1)
    return scale * a_pm(j, 1 if kind == "b" else -1, xs)


def family_det_closed_form(kind: str, n: int, k: int, j: int,
                           alphas: Sequence[int]) -> GaussianInteger:
    """det of the family braid: i^-alpha times the normalized value."""
    tilde = tilde_closed_form(kind, n, k, j, alphas)
    return i_power(-sum(alphas)) * tilde


def det_table_all_ones(kind: str, n: int, k: int, j: int) -> GaussianInteger:
    """The four-case closed form for det at all twist counts one."""
    if kind == "b":
        if n % 4 == 0 and (j + 2) % 4 == 0 and k == 1:
            return GaussianInteger(4, 0)
        if (n + 2) % 4 == 0 and j % 4 == 0:
            return GaussianInteger(4, 0) ** k
        if n % 2 == 1 and (j - (n + 2 * k)) % 4 == 0:
            return (GaussianInteger(-2, 0) * i_power(n)) ** (k + 1)
        return GaussianInteger(0, 0)
    if kind == "c":
        if k < 2:
            raise ValueError("the wide family requires k >= 2")
        if (n + 2) % 4 == 0 and j % 4 == 0:
            return GaussianInteger(4, 0) ** k
        if n % 2 == 1 and (j - (n + 2 * k + 2)) % 4 == 0:
            return -((GaussianInteger(-2, 0) * i_power(n)) ** (k + 1))
        return GaussianInteger(0, 0)
    raise ValueError("kind must be 'b' or 'c'")
