"""Generalized skein relations for three-strand twist insertions.

The classical crossing relation is a 3-term recurrence in powers of the
2-strand twist.  Inserting powers of the 3-strand twist delta = s1 s2 (or
of the squared half twist on three strands) satisfies 5-term recurrences
whose coefficients are fixed Laurent polynomials; the block-matrix identity
behind them holds for arbitrary matrices in the corner blocks and is checked
here symbolically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braid import BraidWord, delta_small, half_twist
from .gaussian import GaussianInteger
from .laurent import LaurentPolynomial
from .seifert import conway_potential, link_det

_T = LaurentPolynomial.t


def _lp(d: dict[int, int]) -> LaurentPolynomial:
    return LaurentPolynomial(d)


#: coefficients (1, c1, c2, c3, 1) of the 5-term relation in delta_3 powers
DELTA3_COEFFS = (
    LaurentPolynomial.one(),
    _lp({2: -1, 0: 1, -2: -1}),
    _lp({2: -1, 0: 2, -2: -1}),
    _lp({2: -1, 0: 1, -2: -1}),
    LaurentPolynomial.one(),
)

#: coefficients (1, C1, C2, C3, 1) of the relation in squared-half-twist powers
DELTA3SQ_COEFFS = (
    LaurentPolynomial.one(),
    _lp({6: -1, 0: -2, -6: -1}),
    _lp({6: 2, 0: 2, -6: 2}),
    _lp({6: -1, 0: -2, -6: -1}),
    LaurentPolynomial.one(),
)


@dataclass(frozen=True)
class RelationSpec:
    kind: str
    coefficients: tuple[LaurentPolynomial, ...]

    @staticmethod
    def delta3_order4() -> "RelationSpec":
        return RelationSpec("delta3_order4", DELTA3_COEFFS)

    @staticmethod
    def delta3sq_order4() -> "RelationSpec":
        return RelationSpec("Delta3sq_order4", DELTA3SQ_COEFFS)


def _insertion(word: BraidWord, kind: str) -> BraidWord:
    if word.strands < 3:
        raise ValueError("the relations need at least three strands")
    if kind == "delta3_order4":
        return delta_small(3, word.strands)
    if kind == "Delta3sq_order4":
        return half_twist(3, word.strands) ** 2
    raise ValueError(f"unknown relation kind {kind!r}")


def relation_residual(word: BraidWord, spec: RelationSpec) -> LaurentPolynomial:
    """Sum of coefficient * potential over the five twisted closures; contract: 0."""
    step = _insertion(word, spec.kind)
    total = LaurentPolynomial.zero()
    current = word
    for coeff in spec.coefficients:
        total = total + coeff * conway_potential(current)
        current = current * step
    return total


def det_relation_check(word: BraidWord, kind: str) -> GaussianInteger:
    """The determinant form of the relations (coefficients at t = i); contract: 0."""
    if kind == "delta3_order4":
        weights = (1, 3, 4, 3, 1)
        step = delta_small(3, word.strands)
    elif kind == "Delta3sq_order4":
        weights = (1, 0, -2, 0, 1)
        step = half_twist(3, word.strands) ** 4
    else:
        raise ValueError(f"unknown relation kind {kind!r}")
    if word.strands < 3:
        raise ValueError("the relations need at least three strands")
    total = GaussianInteger(0, 0)
    current = word
    for w in weights:
        if w:
            total = total + link_det(current) * w
        current = current * step
    return total


# ---------------------------------------------------------------------------
# the block identity


def _laurent_det(rows: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
    """Fraction-free Bareiss over the Laurent ring (small matrices only)."""
    n = len(rows)
    if n == 0:
        return LaurentPolynomial.one()
    a = [row[:] for row in rows]
    sign = 1
    prev = LaurentPolynomial.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPolynomial.zero()
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPolynomial.zero()
        prev = piv
    return a[n - 1][n - 1] * sign


def _block_A() -> list[list[LaurentPolynomial]]:
    return [
        [_lp({1: 1, -1: -1}), _lp({-1: -1})],
        [_T(1), _lp({1: 1, -1: -1})],
    ]


def _block_B() -> list[list[LaurentPolynomial]]:
    return [
        [_lp({-1: 1}), LaurentPolynomial.zero()],
        [_lp({1: -1}), _lp({-1: 1})],
    ]


def _block_Bstar() -> list[list[LaurentPolynomial]]:
    return [
        [_lp({1: -1}), _lp({-1: 1})],
        [LaurentPolynomial.zero(), _lp({1: -1})],
    ]


def bar_transpose_negate(m: list[list[LaurentPolynomial]]) -> list[list[LaurentPolynomial]]:
    """-(transpose with t -> 1/t); the star pairing of symmetrized blocks."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    return [[-(m[j][i].substitute_power(-1)) for j in range(rows)]
            for i in range(cols)]


def build_symmetrized(v0: list[list[LaurentPolynomial]],
                      u: list[list[LaurentPolynomial]],
                      w: list[list[LaurentPolynomial]],
                      j: int,
                      ustar: list[list[LaurentPolynomial]] | None = None,
                      ) -> list[list[LaurentPolynomial]]:
    """The (s + 2j)-dimensional block matrix with j twist blocks appended.

    Layout: v0 on top, then the 2x2 block w, then j-1 copies of the twist
    block A, joined by the fixed off-diagonal blocks B and B*.  ustar
    defaults to the star of u, which is what an actual symmetrized matrix
    carries, but the identity holds for any choice.
    """
    s = len(v0)
    if any(len(row) != s for row in v0):
        raise ValueError("v0 must be square")
    if j == 0:
        return [row[:] for row in v0]
    if len(u) != s or any(len(row) != 2 for row in u):
        raise ValueError("u must be s x 2")
    if len(w) != 2 or any(len(row) != 2 for row in w):
        raise ValueError("w must be 2 x 2")
    if ustar is None:
        ustar = bar_transpose_negate(u) if s else [[], []]
    if len(ustar) != 2 or any(len(row) != s for row in ustar):
        raise ValueError("ustar must be 2 x s")
    dim = s + 2 * j
    zero = LaurentPolynomial.zero()
    m = [[zero] * dim for _ in range(dim)]
    for r in range(s):
        for c in range(s):
            m[r][c] = v0[r][c]
    blocks = [w] + [_block_A() for _ in range(j - 1)]
    for t, blk in enumerate(blocks):
        off = s + 2 * t
        for r in range(2):
            for c in range(2):
                m[off + r][off + c] = blk[r][c]
    for r in range(s):
        for c in range(2):
            m[r][s + c] = u[r][c]
            m[s + c][r] = ustar[c][r]
    b, bstar = _block_B(), _block_Bstar()
    for t in range(j - 1):
        off = s + 2 * t
        for r in range(2):
            for c in range(2):
                m[off + r][off + 2 + c] = b[r][c]
                m[off + 2 + r][off + c] = bstar[r][c]
    return m


def block_identity_residual(v0: list[list[LaurentPolynomial]],
                            u: list[list[LaurentPolynomial]],
                            w: list[list[LaurentPolynomial]],
                            ustar: list[list[LaurentPolynomial]] | None = None,
                            ) -> LaurentPolynomial:
    """det V_0 + c1 det V_1 + c2 det V_2 + c3 det V_3 + det V_4; contract: 0."""
    total = LaurentPolynomial.zero()
    for j, coeff in enumerate(DELTA3_COEFFS):
        total = total + coeff * _laurent_det(build_symmetrized(v0, u, w, j, ustar))
    return total


def _tail_matrix(j: int, w: list[list[LaurentPolynomial]]) -> list[list[LaurentPolynomial]]:
    """The lower-right 2j x 2j minor of the block matrix, with w in the corner."""
    return build_symmetrized([], [], w, j)


def coefficient_table(j: int) -> dict[str, LaurentPolynomial]:
    """The expansion det(tail) = a0 + a1 det(w) + sum a_mn w_mn, for j in 2..4."""
    if j < 2:
        raise ValueError("the table starts at j = 2")
    zero = LaurentPolynomial.zero()
    one = LaurentPolynomial.one()

    def det_with(w11, w12, w21, w22):
        return _laurent_det(_tail_matrix(j, [[w11, w12], [w21, w22]]))

    a0 = det_with(zero, zero, zero, zero)
    a11 = det_with(one, zero, zero, zero) - a0
    a12 = det_with(zero, one, zero, zero) - a0
    a21 = det_with(zero, zero, one, zero) - a0
    a22 = det_with(zero, zero, zero, one) - a0
    a1 = det_with(one, zero, zero, one) - a0 - a11 - a22
    return {"a0": a0, "a1": a1, "a11": a11, "a12": a12, "a21": a21, "a22": a22}


def random_braid(rng: random.Random, strands: int, max_len: int,
                 min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    letters = tuple(rng.choice([1, -1]) * rng.randint(1, strands - 1)
                    for _ in range(length))
    return BraidWord(strands, letters)


def random_laurent(rng: random.Random) -> LaurentPolynomial:
    """An entry from {0, +-1, +-t, +-1/t}, the mix the block tests use."""
    return rng.choice([
        LaurentPolynomial.zero(),
        LaurentPolynomial.one(), -LaurentPolynomial.one(),
        _T(1), -_T(1), _T(-1), -_T(-1),
    ])
