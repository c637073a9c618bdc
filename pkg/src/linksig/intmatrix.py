"""Exact integer matrix kernels: determinants and congruence diagonalization.

Everything here is fraction-free.  Determinants use Bareiss elimination;
signatures come from symmetric (two-sided) elimination whose pivots are
ratios of leading principal minors, with hyperbolic 2x2 blocks split off
when the whole remaining diagonal vanishes.  The braid computations push
matrices towards 200x200 with large intermediate minors, so all arithmetic
stays in arbitrary-precision integers (gmpy2 is used when available, purely
as a faster integer type).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

try:  # pragma: no cover - availability depends on the environment
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    def _mpz(x: int) -> int:
        return x

Matrix = Sequence[Sequence[int]]


@dataclass(frozen=True)
class SymmetricIntMatrix:
    """A symmetric square integer matrix."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
        object.__setattr__(self, "entries", rows)

    @property
    def dimension(self) -> int:
        return len(self.entries)


def _as_rows(m: "Matrix | SymmetricIntMatrix") -> list[list[int]]:
    if isinstance(m, SymmetricIntMatrix):
        m = m.entries
    return [[_mpz(x) for x in row] for row in m]


def exact_determinant(m: "Matrix | SymmetricIntMatrix") -> int:
    """Determinant by fraction-free Bareiss elimination.

    The determinant of the 0x0 matrix is 1.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = _mpz(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            if aik == 0:
                # still rescale so every entry stays an exact minor
                for j in range(k + 1, n):
                    row_i[j] = (piv * row_i[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return int(sign * a[n - 1][n - 1])


def cofactor_determinant(m: Matrix) -> int:
    """Naive cofactor expansion; an independent oracle for small matrices."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    rest = m[1:]
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rest]
        term = m[0][j] * cofactor_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


def signature_nullity_of_symmetric(
    m: "Matrix | SymmetricIntMatrix",
) -> tuple[int, int]:
    """(signature, nullity) of a symmetric integer matrix over the reals.

    Pivoting policy: take nonzero diagonal pivots in index order; if the
    remaining diagonal is entirely zero, a nonzero row yields a hyperbolic
    2x2 block contributing (+1, -1) to the sign counts, and an all-zero row
    contributes to the nullity.
    """
    a = _as_rows(m)
    n = len(a)
    if not isinstance(m, SymmetricIntMatrix):
        for i in range(n):
            if len(a[i]) != n:
                raise ValueError("matrix is not square")
            for j in range(i):
                if a[i][j] != a[j][i]:
                    raise ValueError("matrix is not symmetric")
    pos = neg = null = 0
    # invariant: a == c * (remaining real quadratic form) for some rational
    # c with sign(c) == c_sign.  On the unbroken Bareiss chain c equals the
    # previous pivot and `div` is that pivot (classical Jacobi bookkeeping);
    # after a hyperbolic split div resets to 1, and any step whose division
    # fails an exactness check is redone without dividing, so the sign
    # algebra below stays exact no matter how the chain is interrupted.
    c_sign = 1
    div = _mpz(1)
    while a:
        k = len(a)
        # nonzero diagonal pivot, in index order
        d = next((i for i in range(k) if a[i][i] != 0), None)
        if d is not None:
            if d != 0:
                a[0], a[d] = a[d], a[0]
                for row in a:
                    row[0], row[d] = row[d], row[0]
            piv = a[0][0]
            if (piv > 0) == (c_sign > 0):
                pos += 1
            else:
                neg += 1
            nxt = []
            exact = True
            for i in range(1, k):
                new_row = []
                a_i, a_0 = a[i], a[0]
                ai0 = a_i[0]
                for j in range(1, k):
                    q, r = divmod(piv * a_i[j] - ai0 * a_0[j], div)
                    if r:
                        exact = False
                        break
                    new_row.append(q)
                if not exact:
                    break
                nxt.append(new_row)
            if exact:
                a = nxt
                c_sign = c_sign * (1 if piv > 0 else -1) * (1 if div > 0 else -1)
                div = piv
            else:
                # chain broken after a drop or split: redo without dividing
                a = [
                    [piv * a[i][j] - a[i][0] * a[0][j] for j in range(1, k)]
                    for i in range(1, k)
                ]
                c_sign = c_sign * (1 if piv > 0 else -1)
                div = _mpz(1)
            continue
        # diagonal is all zero: drop zero rows, else split a hyperbolic pair
        zero_row = next(
            (i for i in range(k) if all(a[i][j] == 0 for j in range(k))), None
        )
        if zero_row is not None:
            null += 1
            del a[zero_row]
            for row in a:
                del row[zero_row]
            continue
        i0 = next(i for i in range(k) if any(a[i][j] != 0 for j in range(k)))
        j0 = next(j for j in range(k) if a[i0][j] != 0)
        b = a[i0][j0]
        pos += 1
        neg += 1
        keep = [r for r in range(k) if r not in (i0, j0)]
        a = [
            [
                b * a[r][s] - a[r][i0] * a[j0][s] - a[r][j0] * a[i0][s]
                for s in keep
            ]
            for r in keep
        ]
        c_sign = c_sign * (1 if b > 0 else -1)
        div = _mpz(1)
    return pos - neg, null


def random_unimodular(dim: int, rng, max_entry: int = 3, steps: int = 12):
    """A random integer matrix of determinant +-1 (product of shears/swaps)."""
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = rng.randrange(dim), rng.randrange(dim)
        if i == j:
            continue
        c = rng.randint(-max_entry, max_entry)
        for col in range(dim):
            m[i][col] += c * m[j][col]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return m


def congruence(u: Matrix, m: Matrix) -> list[list[int]]:
    """u^T m u for integer matrices."""
    n = len(m)
    mu = [[sum(m[i][k] * u[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    return [[sum(u[k][i] * mu[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
