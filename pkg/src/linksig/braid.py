"""Braid words and the parametric two-jump / wide-jump braid families.

A word in the braid group B_m is a sequence of nonzero integers: letter +j
is the standard generator sigma_j, letter -j its inverse.  The families
``family_b`` and ``family_c`` insert twist blocks between half-twist powers;
they are the braids realized by deep-nest curve arrangements, one jump block
per jump, with the block's generator pair sitting next to the middle strand
(``family_b``) or one strand further out (``family_c``).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class BraidWord:
    """A braid word with an explicit strand count.

    >>> BraidWord(3, (1, 2, 1)).exponent_sum()
    3
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be >= 1")
        letters = tuple(int(x) for x in self.letters)
        for ell in letters:
            if ell == 0 or not 1 <= abs(ell) <= self.strands - 1:
                raise ValueError(
                    f"letter {ell} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> "BraidWord":
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def conjugate_by(self, w: "BraidWord") -> "BraidWord":
        """w^-1 * self * w."""
        return w.inverse() * self * w

    def exponent_sum(self) -> int:
        """Sum of letter signs, e(b)."""
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> list[int]:
        """Image of each strand (0-based) under the word, read left to right."""
        perm = list(range(self.strands))
        for ell in self.letters:
            j = abs(ell) - 1
            perm[j], perm[j + 1] = perm[j + 1], perm[j]
        return perm

    def closure_components(self) -> int:
        """Number of components of the braid closure (cycles of the permutation)."""
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if seen[start]:
                continue
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        return count

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent sigma_j sigma_j^-1 pairs until none remain."""
        stack: list[int] = []
        for ell in self.letters:
            if stack and stack[-1] == -ell:
                stack.pop()
            else:
                stack.append(ell)
        return BraidWord(self.strands, tuple(stack))

    def embed(self, strands: int) -> "BraidWord":
        """The same word viewed in a larger braid group (B_k inside B_m)."""
        if strands < self.strands:
            raise ValueError("cannot embed into fewer strands")
        return BraidWord(strands, self.letters)

    def to_text(self) -> str:
        return ",".join(str(x) for x in self.letters)

    @staticmethod
    def from_text(strands: int, text: str) -> "BraidWord":
        items = [p for p in text.replace(",", " ").split() if p]
        return BraidWord(strands, tuple(int(p) for p in items))


def exponent_sum(word: BraidWord) -> int:
    return word.exponent_sum()


def closure_components(word: BraidWord) -> int:
    return word.closure_components()


def compose(words: list[BraidWord], powers: list[int] | None = None,
            reduce: bool = False) -> BraidWord:
    """Concatenate words (with optional integer powers, negatives inverting).

    Free reduction is applied only when requested.
    """
    if not words:
        raise ValueError("compose requires at least one word")
    if powers is None:
        powers = [1] * len(words)
    if len(powers) != len(words):
        raise ValueError("powers must match words")
    strands = words[0].strands
    result = BraidWord(strands)
    for w, p in zip(words, powers):
        result = result * (w**p)
    return result.free_reduce() if reduce else result


# -- named subwords --------------------------------------------------------

def pi_word(k: int, l: int, strands: int) -> BraidWord:
    """sigma_k sigma_{k+1} ... sigma_l (descending when k > l)."""
    if k < l:
        letters = tuple(range(k, l + 1))
    elif k > l:
        letters = tuple(range(k, l - 1, -1))
    else:
        letters = (k,)
    return BraidWord(strands, letters)


def tau_word(k: int, l: int, strands: int) -> BraidWord:
    """The mixed block pi_{l,k+1}^-1 pi_{k,l-1} (resp. pi_{l,k-1}^-1 pi_{k,l+1})."""
    if k == l:
        return BraidWord(strands)
    if k < l:
        return pi_word(l, k + 1, strands).inverse() * pi_word(k, l - 1, strands)
    return pi_word(l, k - 1, strands).inverse() * pi_word(k, l + 1, strands)


def half_twist(k: int, strands: int | None = None) -> BraidWord:
    """The half twist Delta_k = pi_{1,k-1} pi_{1,k-2} ... pi_{1,2} sigma_1."""
    m = strands if strands is not None else k
    if k < 1 or k > m:
        raise ValueError("half twist index out of range")
    if k == 1:
        return BraidWord(m)
    word = BraidWord(m)
    for top in range(k - 1, 1, -1):
        word = word * pi_word(1, top, m)
    return word * BraidWord(m, (1,))


def delta_small(k: int, strands: int | None = None) -> BraidWord:
    """delta_k = sigma_1 sigma_2 ... sigma_{k-1}; Delta_k^2 == delta_k^k."""
    m = strands if strands is not None else k
    if k < 1 or k > m:
        raise ValueError("index out of range")
    return BraidWord(m, tuple(range(1, k)))


def named_word(kind: str, strands: int, *indices: int) -> BraidWord:
    """Dispatch for the named subwords: pi(k,l), tau(k,l), Delta(k), delta_small(k)."""
    if kind == "pi":
        return pi_word(indices[0], indices[1], strands)
    if kind == "tau":
        return tau_word(indices[0], indices[1], strands)
    if kind == "Delta":
        return half_twist(indices[0], strands)
    if kind == "delta_small":
        return delta_small(indices[0], strands)
    raise ValueError(f"unknown word kind {kind!r}")


# -- parametric families ----------------------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    """Parameters (n, k, J, alphas) of the jump-block braid families."""

    n: int
    k: int
    J: int
    alphas: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        if self.n < 1 or self.k < 1 or self.J < 1:
            raise ValueError("n, k, J must be positive")
        if (self.n - self.J) % 2 != 0:
            raise ValueError("the number of jumps J must have the parity of n")
        if len(self.alphas) != self.J:
            raise ValueError("alphas must have length J")
        if any(a < 0 for a in self.alphas):
            raise ValueError("alphas must be nonnegative")

    @property
    def strands(self) -> int:
        return 2 * self.k + 1

    @property
    def alpha_sum(self) -> int:
        return sum(self.alphas)


def _family_word(p: FamilyParams, lo: int, hi: int) -> BraidWord:
    m = p.strands
    if not (1 <= lo < hi <= m - 1):
        raise ValueError("family generator pair out of range")
    word = BraidWord(m)
    for j, alpha in enumerate(p.alphas, start=1):
        if j % 2 == 1:
            block = BraidWord(m, (-lo,) * alpha) * tau_word(lo, hi, m)
        else:
            block = BraidWord(m, (-hi,) * alpha) * tau_word(hi, lo, m)
        word = word * block
    return word * (half_twist(m, m) ** p.n)


def family_b(p: FamilyParams) -> BraidWord:
    """The narrow-pair family: jump blocks on the adjacent pair at the middle.

    The generator pair is (sigma_k, sigma_{k+1}), the two crossings touching
    the middle strand of B_{2k+1}; this is the unique labeling under which
    the single-jump word with no twists is conjugate to the half-twist power
    (sigma_k Delta^n = Delta^n sigma_{k+1} for odd n) and the closed-form
    determinant tables hold for every k >= 1.
    """
    return _family_word(p, p.k, p.k + 1)


def family_c(p: FamilyParams) -> BraidWord:
    """The wide-pair family: jump blocks on the distance-three pair (needs k >= 2).

    Generator pair (sigma_{k-1}, sigma_{k+2}), one strand further out on both
    sides than the narrow family.
    """
    if p.k < 2:
        raise ValueError("the wide-pair family requires k >= 2")
    return _family_word(p, p.k - 1, p.k + 2)
