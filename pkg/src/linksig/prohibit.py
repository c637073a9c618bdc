"""The prohibition engine for odd-degree real curves with a deep nest.

Everything here is finite arithmetic: the jump-count window coming from the
signature computation, Fiedler's alternation bound, and (for degree nine)
the complex-orientation balance equations.  Geometric side conditions from
auxiliary conic/line arguments are never decided here; callers assert them
as flags and the reports echo the assumptions.

Orientation conventions: the balance equations select one representative of
each pair of opposite complex orientations.  The flip-closed predicates are
exposed separately for invariance checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .closedforms import epsilons


@dataclass(frozen=True)
class CurveParams:
    """Combinatorial data of a deep-nest curve on the n-th ruled surface."""

    n: int
    k: int
    r: int = 0
    J: int | None = None
    lam: int = 0
    lam_odd: int = 0
    lam_even: int = 0

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1 or self.r < 0:
            raise ValueError("need n, k >= 1 and r >= 0")
        if min(self.lam, self.lam_odd, self.lam_even) < 0:
            raise ValueError("oval counts cannot be negative")

    @property
    def m(self) -> int:
        return 2 * self.k + 1

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.m * self.n - 2) // 2

    def hypothesis_violations(self) -> list[str]:
        out = []
        if self.J is not None:
            if not self.lam > self.J > 0:
                out.append("need lambda > J > 0")
            if (self.J - self.n) % 2:
                out.append("J must have the parity of n")
        if self.n % 4 == 0 and self.k != 1:
            out.append("n divisible by 4 requires k = 1")
        return out


@dataclass(frozen=True)
class Theorem11Result:
    ineq1: bool
    ineq2: bool
    slack1: int
    slack2: int

    def as_dict(self) -> dict:
        return {"ineq1": self.ineq1, "ineq2": self.ineq2,
                "slack1": self.slack1, "slack2": self.slack2}


def _bound_terms(p: CurveParams) -> tuple[int, int, int]:
    e = epsilons(p.n, p.k)
    extra = (p.k - 1) if p.n % 2 else 2 * (p.k - 1)
    return e.eps, e.eps_prime, extra


def theorem11_check(p: CurveParams) -> Theorem11Result:
    """The two jump-window inequalities at the given J."""
    bad = p.hypothesis_violations()
    if bad:
        raise ValueError("; ".join(bad))
    if p.J is None:
        raise ValueError("theorem11_check needs an explicit jump count J")
    eps, eps_prime, extra = _bound_terms(p)
    center = p.n * p.k * p.k - 3 * p.k + 1 - p.r - p.J
    rhs1 = p.r + 2 * p.lam_odd + extra
    rhs2 = p.r + 2 * p.lam_even + extra
    s1 = rhs1 - abs(center + eps)
    s2 = rhs2 - abs(center + eps_prime)
    return Theorem11Result(s1 >= 0, s2 >= 0, s1, s2)


def jump_window(p: CurveParams, which: str = "both") -> tuple[int, int]:
    """The interval of J allowed by the inequalities (ignoring parity).

    ``which`` selects the odd-count inequality, the even-count one, or their
    intersection.
    """
    eps, eps_prime, extra = _bound_terms(p)
    base = p.n * p.k * p.k - 3 * p.k + 1 - p.r
    lo1 = base + eps - (p.r + 2 * p.lam_odd + extra)
    hi1 = base + eps + (p.r + 2 * p.lam_odd + extra)
    lo2 = base + eps_prime - (p.r + 2 * p.lam_even + extra)
    hi2 = base + eps_prime + (p.r + 2 * p.lam_even + extra)
    if which == "odd":
        return lo1, hi1
    if which == "even":
        return lo2, hi2
    if which == "both":
        return max(lo1, lo2), min(hi1, hi2)
    raise ValueError("which must be 'odd', 'even', or 'both'")


def fiedler_bound(lam_plus: int, lam_minus: int, j: int) -> bool:
    """Alternation along the pencil: J >= |lambda_+ - lambda_-|."""
    return j >= abs(lam_plus - lam_minus)


def fiedler_min_jumps(lam_plus: int, lam_minus: int) -> int:
    return abs(lam_plus - lam_minus)


def pointed_alternation_min(scheme: "Degree9Scheme", sign_v: int) -> int:
    """The inner-pencil variant: J_v >= |d_alpha + d_beta + d_gamma - sign v|.

    Callers that assert a geometric jump count (separation arguments give
    J_v = 1) compare it against this bound to finish a prohibition.
    """
    if sign_v not in (1, -1):
        raise ValueError("sign_v must be +-1")
    return abs(scheme.d_alpha + scheme.d_beta + scheme.d_gamma - sign_v)


# ---------------------------------------------------------------------------
# degree nine


@dataclass(frozen=True)
class Degree9Scheme:
    """A complex scheme <J | a+ a- 1_e2 < b+ b- 1_e1 < g+ g- >>."""

    alpha_plus: int
    alpha_minus: int
    beta_plus: int
    beta_minus: int
    gamma_plus: int
    gamma_minus: int
    eps1: int
    eps2: int

    def __post_init__(self) -> None:
        counts = (self.alpha_plus, self.alpha_minus, self.beta_plus,
                  self.beta_minus, self.gamma_plus, self.gamma_minus)
        if any(c < 0 for c in counts):
            raise ValueError("oval counts cannot be negative")
        if self.eps1 not in (1, -1) or self.eps2 not in (1, -1):
            raise ValueError("the nest signs must be +-1")

    @property
    def d_alpha(self) -> int:
        return self.alpha_plus - self.alpha_minus

    @property
    def d_beta(self) -> int:
        return self.beta_plus - self.beta_minus

    @property
    def d_gamma(self) -> int:
        return self.gamma_plus - self.gamma_minus

    @property
    def alpha(self) -> int:
        return self.alpha_plus + self.alpha_minus

    @property
    def beta(self) -> int:
        return self.beta_plus + self.beta_minus

    @property
    def gamma(self) -> int:
        return self.gamma_plus + self.gamma_minus

    def flipped(self) -> "Degree9Scheme":
        return Degree9Scheme(self.alpha_minus, self.alpha_plus,
                             self.beta_minus, self.beta_plus,
                             self.gamma_minus, self.gamma_plus,
                             -self.eps1, -self.eps2)

    def notation(self) -> str:
        return (f"<J | {self.alpha_plus}+ {self.alpha_minus}- "
                f"1{'+' if self.eps2 > 0 else '-'}< {self.beta_plus}+ "
                f"{self.beta_minus}- 1{'+' if self.eps1 > 0 else '-'}< "
                f"{self.gamma_plus}+ {self.gamma_minus}- >>")

    def as_dict(self) -> dict:
        return {
            "alpha_plus": self.alpha_plus, "alpha_minus": self.alpha_minus,
            "beta_plus": self.beta_plus, "beta_minus": self.beta_minus,
            "gamma_plus": self.gamma_plus, "gamma_minus": self.gamma_minus,
            "eps1": self.eps1, "eps2": self.eps2,
        }


def orientation_balance(s: Degree9Scheme) -> tuple[int, int]:
    """LHS values of the two complex-orientation equations."""
    da, db, dg = s.d_alpha, s.d_beta, s.d_gamma
    e1, e2 = s.eps1, s.eps2
    first = da + e2 + (1 - 2 * e2) * (db + e1) + (1 - 2 * e1 - 2 * e2) * dg
    second = (e2 + 1) * (db + dg) + (e1 + 1) * dg
    return first, second


def deg9_formulas(s: Degree9Scheme) -> dict:
    """The three degree-nine sieves for one oriented scheme.

    rm7: the total-count balance equals 8.  orient8: the nest balance equals
    -(eps1 + eps2 + 2)^2 / 2 (the sign that reproduces the published
    admissible families; see the notes shipped with the package tests).
    ineq10: the jump window meets the alternation bound for each sign of
    innermost oval actually present.
    """
    first, second = orientation_balance(s)
    rm7 = first == 8
    orient8 = 2 * second == -((s.eps1 + s.eps2 + 2) ** 2)
    total = s.d_alpha + s.d_beta + s.d_gamma
    cap = 9 + 2 * s.beta
    ineq10 = True
    if s.gamma_plus >= 1 and abs(total - 1) > cap:
        ineq10 = False
    if s.gamma_minus >= 1 and abs(total + 1) > cap:
        ineq10 = False
    return {"rm7": rm7, "orient8": orient8, "ineq10": ineq10}


def deg9_formulas_up_to_flip(s: Degree9Scheme) -> dict:
    """The same sieves, insensitive to the global orientation choice."""
    a = deg9_formulas(s)
    b = deg9_formulas(s.flipped())
    return {
        "rm7": a["rm7"] or b["rm7"],
        "orient8": a["orient8"] or b["orient8"],
        "ineq10": a["ineq10"],  # already flip-invariant
    }


def lemma23_consistent(s: Degree9Scheme) -> bool:
    """|d_gamma| > 1 with alpha > 0 forces beta > 0."""
    if abs(s.d_gamma) > 1 and s.alpha > 0 and s.beta == 0:
        return False
    return True


def deg9_enumerate(alpha: int, beta: int, gamma: int,
                   lemma23_applicable: bool = False) -> list[Degree9Scheme]:
    """All oriented schemes surviving the degree-nine sieves.

    One representative per orientation pair is returned (the balance
    equations fix the global orientation).
    """
    if gamma < 1:
        raise ValueError("the inner nest must contain at least one oval")
    out = []
    for ap in range(alpha + 1):
        for bp in range(beta + 1):
            for gp in range(gamma + 1):
                for e1, e2 in product((1, -1), repeat=2):
                    s = Degree9Scheme(ap, alpha - ap, bp, beta - bp,
                                      gp, gamma - gp, e1, e2)
                    checks = deg9_formulas(s)
                    if not all(checks.values()):
                        continue
                    if lemma23_applicable and not lemma23_consistent(s):
                        continue
                    out.append(s)
    return sorted(out, key=lambda s: (s.alpha_plus, s.beta_plus,
                                      s.gamma_plus, s.eps1, s.eps2))


# ---------------------------------------------------------------------------
# verdicts


STRICTNESS_NOTE = ("the jump cap uses the non-strict window; one derivation "
                   "states a strict version, which never changes a verdict")


@dataclass
class Report:
    verdict: str
    violated: list[str] = field(default_factory=list)
    assumptions: list[str] = field(default_factory=list)
    schemes: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "violated": sorted(self.violated),
            "assumptions": sorted(self.assumptions),
            "schemes": self.schemes,
            "notes": self.notes,
            "details": self.details,
        }


def verdict_curve(p: CurveParams, lam_plus: int | None = None,
                  lam_minus: int | None = None) -> Report:
    """Judge a deep-nest curve bundle: jump window vs alternation bound."""
    bad = p.hypothesis_violations()
    if bad:
        return Report(verdict="hypothesis not met", violated=bad,
                      notes=[STRICTNESS_NOTE])
    lo, hi = jump_window(p)
    details: dict = {"jump_window": [lo, hi]}
    violated = []
    if p.J is not None:
        res = theorem11_check(p)
        details["theorem11"] = res.as_dict()
        if not (res.ineq1 and res.ineq2):
            violated.append("jump window")
        if lam_plus is not None and lam_minus is not None:
            if not fiedler_bound(lam_plus, lam_minus, p.J):
                violated.append("alternation bound")
    elif lam_plus is not None and lam_minus is not None:
        need = fiedler_min_jumps(lam_plus, lam_minus)
        details["alternation_min_jumps"] = need
        feasible = [j for j in range(max(1, lo), hi + 1)
                    if (j - p.n) % 2 == 0 and j < p.lam and j >= need]
        details["feasible_jumps"] = feasible
        if not feasible:
            violated.append("alternation bound vs jump window")
    return Report(
        verdict="prohibited" if violated else "admissible",
        violated=violated,
        notes=[STRICTNESS_NOTE],
        details=details,
    )


def verdict_degree9(alpha: int, beta: int, gamma: int,
                    m_curve: bool = False,
                    assume_lemma23: bool = False) -> Report:
    """Judge a degree-nine isotopy type through the complex-scheme sieve."""
    assumptions = []
    if assume_lemma23:
        assumptions.append("separation lemma applies (|d_gamma|>1, alpha>0 => beta>0)")
    if m_curve:
        assumptions.append("maximal curve (oval count 28)")
        if alpha + beta + gamma + 2 != 28:
            return Report(
                verdict="hypothesis not met",
                violated=["maximal-curve oval count"],
                assumptions=assumptions,
            )
    schemes = deg9_enumerate(alpha, beta, gamma,
                             lemma23_applicable=assume_lemma23)
    if schemes:
        return Report(verdict="admissible", assumptions=assumptions,
                      schemes=[s.as_dict() | {"notation": s.notation()}
                               for s in schemes])
    return Report(verdict="prohibited",
                  violated=["complex-orientation sieve leaves no scheme"],
                  assumptions=assumptions)
