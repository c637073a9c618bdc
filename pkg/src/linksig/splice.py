"""Splice diagrams of iterated torus links.

A splice diagram is a decorated tree: some leaves are arrowheads (the link
components, each with a sign), and every node (vertex of valence >= 3)
carries an integer weight on each incident edge.  Links built from the
unknot by repeated cabling live here, together with the two product
formulas for their potential functions: the one-variable formula over the
vertex multiplicities m_i, and the multivariable product over the
linking-weight vectors with its formal-cancellation convention.

Cabling with d new components of type (dp, dq) replaces an arrowhead by a
node carrying weight q on the edge toward the rest of the diagram, weight p
on the core edge (the old arrowhead if the core remains, a fresh plain leaf
if it is removed), and weight 1 on each of the d new arrowhead edges.  This
placement is forced by the linking numbers lk(new, core) = q,
lk(new, new') = pq, lk(new, other) = p*lk(core, other).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .gaussian import GaussianInteger
from .laurent import LaurentPolynomial


class ENFormulaInapplicable(ValueError):
    """The one-variable product formula has a vanishing denominator term."""


# ---------------------------------------------------------------------------
# the diagram


class SpliceDiagram:
    """An immutable decorated tree; see the module docstring.

    Vertices are integer ids.  ``kind`` is "arrowhead" or "plain"; weights
    exist exactly on (vertex, edge) pairs where the vertex is a node.
    """

    def __init__(self, vertices: dict[int, dict], edges: list[tuple]):
        # edges: (a, b, weight_at_a | None, weight_at_b | None)
        self._vertices = {int(v): dict(data) for v, data in vertices.items()}
        self._adj: dict[int, dict[int, int | None]] = {v: {} for v in self._vertices}
        for a, b, wa, wb in edges:
            if a == b or b in self._adj[a]:
                raise ValueError("edges must join distinct vertices, once")
            self._adj[a][b] = None if wa is None else int(wa)
            self._adj[b][a] = None if wb is None else int(wb)
        self._validate()

    # -- structure ----------------------------------------------------

    def _validate(self) -> None:
        verts = self._vertices
        if not verts:
            raise ValueError("empty diagram")
        # connected tree
        edge_count = sum(len(nbrs) for nbrs in self._adj.values()) // 2
        if edge_count != len(verts) - 1:
            raise ValueError("diagram is not a tree")
        seen = set()
        stack = [next(iter(verts))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(self._adj[v])
        if len(seen) != len(verts):
            raise ValueError("diagram is not connected")
        for v, data in verts.items():
            val = len(self._adj[v])
            if data["kind"] == "arrowhead":
                if val != 1:
                    raise ValueError(f"arrowhead {v} must have valence 1")
                if data.get("sign") not in (1, -1):
                    raise ValueError(f"arrowhead {v} needs a sign +-1")
            elif val == 2:
                raise ValueError(f"vertex {v} has forbidden valence 2")
            is_node = val >= 3
            for u, w in self._adj[v].items():
                if is_node and w is None:
                    raise ValueError(f"node {v} lacks a weight on edge to {u}")
                if not is_node and w is not None:
                    raise ValueError(f"non-node {v} carries a weight")

    def vertex_ids(self) -> list[int]:
        return sorted(self._vertices)

    def arrowheads(self) -> list[int]:
        return sorted(v for v, d in self._vertices.items()
                      if d["kind"] == "arrowhead")

    def is_arrowhead(self, v: int) -> bool:
        return self._vertices[v]["kind"] == "arrowhead"

    def sign(self, v: int) -> int:
        if not self.is_arrowhead(v):
            raise ValueError(f"vertex {v} is not an arrowhead")
        return self._vertices[v]["sign"]

    def valence(self, v: int) -> int:
        return len(self._adj[v])

    def weight(self, v: int, u: int) -> int | None:
        return self._adj[v][u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def _fresh_id(self) -> int:
        return max(self._vertices) + 1

    def _as_lists(self) -> tuple[dict[int, dict], list[tuple]]:
        verts = {v: dict(d) for v, d in self._vertices.items()}
        edges = []
        for a in sorted(self._adj):
            for b, wa in self._adj[a].items():
                if a < b:
                    edges.append((a, b, wa, self._adj[b][a]))
        return verts, edges

    # -- constructors ---------------------------------------------------

    @staticmethod
    def unknot() -> "SpliceDiagram":
        """One plain leaf joined to one positive arrowhead."""
        return SpliceDiagram(
            {0: {"kind": "plain"}, 1: {"kind": "arrowhead", "sign": 1}},
            [(0, 1, None, None)],
        )

    def flip_arrow(self, v: int) -> "SpliceDiagram":
        """Reverse the orientation of one component (its sign only)."""
        verts, edges = self._as_lists()
        if verts[v]["kind"] != "arrowhead":
            raise ValueError(f"vertex {v} is not an arrowhead")
        verts[v]["sign"] = -verts[v]["sign"]
        return SpliceDiagram(verts, edges)

    def cable(self, arrowhead: int, d: int, p: int, q: int,
              core: str = "removed") -> "SpliceDiagram":
        """(dp, dq)-cabling along the component of the given arrowhead.

        New vertex ids are allocated deterministically: the node first, then
        the core leaf when the core is removed, then the d new arrowheads in
        order.
        """
        if core not in ("removed", "remained"):
            raise ValueError("core must be 'removed' or 'remained'")
        if d < 1:
            raise ValueError("d must be a positive integer")
        if gcd(p, q) != 1:
            raise ValueError(f"(p, q) = ({p}, {q}) must be coprime")
        if arrowhead not in self._vertices or not self.is_arrowhead(arrowhead):
            raise ValueError(f"vertex {arrowhead} is not an arrowhead")

        verts, edges = self._as_lists()
        (u,) = self._adj[arrowhead]
        node = self._fresh_id()
        edges = [e for e in edges if arrowhead not in (e[0], e[1])]
        # weight toward the companion; the neighbor keeps its own weight
        edges.append((u, node, self._adj[u][arrowhead], q))
        verts[node] = {"kind": "plain"}
        next_id = node + 1
        if core == "removed":
            del verts[arrowhead]
            leaf = next_id
            next_id += 1
            verts[leaf] = {"kind": "plain"}
            edges.append((node, leaf, p, None))
        else:
            edges.append((node, arrowhead, p, None))
        for _ in range(d):
            a = next_id
            next_id += 1
            verts[a] = {"kind": "arrowhead", "sign": 1}
            edges.append((node, a, 1, None))
        return SpliceDiagram(verts, edges)

    # -- linking calculus ------------------------------------------------

    def _path(self, i: int, j: int) -> list[int]:
        parent: dict[int, int | None] = {i: None}
        stack = [i]
        while stack:
            v = stack.pop()
            if v == j:
                break
            for u in self._adj[v]:
                if u not in parent:
                    parent[u] = v
                    stack.append(u)
        path = [j]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return path[::-1]

    def linking_ell(self, i: int, j: int) -> int:
        """Product of node weights on off-path edges along the i-j path."""
        if i == j:
            raise ValueError("linking_ell requires two distinct vertices")
        path = self._path(i, j)
        prod = 1
        for pos, v in enumerate(path):
            if len(self._adj[v]) < 3:
                continue
            nbrs_on = set()
            if pos > 0:
                nbrs_on.add(path[pos - 1])
            if pos + 1 < len(path):
                nbrs_on.add(path[pos + 1])
            for u, w in self._adj[v].items():
                if u not in nbrs_on:
                    prod *= w
        return prod

    def m_values(self) -> dict[int, int]:
        """m_i = sum over arrowheads j of linking_ell(i, j) * sign(j)."""
        arrows = self.arrowheads()
        out = {}
        for v in self.vertex_ids():
            if self.is_arrowhead(v):
                continue
            out[v] = sum(self.linking_ell(v, a) * self.sign(a) for a in arrows)
        return out

    def m_values_and_fiberability(self) -> tuple[dict[int, int], bool]:
        m = self.m_values()
        return m, all(x != 0 for x in m.values())

    def omega_via_EN(self) -> LaurentPolynomial:
        """The one-variable potential from the vertex multiplicities.

        Requires m_i != 0 at every valence-1 plain vertex (otherwise a factor
        of the denominator vanishes and the multivariable route must be
        used); a vanishing m_i at a node makes the whole product zero.
        """
        m = self.m_values()
        for v, mv in m.items():
            if self.valence(v) == 1 and mv == 0:
                raise ENFormulaInapplicable(
                    f"m = 0 at leaf {v}; use nabla_multivariable")
        sign = 1
        for a in self.arrowheads():
            sign *= self.sign(a)
        num = LaurentPolynomial.t_binomial(1)
        dens: list[LaurentPolynomial] = []
        for v, mv in sorted(m.items()):
            e = self.valence(v) - 2
            if e == 0:
                continue
            if mv == 0:
                return LaurentPolynomial.zero()
            binom = LaurentPolynomial.t_binomial(mv)
            if e > 0:
                num = num * binom**e
            else:
                dens.extend([binom] * (-e))
        for den in dens:
            num = num.exact_div(den)
        return num * sign if sign == 1 else -num

    def nabla_multivariable(self) -> "FactorProduct":
        """The multivariable potential as a formal product of binomial factors.

        Variable j corresponds to the j-th arrowhead in sorted-id order.
        """
        arrows = self.arrowheads()
        sign = 1
        for a in arrows:
            sign *= self.sign(a)
        factors = []
        for v in self.vertex_ids():
            if self.is_arrowhead(v):
                continue
            e = self.valence(v) - 2
            if e == 0:
                continue
            vec = tuple(self.linking_ell(v, a) * self.sign(a) for a in arrows)
            factors.append((vec, e))
        return FactorProduct.build(len(arrows), sign, factors)

    def link_determinant(self) -> GaussianInteger:
        """Potential at t = i, via the one-variable formula when it applies."""
        try:
            return self.omega_via_EN().eval_at_i()
        except ENFormulaInapplicable:
            return self.nabla_multivariable().omega().eval_at_i()

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        verts = [
            {"id": v, "kind": d["kind"], **({"sign": d["sign"]}
                                            if d["kind"] == "arrowhead" else {})}
            for v, d in sorted(self._vertices.items())
        ]
        edges = []
        for a, b, wa, wb in self._as_lists()[1]:
            e: dict = {"a": a, "b": b}
            if wa is not None:
                e["weight_at_a"] = wa
            if wb is not None:
                e["weight_at_b"] = wb
            edges.append(e)
        return {"vertices": verts, "edges": edges}

    @staticmethod
    def from_json(obj: dict) -> "SpliceDiagram":
        verts = {
            int(v["id"]): {"kind": v["kind"], **({"sign": int(v["sign"])}
                                                 if v["kind"] == "arrowhead" else {})}
            for v in obj["vertices"]
        }
        edges = [
            (int(e["a"]), int(e["b"]), e.get("weight_at_a"), e.get("weight_at_b"))
            for e in obj["edges"]
        ]
        return SpliceDiagram(verts, edges)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# formal factor products (the multivariable potential)


@dataclass(frozen=True)
class FactorProduct:
    """sign * prod (x^v - x^-v)^power over exponent vectors v.

    Vectors are canonicalized so the first nonzero component is positive
    (each flip of an odd power negates the sign).  Zero vectors are the
    formally-cancelled terms: equal powers in numerator and denominator
    cancel as factor objects; a surviving positive power makes the whole
    product zero (``sign == 0``), a surviving negative power is an error.
    """

    nvars: int
    sign: int
    factors: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def build(nvars: int, sign: int,
              raw: list[tuple[tuple[int, ...], int]]) -> "FactorProduct":
        merged: dict[tuple[int, ...], int] = {}
        for vec, power in raw:
            if len(vec) != nvars:
                raise ValueError("exponent vector of wrong length")
            if power == 0:
                continue
            first = next((c for c in vec if c != 0), 0)
            if first < 0:
                vec = tuple(-c for c in vec)
                if power % 2:
                    sign = -sign
            merged[vec] = merged.get(vec, 0) + power
        zero = tuple([0] * nvars)
        net_zero = merged.pop(zero, 0)
        if net_zero < 0:
            raise ZeroDivisionError(
                "formal cancellation leaves a vanishing denominator factor")
        if net_zero > 0:
            return FactorProduct(nvars, 0, ())
        factors = tuple(sorted((v, p) for v, p in merged.items() if p != 0))
        return FactorProduct(nvars, sign, factors)

    def is_zero(self) -> bool:
        return self.sign == 0

    def omega(self) -> LaurentPolynomial:
        """(t - t^-1) * (the product specialized at t_1 = ... = t_n = t)."""
        if self.sign == 0:
            return LaurentPolynomial.zero()
        specialized_ok = all(sum(v) != 0 or p > 0 for v, p in self.factors)
        if specialized_ok:
            num = LaurentPolynomial.t_binomial(1)
            dens = []
            for vec, power in self.factors:
                s = sum(vec)
                if s == 0:
                    return LaurentPolynomial.zero()
                if power > 0:
                    num = num * LaurentPolynomial.t_binomial(s)**power
                else:
                    dens.extend([LaurentPolynomial.t_binomial(s)] * (-power))
            for den in dens:
                num = num.exact_div(den)
            return num * self.sign
        # a denominator factor vanishes on the diagonal: expand first
        poly = self.expand()
        collapsed: dict[int, int] = {}
        for exps, c in poly.items():
            e = sum(exps)
            collapsed[e] = collapsed.get(e, 0) + c
        return (LaurentPolynomial(collapsed) * LaurentPolynomial.t_binomial(1)
                * self.sign)

    def expand(self) -> dict[tuple[int, ...], int]:
        """The product as an honest multivariable Laurent polynomial.

        Raises if a denominator factor does not divide exactly (that only
        happens for inputs that are not potential functions of links).
        """
        if self.sign == 0:
            return {}
        num: dict[tuple[int, ...], int] = {tuple([0] * self.nvars): 1}
        dens: list[tuple[int, ...]] = []
        for vec, power in self.factors:
            if power > 0:
                for _ in range(power):
                    num = _mul_binomial(num, vec)
            else:
                dens.extend([vec] * (-power))
        for vec in dens:
            num = _div_binomial(num, vec)
        return num

    def det(self) -> GaussianInteger:
        return self.omega().eval_at_i()

    def describe(self) -> list[dict]:
        """JSON-able listing of the factors."""
        return [{"exponents": list(v), "power": p} for v, p in self.factors]


def _mul_binomial(poly: dict, vec: tuple[int, ...]) -> dict:
    out: dict[tuple[int, ...], int] = {}
    neg = tuple(-c for c in vec)
    for exps, c in poly.items():
        for shift, s in ((vec, c), (neg, -c)):
            key = tuple(a + b for a, b in zip(exps, shift))
            v = out.get(key, 0) + s
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _div_binomial(poly: dict, vec: tuple[int, ...]) -> dict:
    """Exact division by x^vec - x^-vec under lexicographic leading terms."""
    neg = tuple(-c for c in vec)
    lead, trail, lead_c = (vec, neg, 1) if vec > neg else (neg, vec, -1)
    rem = dict(poly)
    quot: dict[tuple[int, ...], int] = {}
    steps = 0
    while rem:
        steps += 1
        if steps > 100000:
            raise ArithmeticError("binomial division does not terminate")
        top = max(rem)
        c = rem.pop(top)
        qe = tuple(a - b for a, b in zip(top, lead))
        qc = c * lead_c
        quot[qe] = quot.get(qe, 0) + qc
        key = tuple(a + b for a, b in zip(qe, trail))
        v = rem.get(key, 0) + qc * lead_c
        if v:
            rem[key] = v
        else:
            rem.pop(key, None)
        if rem and max(rem) >= top:
            raise ArithmeticError("binomial division is not exact")
    return quot


# ---------------------------------------------------------------------------
# named diagrams


def torus_delta_diagram(n: int, k: int) -> SpliceDiagram:
    """The closure of the n-th half-twist power in B_{2k+1} as a splice diagram."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    d = SpliceDiagram.unknot()
    core = 1
    if n % 2 == 1:
        for _ in range(k):
            d = d.cable(core, 1, 2, n, core="remained")
    else:
        d = d.cable(core, 2 * k + 1, 1, n // 2, core="removed")
    return d


def _central_pair(n: int, k: int, J: int, doubles: int) -> SpliceDiagram:
    if (n - J) % 2 != 0:
        raise ValueError("J must have the parity of n")
    d = SpliceDiagram.unknot()
    core = 1
    if n % 2 == 1:
        for _ in range(doubles):
            d = d.cable(core, 1, 2, n, core="remained")
    elif doubles:
        d = d.cable(core, 2 * doubles, 1, n // 2, core="remained")
    inner_arrow = d._fresh_id() + 1
    d = d.cable(core, 1, 1, (n - J) // 2, core="remained")
    assert d.is_arrowhead(inner_arrow)
    outer_arrow = d._fresh_id() + 1
    d = d.cable(inner_arrow, 1, 1, (n + J) // 2, core="remained")
    assert d.is_arrowhead(outer_arrow)
    return d


def b_family_diagram(n: int, k: int, J: int) -> SpliceDiagram:
    """Diagram of the closed narrow-pair braid with all twist counts 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _central_pair(n, k, J, k - 1)


def c_family_diagram(n: int, k: int, J: int) -> SpliceDiagram:
    """Diagram of the closed wide-pair braid with all twist counts 1."""
    if k < 2:
        raise ValueError("the wide family requires k >= 2")
    d = _central_pair(n, k, J, k - 2)
    # the strand between the jump pair and the outer cables doubles up
    inner_arrow = d.arrowheads()[-2]
    if n % 2 == 1:
        d = d.cable(inner_arrow, 1, 2, n, core="remained")
    else:
        d = d.cable(inner_arrow, 2, 1, n // 2, core="remained")
    return d


def ring_family_diagram(q: int, ps: list[int]) -> SpliceDiagram:
    """A two-stranded cable threaded through rings with winding numbers ps.

    Ring j is a component linking the core q-cable strand pair 2*ps[j]
    times; the diagram's distinguishing feature is the valence-(n+1) vertex
    with edge weights (0, 1, ..., 1).
    """
    n = len(ps)
    if n < 1:
        raise ValueError("at least one ring is required")
    if any(p == 0 for p in ps):
        raise ValueError("zero winding splits the link; its potential is 0")
    verts: dict[int, dict] = {}
    edges: list[tuple] = []
    vid = 0

    def add(kind: str, sign: int | None = None) -> int:
        nonlocal vid
        verts[vid] = {"kind": kind, **({"sign": sign} if sign is not None else {})}
        vid += 1
        return vid - 1

    v = add("plain")  # cable node
    cable_leaf = add("plain")
    if q % 2:
        edges.append((v, cable_leaf, 2, None))
        edges.append((v, add("arrowhead", 1), 1, None))
        v_weight_out = q
    else:
        edges.append((v, cable_leaf, 1, None))
        edges.append((v, add("arrowhead", 1), 1, None))
        edges.append((v, add("arrowhead", 1), 1, None))
        v_weight_out = q // 2
    rings = []
    for p in ps:
        w = add("plain")
        leaf = add("plain")
        arrow = add("arrowhead", 1)
        edges.append((w, leaf, p, None))
        edges.append((w, arrow, 1, None))
        rings.append(w)
    if n == 1:
        edges.append((v, rings[0], v_weight_out, 1))
    else:
        u = add("plain")
        edges.append((u, v, 0, v_weight_out))
        for w in rings:
            edges.append((u, w, 1, 1))
    return SpliceDiagram(verts, edges)


def ring_family_det_skein(q: int, ps: list[int]) -> GaussianInteger:
    """Determinant of the ring family by the crossing-change average.

    Replacing q by q+-1 gives two diagrams whose one-variable formula always
    applies; the determinant of the original is determined by the relation
    det L_+ - det L_- = 2i det L_0 applied at the modified crossing.
    """
    if any(p == 0 for p in ps):
        return GaussianInteger(0, 0)
    plus = ring_family_diagram(q + 1, ps).link_determinant()
    minus = ring_family_diagram(q - 1, ps).link_determinant()
    diff = plus - minus
    # divide by 2i exactly
    num = diff * GaussianInteger(0, -1)
    if num.re % 2 or num.im % 2:
        raise ArithmeticError("crossing-change relation gave a non-integral value")
    return GaussianInteger(num.re // 2, num.im // 2)


def reversed_parallel_pair_diagram(p: int) -> SpliceDiagram:
    """Two parallel unknotted components with opposite orientations, framing p."""
    verts = {
        0: {"kind": "plain"},
        1: {"kind": "arrowhead", "sign": -1},
        2: {"kind": "arrowhead", "sign": 1},
        3: {"kind": "plain"},
        4: {"kind": "plain"},
    }
    edges = [
        (0, 1, 1, None),
        (0, 2, 1, None),
        (0, 3, 1, None),
        (0, 4, p, None),
    ]
    return SpliceDiagram(verts, edges)


def build_named(kind: str, **params) -> SpliceDiagram:
    """Dispatch for the named diagram families used across the test suite."""
    if kind == "torus_delta":
        return torus_delta_diagram(params["n"], params["k"])
    if kind == "b_family":
        return b_family_diagram(params["n"], params["k"], params["J"])
    if kind == "c_family":
        return c_family_diagram(params["n"], params["k"], params["J"])
    if kind == "lemma45":
        return ring_family_diagram(params["q"], params["ps"])
    raise ValueError(f"unknown named diagram {kind!r}")
