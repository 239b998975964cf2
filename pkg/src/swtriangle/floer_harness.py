"""Integer graded chain complexes, chain maps and the surgery exact triangle.

The three complexes of the triangle are modeled as

    C_Y = C1 ⊕ C0,   ∂_Y = [[∂1, D], [0, ∂0]],

where D counts the mixed flow lines from the wall class to the slanted class.
w1 is the inclusion of C1, w0 the projection to C0 and the connecting map is
D itself.  D anticommutes with the differentials, so it is a chain map of
degree -1 under the Koszul rule ``f ∂ = (-1)^shift ∂ f`` used throughout.

Degrees are integers; a modulus of 0 means Z-graded, an even m > 0 means
degrees are read mod m.
"""

from __future__ import annotations

import enum
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import _linalg as la
from .errors import GradingError, IntegrityError, PreconditionError

__all__ = [
    "GradedComplex",
    "ChainMap",
    "SpincFamily",
    "FamilyShape",
    "HomologyGroup",
    "ExactnessReport",
    "TriangleData",
    "enumerate_spinc",
    "grading_modulus",
    "lift_grading",
    "wall_crossing_shift",
    "homology",
    "rational_betti",
    "direct_sum",
    "exact_triangle_check",
    "snake_map",
    "random_triangle_data",
    "integer_left_inverse",
    "integer_right_inverse",
]


def _deg_eq(a: int, b: int, modulus: int) -> bool:
    return a == b if modulus == 0 else (a - b) % modulus == 0


def _norm(d: int, modulus: int) -> int:
    return d if modulus == 0 else d % modulus


@dataclass(frozen=True)
class GradedComplex:
    """Generators with degrees and an integer differential.

    ``d[i][j]`` is the coefficient of generator i in ∂(generator j).
    """

    ids: tuple[str, ...]
    degrees: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]
    modulus: int = 0

    def __post_init__(self):
        n = len(self.ids)
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        object.__setattr__(self, "d", tuple(tuple(int(x) for x in row) for row in self.d))
        if len(set(self.ids)) != n:
            raise IntegrityError("duplicate generator ids")
        if len(self.degrees) != n or len(self.d) != n or any(len(r) != n for r in self.d):
            raise IntegrityError(f"differential must be {n} x {n}")
        if self.modulus < 0 or self.modulus % 2:
            raise GradingError("grading modulus must be 0 or a positive even integer")
        for i in range(n):
            for j in range(n):
                if self.d[i][j] and not _deg_eq(self.degrees[j] - 1, self.degrees[i], self.modulus):
                    raise GradingError(f"∂ does not drop degree by one from {self.ids[j]} to {self.ids[i]}")
        dd = la.matmul(self.d, self.d, n)
        if not la.is_zero(dd):
            i, j = next((i, j) for i in range(n) for j in range(n) if dd[i][j])
            raise IntegrityError(f"∂∂ ≠ 0: coefficient {dd[i][j]} of {self.ids[i]} in ∂∂({self.ids[j]})")

    @property
    def dim(self) -> int:
        return len(self.ids)

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.d]

    def degree_classes(self) -> list[int]:
        return sorted({_norm(x, self.modulus) for x in self.degrees})

    def indices(self, deg: int) -> list[int]:
        return [i for i, x in enumerate(self.degrees) if _deg_eq(x, deg, self.modulus)]

    def block(self, deg: int) -> list[list[int]]:
        """∂ restricted to degree ``deg`` → ``deg - 1``."""
        src, dst = self.indices(deg), self.indices(deg - 1)
        return [[self.d[i][j] for j in src] for i in dst]

    @classmethod
    def build(cls, gens: Sequence[tuple[str, int]], d: Sequence[Sequence[int]] | None = None, modulus: int = 0) -> "GradedComplex":
        ids = [g for g, _ in gens]
        degs = [x for _, x in gens]
        if d is None:
            d = la.zeros(len(ids), len(ids))
        return cls(tuple(ids), tuple(degs), tuple(tuple(r) for r in d), modulus)


@dataclass(frozen=True)
class ChainMap:
    source: GradedComplex
    target: GradedComplex
    matrix: tuple[tuple[int, ...], ...]
    degree_shift: int = 0

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.target.dim or any(len(r) != self.source.dim for r in m):
            raise IntegrityError(f"map matrix must be {self.target.dim} x {self.source.dim}")
        mod = self.target.modulus
        for i in range(self.target.dim):
            for j in range(self.source.dim):
                if m[i][j] and not _deg_eq(self.source.degrees[j] + self.degree_shift, self.target.degrees[i], mod):
                    raise GradingError(f"map entry {self.source.ids[j]} → {self.target.ids[i]} has the wrong degree")
        lhs = la.matmul(m, self.source.d, self.source.dim)
        rhs = la.matmul(self.target.d, m, self.target.dim)
        sgn = -1 if self.degree_shift % 2 else 1
        bad = [(i, j) for i in range(self.target.dim) for j in range(self.source.dim) if lhs[i][j] != sgn * rhs[i][j]]
        if bad:
            i, j = bad[0]
            raise IntegrityError(
                f"not a chain map: f∂ and ∂f differ at ({self.target.ids[i]}, {self.source.ids[j]})"
            )

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def direct_sum(complexes: Sequence[GradedComplex]) -> GradedComplex:
    if not complexes:
        return GradedComplex((), (), (), 0)
    mods = {c.modulus for c in complexes}
    mod = 0
    for m in mods:
        mod = gcd(mod, m)
    ids, degs = [], []
    n = sum(c.dim for c in complexes)
    d = la.zeros(n, n)
    off = 0
    for c in complexes:
        ids += list(c.ids)
        degs += list(c.degrees)
        for i in range(c.dim):
            for j in range(c.dim):
                d[off + i][off + j] = c.d[i][j]
        off += c.dim
    return GradedComplex(tuple(ids), tuple(degs), tuple(map(tuple, d)), mod)


# ---------------------------------------------------------------------------
# spin^c families and gradings


class FamilyShape(enum.Enum):
    CYCLIC = "cyclic"
    INTEGERS = "integers"


@dataclass(frozen=True)
class SpincFamily:
    base: str
    n: int
    shape: FamilyShape
    order: int | None  # None for the Z-family
    p: int | None = None
    q: int | None = None

    @property
    def cardinality(self) -> int | None:
        return self.order

    def label(self, k: int) -> str:
        if self.shape is FamilyShape.CYCLIC:
            k %= self.order
        return f"σ⊗L_{k}"

    def labels(self, lo: int = 0, hi: int | None = None) -> list[str]:
        """All labels of a cyclic family, or L_lo..L_{hi-1} of the Z-family."""
        if self.shape is FamilyShape.CYCLIC:
            return [self.label(k) for k in range(self.order)]
        if hi is None:
            raise PreconditionError("the Z-family needs an explicit label window")
        return [self.label(k) for k in range(lo, hi)]


def enumerate_spinc(base: str, n: int, p: int | None = None, q: int | None = None) -> SpincFamily:
    """Spin^c structures of Y, Y1, Y0 or Y_{p/q} restricted from σ on the knot complement."""
    n = int(n)
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if base in ("Y", "Y1"):
        return SpincFamily(base, n, FamilyShape.CYCLIC, n)
    if base == "Y0":
        return SpincFamily(base, n, FamilyShape.INTEGERS, None)
    if base in ("Ypq", "Y_pq"):
        if p is None or q is None:
            raise PreconditionError("Y_{p/q} needs p and q")
        p, q = int(p), int(q)
        if gcd(p, q) != 1:
            raise PreconditionError("p and q must be coprime")
        if p < 1:
            raise PreconditionError("p must be >= 1")
        return SpincFamily("Ypq", n, FamilyShape.CYCLIC, p * n, p, q)
    raise PreconditionError(f"unknown base manifold {base!r}")


def grading_modulus(two_ell: int, k: int) -> int:
    """gcd(2ℓ, 2k); 0 means Z-graded."""
    two_ell, k = int(two_ell), int(k)
    if two_ell < 0 or two_ell % 2:
        raise PreconditionError("2ℓ must be a non-negative even integer")
    return gcd(two_ell, 2 * k)


def wall_crossing_shift(path_flow) -> int:
    """Degree shift between σ⊗L_0 and σ⊗L_m: the complex spectral flow along the path.

    Accepts an integer or anything with an integer ``value`` (a spectral-flow
    record), or a sequence of those for a composite path.
    """
    if isinstance(path_flow, (list, tuple)):
        return sum(wall_crossing_shift(x) for x in path_flow)
    if hasattr(path_flow, "value"):
        return int(path_flow.value)
    if isinstance(path_flow, bool) or not isinstance(path_flow, int):
        raise TypeError("spectral flow must be an integer")
    return path_flow


def lift_grading(cx: GradedComplex, target_modulus: int, base: dict[str, int] | Sequence[str] | None = None) -> GradedComplex:
    """Lift degrees to a finer modulus (0 lifts to Z).

    Degrees are propagated along flows (nonzero ∂ entries) inside each
    connected flow component.  Each component is shifted so its base
    generator has degree 0; without a designated base the lowest degree of
    the component is 0.  Lifting to the native modulus without a base is the
    identity.
    """
    target_modulus = int(target_modulus)
    native = cx.modulus
    if target_modulus < 0 or target_modulus % 2:
        raise GradingError("target modulus must be 0 or a positive even integer")
    if native and target_modulus and target_modulus % native:
        raise GradingError(f"target modulus {target_modulus} is not a multiple of {native}")
    if native == 0 and target_modulus != 0:
        raise GradingError("a Z-graded complex can only be lifted to Z")
    if target_modulus == native and base is None:
        return cx
    n = cx.dim
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if cx.d[i][j]:
                adj[j].append((i, -1))  # deg i = deg j - 1
                adj[i].append((j, 1))
    bases = set()
    if base is not None:
        bases = {cx.ids.index(b) for b in base}
    new: list[int | None] = [None] * n
    for s in range(n):
        if new[s] is not None:
            continue
        new[s] = 0
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, step in adj[x]:
                want = new[x] + step
                if new[y] is None:
                    new[y] = want
                    comp.append(y)
                    queue.append(y)
                elif not _deg_eq(new[y], want, target_modulus):
                    raise IntegrityError(
                        f"flow cycle through {cx.ids[x]} and {cx.ids[y]} has total degree drop "
                        f"not divisible by {target_modulus or 'anything (Z-grading)'}"
                    )
        pick = [i for i in comp if i in bases]
        if len(pick) > 1:
            raise GradingError("two base generators in one flow component")
        shift = new[pick[0]] if pick else min(new[i] for i in comp)
        for i in comp:
            new[i] = _norm(new[i] - shift, target_modulus)
    return GradedComplex(cx.ids, tuple(new), cx.d, target_modulus)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    rank: int
    torsion: tuple[int, ...]


def homology(cx: GradedComplex) -> list[HomologyGroup]:
    """Integer homology per degree class via Smith normal form."""
    out = []
    for deg in cx.degree_classes():
        dim = len(cx.indices(deg))
        out_d = cx.block(deg)
        in_d = cx.block(deg + 1)
        r_out = len(la.invariant_factors(out_d, dim)) if out_d else 0
        inv_in = la.invariant_factors(in_d, len(cx.indices(deg + 1))) if in_d else []
        rank = dim - r_out - len(inv_in)
        tors = tuple(x for x in inv_in if x > 1)
        if rank or tors:
            out.append(HomologyGroup(deg, rank, tors))
    return out


def rational_betti(cx: GradedComplex) -> dict[int, int]:
    """Betti numbers by elimination over Q, independent of the normal form."""
    out = {}
    for deg in cx.degree_classes():
        dim = len(cx.indices(deg))
        b = dim - la.rank_q(cx.block(deg)) - la.rank_q(cx.block(deg + 1))
        if b:
            out[deg] = b
    return out


# ---------------------------------------------------------------------------
# exactness


@dataclass
class NodeReport:
    name: str
    composite_zero: bool
    dim_image: int
    dim_kernel: int
    witness: list[Fraction] | None = None

    @property
    def exact(self) -> bool:
        return self.composite_zero and self.dim_image == self.dim_kernel


@dataclass
class ExactnessReport:
    chain_maps_ok: bool = True
    injective_w1: bool = True
    surjective_w0: bool = True
    middle_exact: bool = True
    nodes: list[NodeReport] = field(default_factory=list)
    delta_matches_snake: bool = True
    failures: list[str] = field(default_factory=list)
    witnesses: dict[str, list] = field(default_factory=dict)

    @property
    def short_exact(self) -> bool:
        return self.injective_w1 and self.surjective_w0 and self.middle_exact

    @property
    def ok(self) -> bool:
        return (
            self.chain_maps_ok
            and self.short_exact
            and all(n.exact for n in self.nodes)
            and self.delta_matches_snake
            and not self.failures
        )


def _cycles_q(cx: GradedComplex) -> list[list[Fraction]]:
    return la.nullspace_q(cx.matrix(), cx.dim) if cx.dim else []


def _boundaries_q(cx: GradedComplex) -> list[list[int]]:
    return la.transpose(cx.matrix(), cx.dim) if cx.dim else []


def _span_dim(vectors) -> int:
    vs = [v for v in vectors if any(v)]
    return la.rank_q(vs) if vs else 0


def _node(name: str, f: list[list[int]], g: list[list[int]], A: GradedComplex, B: GradedComplex, C: GradedComplex) -> NodeReport:
    """Exactness of H(A) → H(B) → H(C) at H(B), over Q."""
    za, zb = _cycles_q(A), _cycles_q(B)
    bb, bc = _boundaries_q(B), _boundaries_q(C)
    rb = _span_dim(bb)
    rc = _span_dim(bc)
    fz = [la.matvec(f, z) for z in za]
    gfz = [la.matvec(g, v) for v in fz]
    comp_zero = _span_dim(bc + gfz) == rc
    dim_im = _span_dim(bb + fz) - rb
    gz = [la.matvec(g, z) for z in zb]
    dim_hb = len(zb) - rb
    dim_ker = dim_hb - (_span_dim(bc + gz) - rc)
    rep = NodeReport(name, comp_zero, dim_im, dim_ker)
    if not rep.exact:
        if not comp_zero:
            rep.witness = next(z for z, v in zip(za, gfz) if not la.in_span_q(bc, v))
        else:
            # a cycle of B killed by g in homology but not hit by f
            for z, v in zip(zb, gz):
                if la.in_span_q(bc, v) and not la.in_span_q(bb + fz, z):
                    rep.witness = z
                    break
    return rep


def snake_map(cy: GradedComplex, w1: list[list[int]], w0: list[list[int]], cycle: Sequence[int]) -> list[Fraction]:
    """Connecting map by diagram chasing: lift through w0, apply ∂, pull back through w1."""
    y = la.solve_q(w0, list(cycle), cy.dim)
    if y is None:
        raise PreconditionError("w0 is not surjective onto the given cycle")
    dy = la.matvec(cy.matrix(), y)
    x = la.solve_q(w1, dy, len(w1[0]) if w1 else 0)
    if x is None:
        raise IntegrityError("∂ of the lift does not lie in the image of w1")
    return x


def integer_left_inverse(w1: list[list[int]]) -> list[list[int]] | None:
    """L with L·w1 = I over Z, if one exists."""
    if not w1:
        return []
    t = la.transpose(w1)
    rows = []
    for j in range(len(w1[0])):
        e = [int(i == j) for i in range(len(w1[0]))]
        x = la.in_image_z(t, e, len(w1))
        if x is None:
            return None
        rows.append(x)
    return rows


def integer_right_inverse(w0: list[list[int]]) -> list[list[int]] | None:
    """R with w0·R = I over Z, if one exists."""
    cols = []
    for i in range(len(w0)):
        e = [int(k == i) for k in range(len(w0))]
        x = la.in_image_z(w0, e, len(w0[0]) if w0 else 0)
        if x is None:
            return None
        cols.append(x)
    return la.transpose(cols, len(w0)) if cols else []


def exact_triangle_check(
    c1: GradedComplex,
    cy: GradedComplex,
    c0_list: Sequence[GradedComplex],
    w1: ChainMap | Sequence[Sequence[int]],
    w0: ChainMap | Sequence[Sequence[int]],
    delta: ChainMap | Sequence[Sequence[int]],
) -> ExactnessReport:
    """Short exactness on generators, exactness in homology at all three nodes,
    and agreement of Δ with the diagram-chasing connecting map."""
    rep = ExactnessReport()
    c0 = direct_sum(list(c0_list))
    mats = {}
    for name, m, src, dst, shift in (("w1", w1, c1, cy, 0), ("w0", w0, cy, c0, 0), ("delta", delta, c0, c1, -1)):
        if isinstance(m, ChainMap):
            mats[name] = m.rows()
            continue
        try:
            mats[name] = ChainMap(src, dst, tuple(map(tuple, m)), shift).rows()
        except (IntegrityError, GradingError) as exc:
            rep.chain_maps_ok = False
            rep.failures.append(f"{name}: {exc}")
            mats[name] = [list(r) for r in m]
    a, b, d = mats["w1"], mats["w0"], mats["delta"]
    # (i) generator level
    r1 = la.rank_q(a) if c1.dim else 0
    r0 = la.rank_q(b) if c0.dim else 0
    rep.injective_w1 = r1 == c1.dim
    rep.surjective_w0 = r0 == c0.dim
    comp = la.matmul(b, a, cy.dim) if c0.dim and c1.dim else []
    rep.middle_exact = la.is_zero(comp) and r1 + r0 == cy.dim
    if not rep.injective_w1:
        rep.witnesses["w1 kernel"] = la.nullspace_q(a, c1.dim)[0]
    if not rep.surjective_w0:
        rep.failures.append("w0 is not surjective on generators")
    if not rep.middle_exact:
        rep.failures.append("im w1 ≠ ker w0 on generators")
    # (ii) homology level, around the triangle
    rep.nodes.append(_node("C_Y", a, b, c1, cy, c0))
    rep.nodes.append(_node("C_Y0", b, d, cy, c0, c1))
    rep.nodes.append(_node("C_Y1", d, a, c0, c1, cy))
    for nd in rep.nodes:
        if not nd.exact:
            rep.failures.append(f"not exact at {nd.name}")
            if nd.witness is not None:
                rep.witnesses[nd.name] = nd.witness
    # (iii) Δ against the snake map on a basis of cycles
    if rep.short_exact and c0.dim:
        bd1 = _boundaries_q(c1)
        for z in _cycles_q(c0):
            lhs = la.matvec(d, z)
            rhs = snake_map(cy, a, b, z)
            diff = [x - y for x, y in zip(lhs, rhs)]
            if not la.in_span_q(bd1, diff):
                rep.delta_matches_snake = False
                rep.failures.append("Δ differs from the snake map in homology")
                rep.witnesses["delta"] = z
                break
    return rep


# ---------------------------------------------------------------------------
# seeded consistent data


@dataclass
class TriangleData:
    c1: GradedComplex
    cy: GradedComplex
    c0_list: list[GradedComplex]
    w1: ChainMap
    w0: ChainMap
    delta: ChainMap

    @property
    def c0(self) -> GradedComplex:
        return direct_sum(self.c0_list)


def _standard(rng: random.Random, size: int, degs: range, prefix: str):
    """Generators and ∂ of a sum of free classes and pairs y → c·x."""
    ids, deg, pairs = [], [], []
    while len(ids) < size:
        d = rng.choice(degs)
        if size - len(ids) >= 2 and rng.random() < 0.55:
            c = rng.choice([1, 1, 1, 2, 3])
            x, y = len(ids), len(ids) + 1
            ids += [f"{prefix}{x}", f"{prefix}{y}"]
            deg += [d - 1, d]
            pairs.append((x, y, c))
        else:
            ids.append(f"{prefix}{len(ids)}")
            deg.append(d)
    d = la.zeros(len(ids), len(ids))
    for x, y, c in pairs:
        d[x][y] = c
    free = [i for i in range(len(ids)) if all(i not in (x, y) for x, y, _ in pairs)]
    return ids, deg, d, free, pairs


def _degree_blocks(rng, degs: list[int]) -> list[list[int]]:
    """Random unimodular change of basis preserving degrees."""
    n = len(degs)
    u = la.identity(n)
    groups: dict[int, list[int]] = {}
    for i, x in enumerate(degs):
        groups.setdefault(x, []).append(i)
    for idx in groups.values():
        sub = la.random_unimodular(rng, len(idx))
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                u[i][j] = sub[a][b]
    return u


def _conj(u, m, uinv):
    return la.matmul(la.matmul(u, m), uinv)


def random_triangle_data(seed, max_generators: int = 12, modulus: int = 0) -> TriangleData:
    """Seeded consistent flow data whose sequence is short exact by construction.

    C1 and C0 are random complexes in disguise (standard forms conjugated by
    degree-preserving unimodular matrices).  The mixed block D is f·(-1)^deg
    for a random chain map f of degree -1, then twisted by a random
    homotopy X so that D is not itself in any normal form.
    """
    rng = random.Random(seed)
    total = rng.randint(2, max_generators)
    n1 = rng.randint(1, total - 1)
    n0 = total - n1
    degs = range(-1, 3)
    ids1, deg1, d1, free1, _ = _standard(rng, n1, degs, "a1_")
    ids0, deg0, d0, free0, _ = _standard(rng, n0, degs, "a0_")
    # chain map f: C0 -> C1 of degree -1 = homology part + null-homotopic part
    f = la.zeros(n1, n0)
    for j in free0:
        for i in free1:
            if deg1[i] == deg0[j] - 1 and rng.random() < 0.6:
                f[i][j] = rng.randint(-2, 2)
    k = la.zeros(n1, n0)
    for i in range(n1):
        for j in range(n0):
            if deg1[i] == deg0[j] and rng.random() < 0.4:
                k[i][j] = rng.randint(-2, 2)
    hk = la.matmul(d1, k, n1)
    kh = la.matmul(k, d0, n0)
    f = [[f[i][j] + hk[i][j] + kh[i][j] for j in range(n0)] for i in range(n1)]
    sign0 = [(-1) ** (x % 2) for x in deg0]
    dmix = [[f[i][j] * sign0[j] for j in range(n0)] for i in range(n1)]
    # disguise each side
    u1 = _degree_blocks(rng, deg1)
    u0 = _degree_blocks(rng, deg0)
    u1i, u0i = la.inverse_unimodular(u1), la.inverse_unimodular(u0)
    d1 = _conj(u1, d1, u1i)
    d0 = _conj(u0, d0, u0i)
    dmix = _conj(u1, dmix, u0i)
    # homotopy twist: basis change [[I, X], [0, I]] of C_Y
    x = la.zeros(n1, n0)
    for i in range(n1):
        for j in range(n0):
            if deg1[i] == deg0[j] and rng.random() < 0.3:
                x[i][j] = rng.randint(-1, 1)
    # new D = D + X ∂0 - ∂1 X
    xd0 = la.matmul(x, d0, n0)
    d1x = la.matmul(d1, x, n1)
    dmix = [[dmix[i][j] + xd0[i][j] - d1x[i][j] for j in range(n0)] for i in range(n1)]
    dy = la.block(d1, dmix, la.zeros(n0, n1), d0)
    mod = modulus
    c1 = GradedComplex(tuple(ids1), tuple(_norm(v, mod) for v in deg1), tuple(map(tuple, d1)), mod)
    c0 = GradedComplex(tuple(ids0), tuple(_norm(v, mod) for v in deg0), tuple(map(tuple, d0)), mod)
    idy = tuple(f"{s}(eps)" for s in ids1 + ids0)
    cy = GradedComplex(idy, c1.degrees + c0.degrees, tuple(map(tuple, dy)), mod)
    w1 = ChainMap(c1, cy, tuple(map(tuple, la.identity(n1) + la.zeros(n0, n1))), 0)
    w0 = ChainMap(cy, c0, tuple(tuple(row) for row in la.hstack(la.zeros(n0, n1), la.identity(n0))), 0)
    delta = ChainMap(c0, c1, tuple(map(tuple, dmix)), -1)
    return TriangleData(c1, cy, [c0], w1, w0, delta)
