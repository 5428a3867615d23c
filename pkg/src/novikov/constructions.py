"""Complexes built from other complexes: products, mapping tori, covers.

All three constructions here follow the staircase (ordered-chain) pattern:
a simplex of the result is a monotone chain of vertex pairs whose
projections are simplices of the inputs.  That convention is what makes
cocycles transport cleanly, since every edge of the result projects to an
edge or a vertex of each factor.
"""

from __future__ import annotations

from .complexes import SimplicialComplex
from .cocycles import OneCocycle, validate_closed
from .errors import ConstructionError, InvalidMapError

__all__ = [
    "SimplicialMap",
    "ProductComplex",
    "product",
    "MappingTorus",
    "mapping_torus",
    "CoveringData",
    "cyclic_cover",
    "torus_grid",
    "torus_grid_map",
]


class SimplicialMap:
    """Vertex map between complexes that sends simplices to simplices.

    Collapses are allowed (several vertices may share an image) as long as
    the image vertex set of every simplex is again a simplex of the target.
    """

    __slots__ = ("source", "target", "vertex_map")

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, vertex_map):
        if isinstance(vertex_map, dict):
            vertex_map = [vertex_map.get(v) for v in range(source.vertex_count)]
        vm = tuple(vertex_map)
        if len(vm) != source.vertex_count:
            raise InvalidMapError(
                f"vertex map covers {len(vm)} vertices, complex has "
                f"{source.vertex_count}"
            )
        for v, w in enumerate(vm):
            if not isinstance(w, int) or not 0 <= w < target.vertex_count:
                raise InvalidMapError(f"vertex {v} maps to invalid vertex {w!r}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "vertex_map", vm)
        for s in source.maximal_simplices():
            img = tuple(sorted(set(vm[v] for v in s)))
            if not target.has_simplex(img):
                raise InvalidMapError(
                    f"image {img} of simplex {s} is not a simplex of the target"
                )

    def __setattr__(self, *a):
        raise AttributeError("SimplicialMap is immutable")

    def image_vertex(self, v: int) -> int:
        return self.vertex_map[v]

    def image_simplex(self, simplex):
        """Sorted image vertex tuple; shorter than the input if it collapses."""
        return tuple(sorted(set(self.vertex_map[v] for v in simplex)))

    def is_isomorphism(self) -> bool:
        return (
            self.source.vertex_count == self.target.vertex_count
            and len(set(self.vertex_map)) == self.source.vertex_count
            and self.source.counts() == self.target.counts()
        )

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other."""
        if other.target != self.source:
            raise InvalidMapError("composition needs matching complexes")
        return SimplicialMap(
            other.source,
            self.target,
            [self.vertex_map[w] for w in other.vertex_map],
        )

    def __repr__(self):
        return f"SimplicialMap({self.source.vertex_count} vertices)"


def _staircase_paths(p: int, q: int):
    """Unit-step lattice paths (0,0) -> (p,q), each a maximal chain."""
    paths = []

    def walk(i, j, acc):
        acc = acc + [(i, j)]
        if i == p and j == q:
            paths.append(acc)
            return
        if i < p:
            walk(i + 1, j, acc)
        if j < q:
            walk(i, j + 1, acc)

    walk(0, 0, [])
    return paths


class ProductComplex:
    """Staircase triangulation of a product, with the pair indexing."""

    __slots__ = ("left", "right", "complex")

    def __init__(self, left: SimplicialComplex, right: SimplicialComplex):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        n_r = right.vertex_count
        maximal = set()
        for s in left.maximal_simplices():
            for t in right.maximal_simplices():
                p, q = len(s) - 1, len(t) - 1
                for path in _staircase_paths(p, q):
                    maximal.add(tuple(s[i] * n_r + t[j] for i, j in path))
        object.__setattr__(
            self,
            "complex",
            SimplicialComplex.build(
                sorted(maximal), vertex_count=left.vertex_count * n_r
            ),
        )

    def __setattr__(self, *a):
        raise AttributeError("ProductComplex is immutable")

    def pair_index(self, a: int, b: int) -> int:
        return a * self.right.vertex_count + b

    def pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.right.vertex_count)

    def combine_cocycles(self, theta: OneCocycle, gamma: OneCocycle) -> OneCocycle:
        """theta on the left factor plus gamma on the right, edge by edge.

        Every product edge projects to an edge or vertex of each factor, so
        the sum is well defined; it is closed whenever both inputs are.
        """
        mode = "float" if "float" in (theta.mode, gamma.mode) else "exact"
        fill = 0 if mode == "exact" else 0.0
        values = {}
        for (u, v) in self.complex.edges:
            a, b = self.pair(u)
            a2, b2 = self.pair(v)
            val = fill
            if a != a2:
                val = val + theta.value(a, a2)
            if b != b2:
                val = val + gamma.value(b, b2)
            values[(u, v)] = val
        return OneCocycle(values, mode=mode)


def product(left: SimplicialComplex, right: SimplicialComplex) -> ProductComplex:
    """Staircase product triangulating |left| x |right|."""
    return ProductComplex(left, right)


class MappingTorus:
    """Prism tower over a complex, glued top to bottom through a map."""

    __slots__ = ("base", "map", "layers", "complex", "fiber_cocycle", "holonomy_period")

    def __init__(self, base, phi, layers, complex_, fiber_cocycle):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "map", phi)
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "complex", complex_)
        object.__setattr__(self, "fiber_cocycle", fiber_cocycle)
        object.__setattr__(self, "holonomy_period", layers)

    def __setattr__(self, *a):
        raise AttributeError("MappingTorus is immutable")

    def vertex_id(self, v: int, layer: int) -> int:
        return v * self.layers + layer % self.layers

    def fiber_vertices(self, layer: int = 0):
        return tuple(self.vertex_id(v, layer) for v in range(self.base.vertex_count))


def _prism_chains(simplex, bottom_ids, top_ids):
    """Staircase split of simplex x [0, 1] into top-dimensional chains."""
    p = len(simplex) - 1
    out = []
    for i in range(p + 1):
        chain = [bottom_ids[j] for j in range(i + 1)]
        chain += [top_ids[j] for j in range(i, p + 1)]
        out.append(tuple(sorted(chain)))
    return out


def mapping_torus(base: SimplicialComplex, phi: SimplicialMap, layers: int = 3) -> MappingTorus:
    """Mapping torus of a simplicial automorphism.

    The base is extruded through `layers` prism levels and the top copy is
    identified with the bottom one through phi.  At least three levels are
    required: with two, a prism over the seam would share its layer pair
    {0, 1} with an interior prism and distinct simplices would collide.
    """
    if not isinstance(phi, SimplicialMap) or phi.source != base or phi.target != base:
        raise ConstructionError("phi must be a self-map of the base complex")
    if not phi.is_isomorphism():
        raise ConstructionError("mapping torus needs a simplicial isomorphism")
    if layers < 3:
        raise ConstructionError("need at least 3 layers to avoid identifications")

    def vid(v, r):
        return v * layers + r

    maximal = []
    tower = []
    for s in base.maximal_simplices():
        for level in range(layers):
            bottom = [vid(v, level) for v in s]
            if level + 1 < layers:
                top = [vid(v, level + 1) for v in s]
            else:
                top = [vid(phi.image_vertex(v), 0) for v in s]
            maximal.extend(_prism_chains(s, bottom, top))
            # unglued control tower, used only for the count check
            tower.extend(
                _prism_chains(
                    s,
                    [v * (layers + 1) + level for v in s],
                    [v * (layers + 1) + level + 1 for v in s],
                )
            )
    glued = SimplicialComplex.build(maximal, vertex_count=base.vertex_count * layers)
    control = SimplicialComplex.build(
        tower, vertex_count=base.vertex_count * (layers + 1)
    )
    base_counts = base.counts() + (0,)
    expect = tuple(
        control.counts()[r] - base_counts[r] for r in range(len(control.counts()))
    )
    if glued.counts() != expect:
        raise ConstructionError(
            f"seam gluing produced {glued.counts()}, expected {expect}"
        )

    values = {}
    for (u, v) in glued.edges:
        ru, rv = u % layers, v % layers
        if ru == rv:
            step = 0
        elif rv == ru + 1 or (ru, rv) == (layers - 1, 0):
            step = 1
        elif ru == rv + 1 or (ru, rv) == (0, layers - 1):
            step = -1
        else:  # non-adjacent layers cannot share an edge
            raise ConstructionError(f"edge {(u, v)} spans layers {(ru, rv)}")
        values[(u, v)] = step
    fiber = OneCocycle(values)
    if not validate_closed(glued, fiber):
        raise ConstructionError("fiber cocycle failed to close")
    return MappingTorus(base, phi, layers, glued, fiber)


class CoveringData:
    """Cyclic cover of a complex, classified by a cocycle mod sheets."""

    __slots__ = ("base", "sheets", "complex", "theta_lift", "base_theta")

    def __init__(self, base, sheets, complex_, theta_lift, base_theta):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "sheets", sheets)
        object.__setattr__(self, "complex", complex_)
        object.__setattr__(self, "theta_lift", theta_lift)
        object.__setattr__(self, "base_theta", base_theta)

    def __setattr__(self, *a):
        raise AttributeError("CoveringData is immutable")

    def vertex_id(self, v: int, sheet: int) -> int:
        return v * self.sheets + sheet % self.sheets

    def project_vertex(self, vertex: int) -> int:
        return vertex // self.sheets

    def sheet_of(self, vertex: int) -> int:
        return vertex % self.sheets

    def deck_map(self, shift: int = 1) -> SimplicialMap:
        """Deck transformation advancing every sheet index by shift."""
        vm = [
            self.vertex_id(self.project_vertex(w), self.sheet_of(w) + shift)
            for w in range(self.complex.vertex_count)
        ]
        return SimplicialMap(self.complex, self.complex, vm)


def cyclic_cover(base: SimplicialComplex, theta: OneCocycle, sheets: int) -> CoveringData:
    """Connected-or-not cyclic cover determined by theta reduced mod sheets.

    A simplex (v0 < ... < vp) lifts, for each starting sheet r, to the
    simplex whose vertex vj sits on sheet r + theta(v0, vj).  Closedness of
    theta makes the lift independent of the choice of leading vertex, which
    is exactly what face closure needs.
    """
    if sheets < 1:
        raise ConstructionError("sheets must be a positive integer")
    if theta.mode != "exact":
        raise ConstructionError("covers need an integer cocycle")
    if not validate_closed(base, theta):
        raise ConstructionError("cocycle is not closed on the base")

    def vid(v, r):
        return v * sheets + r % sheets

    maximal = set()
    for s in base.maximal_simplices():
        v0 = s[0]
        offsets = [theta.value(v0, v) if v != v0 else 0 for v in s]
        for r in range(sheets):
            maximal.add(tuple(sorted(vid(v, r + o) for v, o in zip(s, offsets))))
    cover = SimplicialComplex.build(
        sorted(maximal), vertex_count=base.vertex_count * sheets
    )
    expect = tuple(c * sheets for c in base.counts())
    if cover.counts() != expect:
        raise ConstructionError(
            f"lift produced counts {cover.counts()}, expected {expect}"
        )
    values = {}
    for (u, v) in cover.edges:
        values[(u, v)] = theta.value(u // sheets, v // sheets)
    lift = OneCocycle(values)
    return CoveringData(base, sheets, cover, lift, theta)


def torus_grid(m: int) -> SimplicialComplex:
    """m x m staircase torus: every grid square carries the same diagonal.

    Vertex (i, j) has index i*m + j; squares split along the diagonal from
    (i, j) to (i+1, j+1).  m >= 3 keeps the identifications simplicial.
    """
    if m < 3:
        raise ConstructionError("torus grid needs m >= 3")
    tris = []
    for i in range(m):
        for j in range(m):
            a = i * m + j
            b = ((i + 1) % m) * m + j
            c = ((i + 1) % m) * m + (j + 1) % m
            d = i * m + (j + 1) % m
            tris.append(tuple(sorted((a, b, c))))
            tris.append(tuple(sorted((a, d, c))))
    return SimplicialComplex.build(sorted(set(tris)), vertex_count=m * m)


def torus_grid_map(m: int, matrix, shift=(0, 0)) -> SimplicialMap:
    """Affine self-map (i, j) -> A(i, j) + shift of the staircase torus.

    Only integer matrices that send the three staircase edge directions
    (1,0), (0,1), (1,1) to staircase directions mod m give simplicial maps;
    everything else is rejected by the triangle check in SimplicialMap.
    The hyperbolic and shear matrices of torus-bundle fame fail this for
    every m, because they have infinite order while every simplicial
    automorphism of a fixed finite complex has finite order.
    """
    k = torus_grid(m)
    (a, b), (c, d) = matrix
    si, sj = shift
    vm = []
    for v in range(m * m):
        i, j = divmod(v, m)
        vm.append(((a * i + b * j + si) % m) * m + (c * i + d * j + sj) % m)
    return SimplicialMap(k, k, vm)
