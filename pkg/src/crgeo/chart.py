"""Charts, smooth fields, and exterior calculus on open boxes in R^d.

Fields are closed-form compositions of a fixed elementary basis
(polynomials, exp, log, sin, cos, powers, reciprocals) assembled
programmatically from coordinate fields; there is no expression parsing.
All derivative queries run on the nilpotent-jet engine in
:mod:`crgeo.jets` and are exact to machine rounding.  Every object is
immutable after construction and evaluation is pure, so values are
independent of evaluation order and instances can be shared freely.
"""

from __future__ import annotations

import numbers

import numpy as np

from . import jets
from .errors import DomainError
from .jets import Jet


class Chart:
    """Open coordinate box in R^d with named coordinates."""

    def __init__(self, names, bounds):
        names = tuple(str(n) for n in names)
        bounds = tuple((float(a), float(b)) for a, b in bounds)
        if not names:
            raise ValueError("chart needs at least one coordinate")
        if len(names) != len(bounds):
            raise ValueError("one bound interval per coordinate required")
        for a, b in bounds:
            if not a < b:
                raise ValueError(f"empty coordinate interval ({a}, {b})")
        self.names = names
        self.bounds = bounds

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def extend(self, name: str, bound) -> "Chart":
        """New chart with one appended fiber coordinate."""
        return Chart(self.names + (name,), self.bounds + (tuple(bound),))

    # -- points ---------------------------------------------------------
    def points(self, pts) -> np.ndarray:
        """Validate an (N, dim) batch (or a single point) of chart points."""
        arr = np.atleast_2d(np.asarray(pts, dtype=float))
        if arr.ndim != 2 or arr.shape[1] != self.dim:
            raise DomainError(f"expected points of dimension {self.dim}, got shape {arr.shape}")
        for c, (a, b) in enumerate(self.bounds):
            if np.any(arr[:, c] <= a) or np.any(arr[:, c] >= b):
                raise DomainError(
                    f"coordinate {self.names[c]} outside open interval ({a}, {b})"
                )
        return arr

    def sample(self, n: int, seed: int, margin: float = 0.1) -> np.ndarray:
        """Deterministic uniform draws from the margin-shrunk box."""
        rng = np.random.default_rng(seed)
        lo = np.array([a + margin * (b - a) for a, b in self.bounds])
        hi = np.array([b - margin * (b - a) for a, b in self.bounds])
        return lo + (hi - lo) * rng.random((n, self.dim))

    def center(self) -> np.ndarray:
        return np.array([[0.5 * (a + b) for a, b in self.bounds]])

    # -- field constructors ----------------------------------------------
    def coord(self, i) -> "ScalarField":
        if isinstance(i, str):
            i = self.index(i)
        return ScalarField(self, lambda jc, i=i: jc[i])

    def coordinate_fields(self):
        return tuple(self.coord(i) for i in range(self.dim))

    def constant(self, value: float) -> "ScalarField":
        return ScalarField(self, lambda jc, v=float(value): Jet.constant(v, jc[0]))

    def zero_field(self) -> "ScalarField":
        return self.constant(0.0)

    def __repr__(self):
        return f"Chart({', '.join(self.names)})"


# ----------------------------------------------------------------------
# jet-coordinate construction and derivative extraction
# ----------------------------------------------------------------------

class JetCoords(list):
    """Coordinate jets plus per-evaluation caches.

    ``cache`` maps field objects to their jet values so shared expression
    nodes (Reeb solves, lifted complex structures, reused components)
    evaluate exactly once per coordinate batch; ``lifts`` shares the
    generator-lifted coordinate lists used by derivative fields.
    """

    __slots__ = ("cache", "lifts")

    def __init__(self, items):
        super().__init__(items)
        self.cache = {}
        self.lifts = {}


def lift_coords(jc, i: int) -> "JetCoords":
    """Coordinates with a fresh generator seeded on coordinate i (shared)."""
    if isinstance(jc, JetCoords):
        hit = jc.lifts.get(i)
        if hit is not None:
            return hit
    lifted = JetCoords(c.lift(1.0 if j == i else 0.0) for j, c in enumerate(jc))
    if isinstance(jc, JetCoords):
        jc.lifts[i] = lifted
    return lifted


def _jet_coords(pts: np.ndarray, order: int) -> JetCoords:
    n, d = pts.shape
    rows = 1 << order
    batch = (n,) + (d,) * order
    coords = []
    for c in range(d):
        comp = np.zeros((rows,) + batch)
        comp[0] = pts[:, c].reshape((n,) + (1,) * order)
        for j in range(order):
            seed = np.zeros(d)
            seed[c] = 1.0
            comp[1 << j] = seed.reshape((1,) * (1 + j) + (d,) + (1,) * (order - 1 - j))
        coords.append(Jet(comp))
    return JetCoords(coords)


def jet_data(field: "TensorField", pts, order: int) -> list[np.ndarray]:
    """Value and partial-derivative arrays of a field at a point batch.

    Returns ``[v, d1, .., d_order]`` with ``v`` of shape ``(N, *shape)``
    and ``d_r`` of shape ``(N, d*r, *shape)`` where ``d_r[n, a, .., b]``
    is the mixed partial along coordinates ``a..b``.
    """
    return jet_data_multi([field], pts, order)[0]


def jet_data_multi(fields, pts, order: int) -> list[list[np.ndarray]]:
    """Like :func:`jet_data` for several fields on one shared jet batch.

    Sharing one coordinate batch lets common sub-expressions (Reeb
    solves, lifted structures, pulled-back components) evaluate once.
    """
    chart = fields[0].chart
    pts = chart.points(pts)
    n, d = pts.shape
    jc = _jet_coords(pts, order)
    results = []
    for field in fields:
        if field.chart is not chart:
            raise ValueError("fields live on different charts")
        out = field._eval_all(jc)
        full_shape = (1 << order,) + (n,) + (d,) * order + field.shape
        comp = np.broadcast_to(out.comp, full_shape)
        arrays = []
        for r in range(order + 1):
            mask = (1 << r) - 1
            sel = (mask,) + (slice(None),) * (1 + r) + (0,) * (order - r)
            arrays.append(np.array(comp[sel]))
        results.append(arrays)
    return results


# ----------------------------------------------------------------------
# fields
# ----------------------------------------------------------------------

class TensorField:
    """Base for fields holding a jet evaluator with trailing value axes.

    Subclasses implement ``_evaluate``; ``_eval_all`` adds per-batch
    memoization so shared nodes of an expression tree run once.
    """

    shape: tuple = ()

    def __init__(self, chart: Chart):
        self.chart = chart

    def _evaluate(self, jcoords) -> Jet:
        raise NotImplementedError

    def _eval_all(self, jcoords) -> Jet:
        cache = getattr(jcoords, "cache", None)
        if cache is None:
            return self._evaluate(jcoords)
        hit = cache.get(self)
        if hit is None:
            hit = self._evaluate(jcoords)
            cache[self] = hit
        return hit

    def __call__(self, pts) -> np.ndarray:
        return jet_data(self, pts, 0)[0]

    def data(self, pts, order: int) -> list[np.ndarray]:
        return jet_data(self, pts, order)


class ScalarField(TensorField):
    """Smooth real function on a chart with exact derivative queries."""

    shape = ()

    def __init__(self, chart: Chart, fn):
        super().__init__(chart)
        self._fn = fn

    def _evaluate(self, jc):
        return self._fn(jc)

    # -- calculus ---------------------------------------------------------
    def partial(self, i) -> "ScalarField":
        """Exact partial derivative field along coordinate i."""
        if isinstance(i, str):
            i = self.chart.index(i)

        def fn(jc, i=i, base=self):
            return base._eval_all(lift_coords(jc, i)).upper()

        return ScalarField(self.chart, fn)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ScalarField):
            if other.chart is not self.chart:
                raise ValueError("fields live on different charts")
            return other
        if isinstance(other, numbers.Number):
            return float(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, float):
            return ScalarField(self.chart, lambda jc: self._eval_all(jc) + other)
        return ScalarField(self.chart, lambda jc: self._eval_all(jc) + other._eval_all(jc))

    __radd__ = __add__

    def __neg__(self):
        return ScalarField(self.chart, lambda jc: -self._eval_all(jc))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, float):
            return ScalarField(self.chart, lambda jc: self._eval_all(jc) - other)
        return ScalarField(self.chart, lambda jc: self._eval_all(jc) - other._eval_all(jc))

    def __rsub__(self, other):
        other = float(other)
        return ScalarField(self.chart, lambda jc: other - self._eval_all(jc))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, float):
            return ScalarField(self.chart, lambda jc: self._eval_all(jc) * other)
        return ScalarField(self.chart, lambda jc: self._eval_all(jc) * other._eval_all(jc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, float):
            return ScalarField(self.chart, lambda jc: self._eval_all(jc) * (1.0 / other))
        return ScalarField(self.chart, lambda jc: self._eval_all(jc) / other._eval_all(jc))

    def __rtruediv__(self, other):
        other = float(other)
        return ScalarField(self.chart, lambda jc: other / self._eval_all(jc))

    def __pow__(self, n):
        return ScalarField(self.chart, lambda jc: self._eval_all(jc) ** n)


def as_field(chart: Chart, value) -> ScalarField:
    if isinstance(value, ScalarField):
        return value
    return chart.constant(float(value))


# elementary compositions ------------------------------------------------

def _unary(fn):
    def wrapper(f: ScalarField) -> ScalarField:
        return ScalarField(f.chart, lambda jc: fn(f._eval_all(jc)))

    return wrapper


exp = _unary(jets.exp)
log = _unary(jets.log)
sin = _unary(jets.sin)
cos = _unary(jets.cos)
sqrt = _unary(jets.sqrt)


class _ComponentStack(TensorField):
    """Tensor field backed by an object array of scalar fields."""

    def __init__(self, chart: Chart, components: np.ndarray):
        super().__init__(chart)
        comps = np.empty(components.shape, dtype=object)
        for idx in np.ndindex(components.shape):
            comps[idx] = as_field(chart, components[idx])
        self.components = comps
        self.shape = components.shape

    def component(self, *idx) -> ScalarField:
        return self.components[idx]

    def _evaluate(self, jc):
        flat = [self.components[idx]._eval_all(jc) for idx in np.ndindex(self.shape)]
        batch = np.broadcast_shapes(*(j.comp.shape for j in flat))
        stacked = np.stack([np.broadcast_to(j.comp, batch) for j in flat], axis=-1)
        return Jet(stacked.reshape(batch + self.shape))


def _object_array(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=object)
    return arr


class VectorField(_ComponentStack):
    def __init__(self, chart, components):
        comps = _object_array(list(components))
        if comps.shape != (chart.dim,):
            raise ValueError("need one component per coordinate")
        super().__init__(chart, comps)

    def __add__(self, other):
        return VectorField(
            self.chart, [self.components[i] + other.components[i] for i in range(self.chart.dim)]
        )

    def __sub__(self, other):
        return VectorField(
            self.chart, [self.components[i] - other.components[i] for i in range(self.chart.dim)]
        )

    def scaled(self, f) -> "VectorField":
        return VectorField(self.chart, [c * f for c in self.components])


class OneForm(_ComponentStack):
    def __init__(self, chart, components):
        comps = _object_array(list(components))
        if comps.shape != (chart.dim,):
            raise ValueError("need one component per coordinate")
        super().__init__(chart, comps)

    def __add__(self, other):
        return OneForm(
            self.chart, [self.components[i] + other.components[i] for i in range(self.chart.dim)]
        )

    def __sub__(self, other):
        return OneForm(
            self.chart, [self.components[i] - other.components[i] for i in range(self.chart.dim)]
        )

    def scaled(self, f) -> "OneForm":
        return OneForm(self.chart, [c * f for c in self.components])

    def pair(self, x: VectorField) -> ScalarField:
        """Contraction omega(X)."""
        d = self.chart.dim
        total = self.components[0] * x.components[0]
        for i in range(1, d):
            total = total + self.components[i] * x.components[i]
        return total


class _Matrix(_ComponentStack):
    def __init__(self, chart, components):
        comps = _object_array([list(row) for row in components])
        if comps.shape != (chart.dim, chart.dim):
            raise ValueError("need a dim x dim component matrix")
        super().__init__(chart, comps)

    def __add__(self, other):
        d = self.chart.dim
        return type(self)(
            self.chart,
            [[self.components[i, j] + other.components[i, j] for j in range(d)] for i in range(d)],
        )

    def scaled(self, f):
        d = self.chart.dim
        return type(self)(self.chart, [[self.components[i, j] * f for j in range(d)] for i in range(d)])


class TwoForm(_Matrix):
    """Antisymmetric component matrix b_ij = b(e_i, e_j)."""

    def apply(self, x: VectorField, y: VectorField) -> ScalarField:
        d = self.chart.dim
        total = self.chart.zero_field()
        for i in range(d):
            for j in range(d):
                total = total + self.components[i, j] * x.components[i] * y.components[j]
        return total


class SymmetricTwoTensor(_Matrix):
    """Symmetric component matrix s_ij = s(e_i, e_j)."""

    def apply(self, x: VectorField, y: VectorField) -> ScalarField:
        d = self.chart.dim
        total = self.chart.zero_field()
        for i in range(d):
            for j in range(d):
                total = total + self.components[i, j] * x.components[i] * y.components[j]
        return total


class Endomorphism(_Matrix):
    """(1,1)-tensor with components J^i_j (output index first)."""

    def apply(self, x: VectorField) -> VectorField:
        d = self.chart.dim
        comps = []
        for i in range(d):
            total = self.components[i, 0] * x.components[0]
            for j in range(1, d):
                total = total + self.components[i, j] * x.components[j]
            comps.append(total)
        return VectorField(self.chart, comps)


class GenericTensorField(_ComponentStack):
    """Arbitrary-valence tensor field; ``variance[k]`` is +1 (up) or -1 (down)."""

    def __init__(self, chart, components, variance):
        comps = np.asarray(components, dtype=object)
        super().__init__(chart, comps)
        if len(variance) != comps.ndim:
            raise ValueError("variance length must match tensor rank")
        self.variance = tuple(variance)


# ----------------------------------------------------------------------
# chart-calculus operations
# ----------------------------------------------------------------------

def derivative(f: ScalarField, pts, multi_index) -> np.ndarray:
    """Exact mixed partial of f along ``multi_index`` (|index| <= 3)."""
    multi_index = tuple(multi_index)
    k = len(multi_index)
    if k > 3:
        raise ValueError("derivative queries are supported up to order 3")
    pts = f.chart.points(pts)
    n, d = pts.shape
    coords = []
    for c in range(d):
        comp = np.zeros((1 << k, n))
        comp[0] = pts[:, c]
        for j, direction in enumerate(multi_index):
            if direction == c:
                comp[1 << j] = 1.0
        coords.append(Jet(comp))
    out = f._eval_all(JetCoords(coords))
    full = np.broadcast_to(out.comp, (1 << k, n))
    return np.array(full[(1 << k) - 1])


def differential(f: ScalarField) -> OneForm:
    return OneForm(f.chart, [f.partial(i) for i in range(f.chart.dim)])


def exterior_derivative(omega: OneForm) -> TwoForm:
    """Two-form with components (d omega)_ij = d_i omega_j - d_j omega_i."""
    d = omega.chart.dim
    comp = [[omega.components[j].partial(i) - omega.components[i].partial(j) for j in range(d)] for i in range(d)]
    return TwoForm(omega.chart, comp)


def lie_bracket(x: VectorField, y: VectorField) -> VectorField:
    """[X, Y]^k = X^i d_i Y^k - Y^i d_i X^k."""
    if x.chart is not y.chart:
        raise ValueError("fields live on different charts")
    d = x.chart.dim
    comps = []
    for k in range(d):
        total = x.components[0] * y.components[k].partial(0) - y.components[0] * x.components[k].partial(0)
        for i in range(1, d):
            total = total + x.components[i] * y.components[k].partial(i)
            total = total - y.components[i] * x.components[k].partial(i)
        comps.append(total)
    return VectorField(x.chart, comps)


def symmetric_product(alpha: OneForm, beta: OneForm) -> SymmetricTwoTensor:
    """Half-symmetrized product: (a o b)(X,Y) = (a(X)b(Y) + a(Y)b(X)) / 2."""
    d = alpha.chart.dim
    comp = [
        [
            (alpha.components[i] * beta.components[j] + alpha.components[j] * beta.components[i]) * 0.5
            for j in range(d)
        ]
        for i in range(d)
    ]
    return SymmetricTwoTensor(alpha.chart, comp)


def wedge(alpha: OneForm, beta: OneForm) -> TwoForm:
    d = alpha.chart.dim
    comp = [
        [alpha.components[i] * beta.components[j] - alpha.components[j] * beta.components[i] for j in range(d)]
        for i in range(d)
    ]
    return TwoForm(alpha.chart, comp)


# ----------------------------------------------------------------------
# transport between a base chart and an extended (fiber) chart
# ----------------------------------------------------------------------

def _subset_coords(jc, index_map: tuple) -> JetCoords:
    """Shared projection of coordinate jets onto a leading-index subset."""
    key = ("subset", index_map)
    if isinstance(jc, JetCoords):
        hit = jc.lifts.get(key)
        if hit is not None:
            return hit
    sub = JetCoords(jc[i] for i in index_map)
    if isinstance(jc, JetCoords):
        jc.lifts[key] = sub
    return sub


def pullback_scalar(total: Chart, f: ScalarField, index_map=None) -> ScalarField:
    """View a base-chart function on a chart extending it (fiber-constant)."""
    if index_map is None:
        index_map = tuple(range(f.chart.dim))
    index_map = tuple(index_map)
    return ScalarField(total, lambda jc: f._eval_all(_subset_coords(jc, index_map)))


def pullback_oneform(total: Chart, omega: OneForm) -> OneForm:
    """Pull a base one-form back along the projection onto leading coordinates."""
    base_dim = omega.chart.dim
    comps = [pullback_scalar(total, omega.components[i]) for i in range(base_dim)]
    comps += [total.constant(0.0)] * (total.dim - base_dim)
    return OneForm(total, comps)


def pullback_symmetric(total: Chart, s: SymmetricTwoTensor) -> SymmetricTwoTensor:
    base_dim = s.chart.dim
    zero = total.constant(0.0)
    comp = [
        [
            pullback_scalar(total, s.components[i, j]) if i < base_dim and j < base_dim else zero
            for j in range(total.dim)
        ]
        for i in range(total.dim)
    ]
    return SymmetricTwoTensor(total, comp)


def extend_vector(total: Chart, x: VectorField) -> VectorField:
    """Extend a base vector field by zero fiber components."""
    base_dim = x.chart.dim
    comps = [pullback_scalar(total, x.components[i]) for i in range(base_dim)]
    comps += [total.constant(0.0)] * (total.dim - base_dim)
    return VectorField(total, comps)
