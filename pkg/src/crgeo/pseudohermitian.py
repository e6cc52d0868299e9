"""Pseudo-Hermitian structures and the Tanaka-Webster connection.

A structure is a contact form theta together with a compatible complex
structure J on H = ker theta (extended by J(T) = 0 along the Reeb field
T).  The Webster connection is realized through the comparison tensor

    nabla_W = nabla_{g_theta} + (1/2)(dtheta . T - theta (x) J - J (x) theta),

which is exact in the transversally symmetric case; the defining axioms
(metricity, prescribed torsion, parallel theta, J-linearity) are demoted
to residual checks.  The Webster-Ricci tensor is kept as its real
representative W with Ric_W = i W, so the Einstein condition reads
W = -(scal_W / m) dtheta and scal_W = -sum_a eps_a W(e_a, J e_a).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .chart import (
    Chart,
    Endomorphism,
    GenericTensorField,
    OneForm,
    ScalarField,
    SymmetricTwoTensor,
    TensorField,
    VectorField,
    exterior_derivative,
    jet_data,
    lie_bracket,
    symmetric_product,
)
from .errors import DegeneracyError, PreconditionError
from .jets import Jet, jet_solve
from .metric import (
    MetricField,
    _christoffel_arrays,
    _dchristoffel_arrays,
    covariant_from_arrays,
    curvature_from_connection,
    field_variance,
    killing_residual,
)

TSPH_TOL = 1e-8


class _JointComponent(ScalarField):
    """Scalar view into a jointly evaluated tensor field."""

    def __init__(self, parent: TensorField, idx: tuple):
        super().__init__(parent.chart, lambda jc: parent._eval_all(jc)[idx])


# ----------------------------------------------------------------------
# Reeb field: joint jet evaluator solving the defining linear system
# ----------------------------------------------------------------------

class ReebField(VectorField):
    """Unique solution of theta(T) = 1, T . dtheta = 0 at every point.

    The system matrix B_jk = theta_j theta_k - (dtheta)_jk is invertible
    exactly when theta is contact; T = B^{-1} theta is solved in jet
    arithmetic so T stays exactly differentiable.
    """

    def __init__(self, theta: OneForm, dtheta):
        self.theta = theta
        self.dtheta = dtheta
        d = theta.chart.dim
        b = np.empty((d, d), dtype=object)
        for j in range(d):
            for k in range(d):
                b[j, k] = theta.components[j] * theta.components[k] - dtheta.components[j, k]
        self._bmat = GenericTensorField(theta.chart, b, (-1, -1))
        TensorField.__init__(self, theta.chart)
        arr = np.empty((d,), dtype=object)
        for i in range(d):
            arr[i] = _JointComponent(self, (i,))
        self.components = arr
        self.shape = (d,)

    def _evaluate(self, jc):
        bj = self._bmat._eval_all(jc)
        tj = _stack_components(self.theta, jc)
        try:
            return jet_solve(bj, tj)
        except DegeneracyError as err:
            raise DegeneracyError(f"contact condition violated: {err}") from err


def _stack_components(form, jc) -> Jet:
    parts = [form.components[i]._eval_all(jc) for i in range(form.chart.dim)]
    batch = np.broadcast_shapes(*(p.comp.shape for p in parts))
    return Jet(np.stack([np.broadcast_to(p.comp, batch) for p in parts], axis=-1))


# ----------------------------------------------------------------------
# lifted complex structure (J(T) = 0 by construction)
# ----------------------------------------------------------------------

class LiftedComplexStructure(Endomorphism):
    """Horizontal lift of a constant base complex structure to ker theta.

    J(X) = W - theta(W) T where W carries the base action of J on the
    leading coordinates and annihilates the fiber directions.
    """

    def __init__(self, chart: Chart, base_j: np.ndarray, theta: OneForm, reeb: VectorField):
        self.base_j = np.asarray(base_j, dtype=float)
        self.theta = theta
        self.reeb = reeb
        d = chart.dim
        TensorField.__init__(self, chart)
        arr = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                arr[i, j] = _JointComponent(self, (i, j))
        self.components = arr
        self.shape = (d, d)

    def _evaluate(self, jc):
        d = self.chart.dim
        bd = self.base_j.shape[0]
        jmat = np.zeros((d, d))
        jmat[:bd, :bd] = self.base_j
        tj = _stack_components(self.theta, jc)
        rj = self.reeb._eval_all(jc)
        theta_w = Jet(np.einsum("...a,ab->...b", tj.comp, jmat))
        outer = _jet_outer(rj, theta_w)
        comp = -np.asarray(outer.comp)
        comp[0] = comp[0] + jmat
        return Jet(comp)


def _jet_outer(a: Jet, b: Jet) -> Jet:
    from .jets import _mul_index

    if a.order == 0:
        return Jet(a.comp[..., :, None] * b.comp[..., None, :])
    ia, ib, scatter = _mul_index(a.order)
    prods = a.comp[ia][..., :, None] * b.comp[ib][..., None, :]
    out = scatter @ prods.reshape(len(ia), -1)
    return Jet(out.reshape((scatter.shape[0],) + prods.shape[1:]))


# ----------------------------------------------------------------------
# the structure
# ----------------------------------------------------------------------

class PHStructure:
    """Contact form plus compatible complex structure on a (2m+1)-chart."""

    def __init__(self, chart: Chart, theta: OneForm, j_endo: Endomorphism, m: int, levi_signature):
        if chart.dim != 2 * m + 1:
            raise ValueError("chart dimension must be 2m + 1")
        self.chart = chart
        self.theta = theta
        self.J = j_endo
        self.m = int(m)
        self.levi_signature = tuple(levi_signature)

    @cached_property
    def dtheta(self):
        return exterior_derivative(self.theta)

    @cached_property
    def reeb(self) -> ReebField:
        return ReebField(self.theta, self.dtheta)

    @cached_property
    def levi_form(self) -> SymmetricTwoTensor:
        """L(X, Y) = dtheta(X, J Y), a full symmetric component matrix."""
        d = self.chart.dim
        comp = [
            [
                _sum_fields([self.dtheta.components[i, a] * self.J.components[a, j] for a in range(d)])
                for j in range(d)
            ]
            for i in range(d)
        ]
        return SymmetricTwoTensor(self.chart, comp)

    @cached_property
    def metric(self) -> MetricField:
        """g_theta = L_theta + theta o theta; one extra plus direction along T."""
        d = self.chart.dim
        tt = symmetric_product(self.theta, self.theta)
        comp = [
            [self.levi_form.components[i, j] + tt.components[i, j] for j in range(d)]
            for i in range(d)
        ]
        p, q = self.levi_signature
        return MetricField(self.chart, comp, (2 * p + 1, 2 * q))

    @cached_property
    def comparison_tensor(self) -> GenericTensorField:
        """D^k_ij = (dtheta_ij T^k - theta_i J^k_j - theta_j J^k_i) / 2."""
        d = self.chart.dim
        t = self.reeb
        comp = np.empty((d, d, d), dtype=object)
        for k in range(d):
            for i in range(d):
                for j in range(d):
                    comp[k, i, j] = (
                        self.dtheta.components[i, j] * t.components[k]
                        - self.theta.components[i] * self.J.components[k, j]
                        - self.theta.components[j] * self.J.components[k, i]
                    ) * 0.5
        return GenericTensorField(self.chart, comp, (1, -1, -1))

    def horizontal_fields(self) -> list[VectorField]:
        """Projections X_i = e_i - theta(e_i) T of the coordinate fields onto H."""
        d = self.chart.dim
        t = self.reeb
        out = []
        for i in range(d):
            comps = []
            for k in range(d):
                base = self.chart.constant(1.0 if k == i else 0.0)
                comps.append(base - self.theta.components[i] * t.components[k])
            out.append(VectorField(self.chart, comps))
        return out

    def h_projector(self, pts) -> np.ndarray:
        """P[n, i, j] = delta_ij - T^i theta_j, projection onto H along T."""
        tval = self.theta(pts)
        reeb = self.reeb(pts)
        return np.eye(self.chart.dim)[None] - np.einsum("ni,nj->nij", reeb, tval)

    # -- structural residuals -------------------------------------------
    def structure_residuals(self, pts) -> dict[str, float]:
        """Contact, J^2, Levi-symmetry, and CR-integrability residuals."""
        pts = self.chart.points(pts)
        tval = self.theta(pts)
        dtval = self.dtheta(pts)
        jval = self.J(pts)
        reeb = self.reeb(pts)
        d = self.chart.dim

        proj = np.eye(d)[None] - np.einsum("ni,nj->nij", reeb, tval)
        j2 = np.einsum("nij,njk->nik", jval, jval)
        res_j = max(
            float(np.abs(j2 + proj).max()),
            float(np.abs(np.einsum("nij,nj->ni", jval, reeb)).max()),
        )

        levi = np.einsum("nia,naj->nij", dtval, jval)
        res_levi = float(np.abs(levi - levi.transpose(0, 2, 1)).max())

        b = np.einsum("ni,nj->nij", tval, tval) - dtval
        res_contact = float(np.abs(np.linalg.det(b)).min())

        return {
            "contact_min_det": res_contact,
            "j_squared": res_j,
            "levi_symmetric": res_levi,
            "integrability": self.integrability_residual(pts),
        }

    def integrability_residual(self, pts) -> float:
        """Nijenhuis residual J([JX,Y]+[X,JY]) - [JX,JY] + [X,Y] over H pairs."""
        fields = self.horizontal_fields()
        jf = [self.J.apply(x) for x in fields]
        jval = self.J(pts)
        tval = self.theta(pts)
        worst = 0.0
        d = self.chart.dim
        for i in range(d):
            for j in range(i + 1, d):
                x, y, jx, jy = fields[i], fields[j], jf[i], jf[j]
                b1 = lie_bracket(jx, y)(pts) + lie_bracket(x, jy)(pts)
                expr = (
                    np.einsum("nab,nb->na", jval, b1)
                    - lie_bracket(jx, jy)(pts)
                    + lie_bracket(x, y)(pts)
                )
                worst = max(worst, float(np.abs(expr).max()))
                worst = max(worst, float(np.abs(np.einsum("na,na->n", tval, b1)).max()))
        return worst

    def reeb_residual(self, pts) -> float:
        """Max violation of theta(T) = 1 and T . dtheta = 0."""
        tval = self.theta(pts)
        dtval = self.dtheta(pts)
        reeb = self.reeb(pts)
        r1 = np.abs(np.einsum("ni,ni->n", tval, reeb) - 1.0).max()
        r2 = np.abs(np.einsum("ni,nij->nj", reeb, dtval)).max()
        return float(max(r1, r2))


def _sum_fields(fields):
    total = fields[0]
    for f in fields[1:]:
        total = total + f
    return total


def make_structure(
    chart: Chart,
    theta: OneForm,
    base_j: np.ndarray,
    m: int,
    levi_signature,
    reeb_hint: VectorField | None = None,
) -> PHStructure:
    """Assemble a structure with J lifted from a constant base complex structure.

    ``reeb_hint`` supplies a closed-form Reeb field for gauges where it is
    known (keeping the expression trees shallow); it must satisfy the
    defining equations, which stay enforced as residual checks, and the
    generic linear-system solver remains available via
    :func:`solved_reeb_field`.
    """
    dtheta = exterior_derivative(theta)
    reeb = reeb_hint if reeb_hint is not None else ReebField(theta, dtheta)
    j_endo = LiftedComplexStructure(chart, base_j, theta, reeb)
    ph = PHStructure(chart, theta, j_endo, m, levi_signature)
    ph.__dict__["dtheta"] = dtheta
    ph.__dict__["reeb"] = reeb
    return ph


def solved_reeb_field(ph: PHStructure) -> ReebField:
    """Reeb field through the generic per-point linear solve (oracle path)."""
    return ReebField(ph.theta, ph.dtheta)


# ----------------------------------------------------------------------
# spec operations
# ----------------------------------------------------------------------

def reeb_field(ph: PHStructure) -> VectorField:
    return ph.reeb


def g_theta(ph: PHStructure) -> MetricField:
    return ph.metric


@dataclass(frozen=True)
class TsphResidual:
    bracket: float
    killing: float

    @property
    def value(self) -> float:
        return self.bracket


def transversal_symmetry_residual(ph: PHStructure, pts) -> TsphResidual:
    """Max over an H-frame of |[T,X] + J[T,JX]|, plus the Killing residual of T."""
    pts = ph.chart.points(pts)
    fields = ph.horizontal_fields()
    t = ph.reeb
    jval = ph.J(pts)
    gval = ph.metric(pts)
    worst = 0.0
    for x in fields:
        jx = ph.J.apply(x)
        expr = lie_bracket(t, x)(pts) + np.einsum(
            "nab,nb->na", jval, lie_bracket(t, jx)(pts)
        )
        norm = np.sqrt(np.abs(np.einsum("nij,ni,nj->n", gval, x(pts), x(pts))))
        worst = max(worst, float((np.abs(expr).max(axis=1) / np.maximum(norm, 1e-12)).max()))
    killing = float(killing_residual(ph.metric, t, pts).max())
    return TsphResidual(bracket=worst, killing=killing)


class WebsterData:
    """Webster connection package: nabla_W = Levi-Civita(g_theta) + D."""

    def __init__(self, ph: PHStructure):
        self.ph = ph
        self.reeb = ph.reeb
        self.metric = ph.metric
        self.comparison = ph.comparison_tensor

    def connection_data(self, pts, order: int = 0):
        from .chart import jet_data_multi

        g_arrays, d_arrays = jet_data_multi([self.metric, self.comparison], pts, order + 1)
        g, dg = g_arrays[0], g_arrays[1]
        gamma, ginv, c = _christoffel_arrays(g, dg)
        gamma_w = gamma + d_arrays[0]
        if order == 0:
            return gamma_w, g, ginv
        d2g = g_arrays[2]
        dgamma, _ = _dchristoffel_arrays(g, dg, d2g, gamma, ginv, c)
        dgamma_w = dgamma + d_arrays[1]
        return gamma_w, dgamma_w, g, dg, gamma, dgamma, ginv

    def covariant_derivative(self, field: TensorField, pts) -> np.ndarray:
        gamma_w, _, _ = self.connection_data(pts, 0)
        vals, grads = jet_data(field, pts, 1)
        return covariant_from_arrays(vals, grads, gamma_w, field_variance(field))

    def axiom_residuals(self, pts) -> dict[str, float]:
        """Residuals of the defining Tanaka-Webster axioms."""
        pts = self.ph.chart.points(pts)
        gamma_w, gval, ginv = self.connection_data(pts, 0)
        _, dg = jet_data(self.metric, pts, 1)
        metricity = (
            dg
            - np.einsum("nmai,nmj->naij", gamma_w, gval)
            - np.einsum("nmaj,nim->naij", gamma_w, gval)
        )

        tval, dtv = jet_data(self.ph.theta, pts, 1)
        parallel_theta = dtv - np.einsum("nmai,nm->nai", gamma_w, tval)

        jval, dj = jet_data(self.ph.J, pts, 1)
        nabla_j = (
            dj
            + np.einsum("nkam,nmi->naki", gamma_w, jval)
            - np.einsum("nmai,nkm->naki", gamma_w, jval)
        )

        # torsion axiom on H: Tor(X, Y) = L(JX, Y) T for X, Y in H
        proj = self.ph.h_projector(pts)
        dtheta = self.ph.dtheta(pts)
        reeb = self.ph.reeb(pts)
        tor = gamma_w - np.einsum("nkji->nkij", gamma_w)
        tor_h = np.einsum("nia,nkij,njb->nkab", proj, tor, proj)
        dth_h = np.einsum("nia,nij,njb->nab", proj, dtheta, proj)
        jproj = np.einsum("nki,nia->nka", jval, proj)
        lval = self.ph.levi_form(pts)
        levi_jh = np.einsum("nka,nkl,nlb->nab", jproj, lval, proj)
        torsion_h = max(
            float(np.abs(tor_h - np.einsum("nab,nk->nkab", dth_h, reeb)).max()),
            float(np.abs(dth_h - levi_jh).max()),
        )

        tsph = transversal_symmetry_residual(self.ph, pts)
        return {
            "metricity": float(np.abs(metricity).max()),
            "parallel_theta": float(np.abs(parallel_theta).max()),
            "j_parallel": float(np.abs(nabla_j).max()),
            "torsion_h": torsion_h,
            "torsion_reeb": tsph.bracket,
        }


def webster_connection(ph: PHStructure, pts=None, tol: float = TSPH_TOL) -> WebsterData:
    """Assemble the Webster connection, enforcing transversal symmetry."""
    if pts is None:
        pts = ph.chart.sample(8, 2024)
    res = transversal_symmetry_residual(ph, pts)
    if res.bracket > tol:
        raise PreconditionError(
            f"structure is not transversally symmetric: residual {res.bracket:.3e} > {tol:g}"
        )
    return WebsterData(ph)


# ----------------------------------------------------------------------
# Levi-adapted frames and Webster curvature
# ----------------------------------------------------------------------

def levi_adapted_frame(ph: PHStructure, pts, pivot_tol: float = 1e-10):
    """Pointwise L-orthonormal frame of H paired as (e_a, J e_a).

    frame[n] rows are (e_1 .. e_m, J e_1 .. J e_m); eps[n, a] is the sign
    g_theta(e_a, e_a).  Pivots on the largest remaining |L(v, v)|.
    """
    pts = ph.chart.points(pts)
    m = ph.m
    d = ph.chart.dim
    tval = ph.theta(pts)
    reeb = ph.reeb(pts)
    jval = ph.J(pts)
    lval = ph.levi_form(pts)
    npts = pts.shape[0]
    frame = np.zeros((npts, 2 * m, d))
    eps = np.zeros((npts, m))
    for n in range(npts):
        lmat = lval[n]
        cands = [np.eye(d)[i] - tval[n, i] * reeb[n] for i in range(d)]
        chosen: list[np.ndarray] = []
        signs: list[float] = []
        for a in range(m):
            best, best_norm = None, 0.0
            for v in cands:
                w = v.copy()
                for u, s in zip(chosen, signs):
                    w = w - s * (u @ lmat @ w) * u
                norm = abs(w @ lmat @ w)
                if norm > best_norm:
                    best, best_norm = w, norm
            if best is None or best_norm <= pivot_tol:
                raise DegeneracyError("H-frame construction failed: Levi form degenerate")
            w = best.copy()
            for u, s in zip(chosen, signs):
                w = w - s * (u @ lmat @ w) * u
            s = float(np.sign(w @ lmat @ w))
            e = w / np.sqrt(abs(w @ lmat @ w))
            je = jval[n] @ e
            for u, su in zip(chosen + [e], signs + [s]):
                je = je - su * (u @ lmat @ je) * u
            je = je / np.sqrt(abs(je @ lmat @ je))
            chosen.extend([e, je])
            signs.extend([s, s])
            frame[n, a] = e
            frame[n, m + a] = je
            eps[n, a] = s
    return frame, eps


@dataclass(frozen=True)
class WebsterCurvature:
    """Webster curvature with the real Ricci representative (Ric_W = i W)."""

    riemann: np.ndarray  # (N,d,d,d,d) fully covariant
    riemann_up: np.ndarray  # last index raised
    ricci_rep: np.ndarray  # (N,d,d) antisymmetric W
    scalar: np.ndarray  # (N,)

    def symmetry_residuals(self, jval) -> dict[str, float]:
        r = self.riemann
        scale = max(1.0, float(np.abs(r).max()))
        j_sym = np.einsum("nijal,nak->nijkl", r, jval) + np.einsum(
            "nijka,nal->nijkl", r, jval
        )
        return {
            "antisym_first": float(np.abs(r + r.transpose(0, 2, 1, 3, 4)).max()) / scale,
            "antisym_last": float(np.abs(r + r.transpose(0, 1, 2, 4, 3)).max()) / scale,
            "j_symmetry": float(np.abs(j_sym).max()) / scale,
            "ricci_antisym": float(
                np.abs(self.ricci_rep + self.ricci_rep.transpose(0, 2, 1)).max()
            )
            / scale,
        }


def webster_curvature(wd: WebsterData, pts) -> WebsterCurvature:
    """Curvature of nabla_W; Ricci trace runs over the (e_a, J e_a) frame."""
    pts = wd.ph.chart.points(pts)
    gamma_w, dgamma_w, g, dg, gamma, dgamma, ginv = wd.connection_data(pts, 1)
    rup, r4 = curvature_from_connection(gamma_w, dgamma_w, g)
    frame, eps = levi_adapted_frame(wd.ph, pts)
    m = wd.ph.m
    e, je = frame[:, :m, :], frame[:, m:, :]
    w = np.einsum("na,nak,nal,nijkl->nij", eps, e, je, r4)
    scal = -np.einsum("na,nai,naj,nij->n", eps, e, je, w)
    return WebsterCurvature(r4, rup, w, scal)


@dataclass(frozen=True)
class EinsteinResidual:
    einstein: float  # max |W + (scal_W / m) dtheta|
    torsion_reeb: float
    scal_deviation: float
    scal_mean: float


def ph_einstein_residual(wd: WebsterData, pts) -> EinsteinResidual:
    """Residual of the Einstein condition W = -(scal_W / m) dtheta."""
    pts = wd.ph.chart.points(pts)
    curv = webster_curvature(wd, pts)
    dtheta = wd.ph.dtheta(pts)
    scal = curv.scalar
    res = curv.ricci_rep + (scal.mean() / wd.ph.m) * dtheta
    tsph = transversal_symmetry_residual(wd.ph, pts)
    return EinsteinResidual(
        einstein=float(np.abs(res).max()),
        torsion_reeb=tsph.bracket,
        scal_deviation=float(np.abs(scal - scal.mean()).max()),
        scal_mean=float(scal.mean()),
    )


def comparison_identities_residual(wd: WebsterData, pts) -> dict[str, float]:
    """Residuals of the Webster vs Levi-Civita curvature comparison.

    (a) five-term comparison formula, (b) cyclic Bianchi sum of the
    Webster curvature operator, (c) pair symmetry, (d) the Ricci relation
    on H, (e) W(T, .) = 0, (f) Ric(T,T) = m/2 and Ric(T, X) = 0,
    (g) R(X, T)T = X/4 on H.
    """
    ph = wd.ph
    pts = ph.chart.points(pts)
    m = ph.m
    gamma_w, dgamma_w, g, dg, gamma, dgamma, ginv = wd.connection_data(pts, 1)
    rup_w, r4_w = curvature_from_connection(gamma_w, dgamma_w, g)
    rup_g, r4_g = curvature_from_connection(gamma, dgamma, g)

    tval = ph.theta(pts)
    dtheta, ddtheta = jet_data(ph.dtheta, pts, 1)
    jval = ph.J(pts)
    reeb = ph.reeb(pts)
    d = ph.chart.dim
    eye = np.eye(d)

    # (a) R_W(X,Y)Z = R_g(X,Y)Z - (1/2)(nabla_Z dtheta)(X,Y) T
    #     - (1/2) dtheta(X,Y) J Z + (1/4) dtheta(Y,Z) J X - (1/4) dtheta(X,Z) J Y
    #     + (1/4) theta(Z) theta(X) Y - (1/4) theta(Z) theta(Y) X
    nabla_dtheta = covariant_from_arrays(dtheta, ddtheta, gamma, (-1, -1))
    rhs = (
        rup_g
        - 0.5 * np.einsum("nkij,nl->nijkl", nabla_dtheta, reeb)
        - 0.5 * np.einsum("nij,nlk->nijkl", dtheta, jval)
        + 0.25 * np.einsum("njk,nli->nijkl", dtheta, jval)
        - 0.25 * np.einsum("nik,nlj->nijkl", dtheta, jval)
        + 0.25 * np.einsum("nk,ni,jl->nijkl", tval, tval, eye)
        - 0.25 * np.einsum("nk,nj,il->nijkl", tval, tval, eye)
    )
    scale = max(1.0, float(np.abs(rup_w).max()))
    res_formula = float(np.abs(rup_w - rhs).max()) / scale

    # (b) cyclic Bianchi sum of the Webster curvature operator
    cyc = rup_w + np.einsum("njkil->nijkl", rup_w) + np.einsum("nkijl->nijkl", rup_w)
    res_bianchi = float(np.abs(cyc).max()) / scale

    # (c) pair symmetry of the (4,0) tensor
    res_pair = float(np.abs(r4_w - r4_w.transpose(0, 3, 4, 1, 2)).max()) / scale

    curv_w = webster_curvature(wd, pts)
    ricci_g = np.einsum("nab,najkb->njk", ginv, r4_g)
    proj = eye[None] - np.einsum("ni,nj->nij", reeb, tval)

    # (d) Ric_g(X,Y) = -W(X, JY) - (1/2) g(X,Y) on H
    wj = np.einsum("nia,naj->nij", curv_w.ricci_rep, jval)
    d_expr = ricci_g + wj + 0.5 * g
    d_h = np.einsum("nia,nij,njb->nab", proj, d_expr, proj)
    res_d = float(np.abs(d_h).max())

    # (e) W(T, .) = 0
    res_e = float(np.abs(np.einsum("ni,nij->nj", reeb, curv_w.ricci_rep)).max())

    # (f) Ric_g(T,T) = (m/2) g(T,T) and Ric_g(T, X) = 0 for X in H
    ric_tt = np.einsum("ni,nj,nij->n", reeb, reeb, ricci_g)
    g_tt = np.einsum("ni,nj,nij->n", reeb, reeb, g)
    res_f_tt = float(np.abs(ric_tt - 0.5 * m * g_tt).max())
    ric_t = np.einsum("ni,nij->nj", reeb, ricci_g)
    res_f_tx = float(np.abs(np.einsum("nj,njb->nb", ric_t, proj)).max())

    # (g) R_g(X, T)T = X/4 for X in H
    rxtt = np.einsum("nijkl,nj,nk->nil", rup_g, reeb, reeb)
    lhs = np.einsum("nia,nil->nal", proj, rxtt)
    rhs_g = 0.25 * np.einsum("nla->nal", proj)
    res_g = float(np.abs(lhs - rhs_g).max())

    return {
        "comparison_formula": res_formula,
        "bianchi_cyclic": res_bianchi,
        "pair_symmetry": res_pair,
        "ricci_h_relation": res_d,
        "webster_ricci_reeb": res_e,
        "ricci_reeb_tt": res_f_tt,
        "ricci_reeb_mixed": res_f_tx,
        "reeb_sectional": res_g,
    }
