"""Charts, exact derivatives, and curvature of classical surfaces.

Walks through the foundation layer: build scalar fields on an open box,
query exact derivatives, and compute curvature of conformally flat
metrics, cross-checked against the Gauss-curvature formula
K = -(1/2E) lap log(E).
"""

import numpy as np

from crgeo import Chart, derivative
from crgeo.chart import jet_data, log
from crgeo.metric import MetricField, riemann

chart = Chart(["x", "y"], [(-2.0, 2.0), (-2.0, 2.0)])
x, y = chart.coordinate_fields()

# --- exact derivatives (no truncation error) --------------------------------
f = x * y**2
print("d_x d_y (x y^2) at (1, 1):", derivative(f, [1.0, 1.0], (0, 1))[0])

g = 1.0 / (1.0 + x**2) ** 2
print("d_x d_x (1+x^2)^-2 at 0:  ", derivative(g, [0.0, 0.0], (0, 0))[0])

# --- the round sphere in a stereographic chart ------------------------------
conformal = 4.0 / (1.0 + x**2 + y**2) ** 2
zero = chart.constant(0.0)
sphere = MetricField(chart, [[conformal, zero], [zero, conformal]], (2, 0))
pts = chart.sample(8, seed=42)
curv = riemann(sphere, pts)
print("\nround sphere scalar curvature:", curv.scalar)

# independent oracle: scal = 2K = -(1/E) lap0 log E
_, _, hess = jet_data(log(conformal), pts, 2)
oracle = -(hess[:, 0, 0] + hess[:, 1, 1]) / conformal(pts)
print("Gauss-oracle agreement:", np.abs(curv.scalar - oracle).max())

# --- the hyperbolic disc ------------------------------------------------------
disc = Chart(["x", "y"], [(-0.7, 0.7), (-0.7, 0.7)])
xd, yd = disc.coordinate_fields()
factor = 4.0 / (1.0 - xd**2 - yd**2) ** 2
zd = disc.constant(0.0)
poincare = MetricField(disc, [[factor, zd], [zd, factor]], (2, 0))
print("Poincare disc scalar curvature:", riemann(poincare, disc.sample(4, 1)).scalar)
