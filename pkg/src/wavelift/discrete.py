"""Shared finite-difference machinery on uniform tensor grids with ball masks.

Conventions used everywhere in the package:

* spatial axes are uniform 1-d node arrays, one per dimension, spanning the
  cube that embeds the ball; fields live on the tensor product with the
  spatial axes as the *trailing* array dimensions;
* a node belongs to the ball of radius ``r`` iff its center satisfies
  ``|x| < r`` (strict), and integrals weight every interior node by one cell
  volume -- no curved-boundary quadrature at desk scale;
* derivative stencils are second-order centered in the interior with
  second-order one-sided closures at the cube edges.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import StructuralError

Axes = Sequence[np.ndarray]


def spacing(axes: Axes) -> tuple[float, ...]:
    return tuple(float(ax[1] - ax[0]) for ax in axes)


def cell_volume(axes: Axes) -> float:
    vol = 1.0
    for h in spacing(axes):
        vol *= h
    return vol


def mesh(axes: Axes) -> list[np.ndarray]:
    """Broadcastable (sparse) coordinate arrays for the tensor grid."""
    return list(np.meshgrid(*axes, indexing="ij", sparse=True))


def node_points(axes: Axes) -> np.ndarray:
    """All grid nodes as an (N, n) point array, C-ordered."""
    coords = np.meshgrid(*axes, indexing="ij")
    return np.stack([c.ravel() for c in coords], axis=-1)


def radius_sq(axes: Axes) -> np.ndarray:
    rsq = np.zeros(tuple(len(ax) for ax in axes))
    for c in mesh(axes):
        rsq = rsq + c**2
    return rsq


def ball_mask(axes: Axes, r: float) -> np.ndarray:
    return radius_sq(axes) < r * r


def masked_integral(values: np.ndarray, axes: Axes, r: float) -> np.ndarray:
    """Integral of ``values`` over the ball of radius ``r``.

    ``values`` may carry leading (non-spatial) dimensions; the spatial axes
    must be the trailing ones.
    """
    mask = ball_mask(axes, r)
    return cell_volume(axes) * values[..., mask].sum(axis=-1)


def _edge_slice(ndim: int, axis: int, index) -> tuple:
    sl = [slice(None)] * ndim
    sl[axis] = index
    return tuple(sl)


def diff_centered(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Centered first difference, second-order one-sided at the edges."""
    out = (np.roll(f, -1, axis) - np.roll(f, 1, axis)) / (2.0 * h)
    g = lambda i: f[_edge_slice(f.ndim, axis, i)]  # noqa: E731
    out[_edge_slice(f.ndim, axis, 0)] = (-3.0 * g(0) + 4.0 * g(1) - g(2)) / (2.0 * h)
    out[_edge_slice(f.ndim, axis, -1)] = (3.0 * g(-1) - 4.0 * g(-2) + g(-3)) / (2.0 * h)
    return out


def diff2_centered(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Centered second difference; edge values copy the adjacent interior.

    Only interior values are second-order; callers needing edge accuracy
    must slice the result.
    """
    out = (np.roll(f, -1, axis) - 2.0 * f + np.roll(f, 1, axis)) / (h * h)
    out[_edge_slice(f.ndim, axis, 0)] = out[_edge_slice(f.ndim, axis, 1)]
    out[_edge_slice(f.ndim, axis, -1)] = out[_edge_slice(f.ndim, axis, -2)]
    return out


def grad(f: np.ndarray, axes: Axes) -> list[np.ndarray]:
    """Per-axis centered gradient; leading non-spatial dims pass through."""
    hs = spacing(axes)
    lead = f.ndim - len(axes)
    return [diff_centered(f, lead + i, hs[i]) for i in range(len(axes))]


def interior_slices(ndim: int, n_spatial: int, margin: int) -> tuple[slice, ...]:
    lead = ndim - n_spatial
    return tuple([slice(None)] * lead + [slice(margin, -margin)] * n_spatial)


def _flux_divergence(flux: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Node divergence of a face flux, zero flux assumed outside the cube."""
    pad = [(0, 0)] * flux.ndim
    pad[axis] = (1, 1)
    return np.diff(np.pad(flux, pad), axis=axis) / h


class EllipticOperator:
    """Discrete ``div(A grad u) + b . grad u + c u`` on a tensor grid.

    Diagonal diffusion uses flux form with face-centered coefficients
    (second order); off-diagonal terms (dim 2) use nested centered
    differences. Fields beyond the cube edge are treated as zero, which is
    exact for the homogeneous-Dirichlet uses in this package; callers needing
    interior-only validity slice with :func:`interior_slices` (margin 2).

    Accepts real or complex fields; coefficient arrays are precomputed once
    so repeated application (time stepping) is cheap.
    """

    def __init__(self, cs, axes: Axes):
        self.axes = [np.asarray(ax, dtype=float) for ax in axes]
        self.n = len(self.axes)
        if self.n != cs.dim:
            raise StructuralError(
                f"coefficient dimension {cs.dim} != grid dimension {self.n}"
            )
        self.hs = spacing(self.axes)
        shape = tuple(len(ax) for ax in self.axes)

        pts = node_points(self.axes)
        self.a_nodes = np.asarray(cs.a(pts), dtype=float).reshape(shape)
        self.c_nodes = np.asarray(cs.c(pts), dtype=float).reshape(shape)
        b_vals = np.asarray(cs.b(pts), dtype=float).reshape(shape + (self.n,))
        self.b_nodes = [b_vals[..., i] for i in range(self.n)]
        self.has_b = any(np.any(bi != 0) for bi in self.b_nodes)
        self.has_c = bool(np.any(self.c_nodes != 0))

        # face-centered diagonal diffusion coefficients, one array per axis
        self.face_diag: list[np.ndarray] = []
        for i in range(self.n):
            fax = list(self.axes)
            fax[i] = 0.5 * (self.axes[i][:-1] + self.axes[i][1:])
            fpts = node_points(fax)
            Af = np.asarray(cs.A(fpts), dtype=float)
            fshape = tuple(len(ax) for ax in fax)
            self.face_diag.append(Af[:, i, i].reshape(fshape))

        # node-centered off-diagonal coefficient (dim 2 only)
        self.offdiag: np.ndarray | None = None
        if self.n == 2:
            An = np.asarray(cs.A(pts), dtype=float)
            off = An[:, 0, 1].reshape(shape)
            if np.any(np.abs(off) > 0):
                self.offdiag = off

    def __call__(self, u: np.ndarray) -> np.ndarray:
        lead = u.ndim - self.n
        out = self.c_nodes * u if self.has_c else np.zeros_like(u)
        for i in range(self.n):
            ax = lead + i
            h = self.hs[i]
            flux = self.face_diag[i] * (np.diff(u, axis=ax) / h)
            out = out + _flux_divergence(flux, ax, h)
            if self.has_b:
                out = out + self.b_nodes[i] * diff_centered(u, ax, h)
        if self.offdiag is not None:
            h0, h1 = self.hs
            a12 = self.offdiag
            out = out + diff_centered(a12 * diff_centered(u, lead + 1, h1), lead + 0, h0)
            out = out + diff_centered(a12 * diff_centered(u, lead + 0, h0), lead + 1, h1)
        return out


def build_elliptic(cs, axes: Axes) -> EllipticOperator:
    return EllipticOperator(cs, axes)


def trapezoid_weights(n: int, h: float) -> np.ndarray:
    w = np.full(n, h)
    w[0] = w[-1] = 0.5 * h
    return w
