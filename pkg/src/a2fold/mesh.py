"""Level-set meshing of the real variants and Wavefront OBJ export."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from skimage import measure

from .poly import MultiPoly
from .surfaces import real_variant


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray  # (n, 3) float
    faces: np.ndarray     # (m, 3) int, zero-based

    def is_empty(self) -> bool:
        return len(self.vertices) == 0


def _eval_grid(p: MultiPoly, axes: np.ndarray) -> np.ndarray:
    """Vectorized evaluation of a real trivariate polynomial on a cube grid."""
    if p.arity != 3:
        raise ValueError("grid evaluation needs a trivariate polynomial")
    coords = [
        axes[:, None, None],
        axes[None, :, None],
        axes[None, None, :],
    ]
    max_exp = [0, 0, 0]
    for exps in p.terms:
        for k, e in enumerate(exps):
            max_exp[k] = max(max_exp[k], e)
    pows = []
    for k in range(3):
        table = [np.ones_like(coords[k])]
        for _ in range(max_exp[k]):
            table.append(table[-1] * coords[k])
        pows.append(table)
    vol = np.zeros((len(axes),) * 3)
    sqrt3 = np.sqrt(3.0)
    for exps, coeff in p.terms.items():
        a, b = coeff.sqrt3_parts()
        c = float(a) + float(b) * sqrt3
        vol += c * pows[0][exps[0]] * pows[1][exps[1]] * pows[2][exps[2]]
    return vol


def mesh_level_set(p: MultiPoly, box: float, resolution: int) -> Mesh:
    """Marching-cubes triangulation of p = 0 on [-box, box]^3.

    `resolution` is the number of grid samples per axis (at least 16).  An
    empty level set inside the box yields an empty mesh with a warning.
    """
    if resolution < 16:
        raise ValueError("resolution must be >= 16")
    if box <= 0:
        raise ValueError("box must be positive")
    axes = np.linspace(-box, box, resolution)
    vol = _eval_grid(p, axes)
    if vol.min() > 0 or vol.max() < 0:
        warnings.warn("level set is empty inside the box; returning empty mesh")
        return Mesh(np.zeros((0, 3)), np.zeros((0, 3), dtype=np.int64))
    step = 2.0 * box / (resolution - 1)
    verts, faces, _normals, _values = measure.marching_cubes(
        vol, level=0.0, spacing=(step, step, step)
    )
    verts = verts - box
    return Mesh(np.asarray(verts, dtype=float), np.asarray(faces, dtype=np.int64))


def mesh_real_variant(d: int, box: float, resolution: int) -> Mesh:
    """Mesh the zero set of the real variant of U_d."""
    return mesh_level_set(real_variant(d), box, resolution)


def mesh_to_obj(mesh: Mesh) -> str:
    """Wavefront OBJ text: vertices then 1-based triangular faces."""
    lines = []
    for vx, vy, vz in mesh.vertices:
        lines.append(f"v {vx:.6f} {vy:.6f} {vz:.6f}")
    for a, b, c in mesh.faces:
        lines.append(f"f {a + 1} {b + 1} {c + 1}")
    return "\n".join(lines) + ("\n" if lines else "")
