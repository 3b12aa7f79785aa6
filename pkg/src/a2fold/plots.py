"""Report figures rendered next to the census and singularity outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .critical import CriticalPoint
from .surfaces import SingularPoint

# triangle vertices in the (u, v) plane
_TRIANGLE = [(0.0, 0.0), (1.0 / 3.0, 1.0 / 3.0), (2.0 / 3.0, -1.0 / 3.0), (0.0, 0.0)]

_VALUE_STYLE = {
    6: dict(marker="o", facecolors="none", edgecolors="tab:red", label="value 6"),
    -2: dict(marker="*", color="tab:blue", label="value -2"),
    -3: dict(marker=".", color="black", label="value -3"),
}


def plot_critical_points(points: list[CriticalPoint], d: int, path: str) -> None:
    """Scatter of the critical points inside the fundamental triangle."""
    fig, ax = plt.subplots(figsize=(6, 5))
    tx = [p[0] for p in _TRIANGLE]
    ty = [p[1] for p in _TRIANGLE]
    ax.plot(tx, ty, color="gray", linewidth=1)
    for value, style in _VALUE_STYLE.items():
        us = [float(p.u) for p in points if p.value == value]
        vs = [float(p.v) for p in points if p.value == value]
        if us:
            ax.scatter(us, vs, s=40, **style)
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.set_title(f"critical points in the fundamental triangle, d = {d}")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_singular_points(points: list[SingularPoint], d: int, path: str) -> None:
    """Two panels: critical images in the complex plane, and residual sizes."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))
    for value, color in ((-2, "tab:blue"), (-3, "black")):
        xs = [p.x.real for p in points if p.q_value == value]
        ys = [p.x.imag for p in points if p.q_value == value]
        if xs:
            ax1.scatter(xs, ys, s=25, color=color, label=f"q-value {value}")
    ax1.set_xlabel("Re x")
    ax1.set_ylabel("Im x")
    ax1.set_title(f"first coordinates of singular points, d = {d}")
    ax1.legend(fontsize=8)
    ax1.set_aspect("equal")

    idx = range(len(points))
    ax2.semilogy(idx, [max(p.residual_f, 1e-18) for p in points], ".", label="|F|")
    ax2.semilogy(idx, [max(p.residual_grad, 1e-18) for p in points], "x",
                 markersize=4, label="|grad F|")
    ax2.set_xlabel("point index")
    ax2.set_ylabel("residual")
    ax2.set_title("certification residuals")
    ax2.legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
