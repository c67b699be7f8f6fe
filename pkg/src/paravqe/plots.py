"""Convergence figures for benchmark runs: energy error against cumulative
experiments and against cumulative CNOTs, one figure per molecule."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

ERROR_FLOOR = 1e-12   # clip for the log axis

STYLE = {
    "uccsd": dict(color="#1f77b4", marker="o"),
    "qubit-adapt": dict(color="#d62728", marker="s"),
    "qubit-excitation": dict(color="#2ca02c", marker="^"),
}
LINESTYLE = {"parabolic": "-", "nelder-mead": "--"}


def render_convergence(molecule: str, curves: dict, out_path) -> None:
    """curves: {(pool, optimizer): list of (error, cum_experiments, cum_cnots)}.

    Writes a two-panel PNG; errors below 1e-12 are clipped onto the log axis.
    """
    fig, (ax_exp, ax_cnot) = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for (pool, optimizer), rows in sorted(curves.items()):
        errors = [max(abs(r[0]), ERROR_FLOOR) for r in rows]
        experiments = [r[1] for r in rows]
        cnots = [r[2] for r in rows]
        style = dict(STYLE.get(pool, {}), linestyle=LINESTYLE.get(optimizer, "-"),
                     markersize=3, linewidth=1.0,
                     label=f"{pool} / {optimizer}")
        ax_exp.plot(experiments, errors, **style)
        ax_cnot.plot(cnots, errors, **style)
    ax_exp.set_xlabel("cumulative experiments")
    ax_cnot.set_xlabel("cumulative CNOTs")
    ax_exp.set_ylabel("|energy error| (Hartree)")
    ax_exp.set_yscale("log")
    ax_exp.set_xscale("log")
    for ax in (ax_exp, ax_cnot):
        ax.grid(True, which="both", alpha=0.3)
    ax_exp.legend(fontsize=7)
    fig.suptitle(molecule)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
