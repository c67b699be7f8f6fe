"""Closed-shell restricted Hartree-Fock with DIIS."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .integrals import integral_tables, nuclear_repulsion


class ScfError(RuntimeError):
    """SCF failed to converge; the message carries the iteration log."""


@dataclass
class ScfResult:
    energy: float              # total RHF energy, Hartree
    mo_coefficients: np.ndarray
    orbital_energies: np.ndarray
    h_core: np.ndarray         # AO basis
    eri: np.ndarray            # AO basis, chemist notation (pq|rs)
    e_nuclear: float
    n_cycles: int


def run_rhf(atoms, n_electrons: int, max_cycles: int = 200,
            conv: float = 1e-12, diis_depth: int = 8) -> ScfResult:
    if n_electrons % 2:
        raise ValueError("restricted HF needs an even electron count")
    S, T, V, g = integral_tables(atoms)
    h = T + V
    e_nuc = nuclear_repulsion(atoms)
    n_occ = n_electrons // 2

    w, U = np.linalg.eigh(S)
    if w.min() < 1e-8:
        raise ScfError(f"near-singular overlap matrix (min eigenvalue {w.min():g})")
    X = U @ np.diag(w ** -0.5) @ U.T

    def fock(dm):
        J = np.einsum("pqrs,rs->pq", g, dm)
        K = np.einsum("prqs,rs->pq", g, dm)
        return h + J - 0.5 * K

    dm = np.zeros_like(h)
    energy = 0.0
    history = []
    errors, focks = [], []
    eps = C = None
    for cycle in range(1, max_cycles + 1):
        F = fock(dm)
        if cycle > 1:
            err = F @ dm @ S - S @ dm @ F
            errors.append(err)
            focks.append(F)
            if len(errors) > diis_depth:
                errors.pop(0)
                focks.pop(0)
            if len(errors) > 1:
                m = len(errors)
                B = -np.ones((m + 1, m + 1))
                B[m, m] = 0.0
                for a in range(m):
                    for b in range(m):
                        B[a, b] = float(np.einsum("pq,pq->", errors[a],
                                                  errors[b]))
                rhs = np.zeros(m + 1)
                rhs[m] = -1.0
                try:
                    coef = np.linalg.solve(B, rhs)[:m]
                    F = sum(c * fm for c, fm in zip(coef, focks))
                except np.linalg.LinAlgError:
                    pass
        eps, Cp = np.linalg.eigh(X.T @ F @ X)
        C = X @ Cp
        dm_new = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
        F_raw = fock(dm_new)
        e_new = 0.5 * float(np.einsum("pq,pq->", dm_new, h + F_raw)) + e_nuc
        history.append(e_new)
        dE = e_new - energy
        if cycle > 1 and abs(dE) < conv and np.max(np.abs(dm_new - dm)) < 1e-10:
            return ScfResult(e_new, C, eps, h, g, e_nuc, cycle)
        dm, energy = dm_new, e_new
    tail = ", ".join(f"{e:.10f}" for e in history[-5:])
    raise ScfError(f"SCF not converged after {max_cycles} cycles; "
                   f"last energies: {tail}")


def mo_integrals(result: ScfResult):
    """Spatial-MO core Hamiltonian and chemist-notation ERI tensor."""
    C = result.mo_coefficients
    h_mo = C.T @ result.h_core @ C
    g_mo = np.einsum("pi,qj,rk,sl,pqrs->ijkl", C, C, C, C, result.eri,
                     optimize=True)
    return h_mo, g_mo
