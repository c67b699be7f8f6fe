"""Determinant-space full CI over the particle-number sector, built with
Slater-Condon rules. Independent of the Jordan-Wigner route by design: the
two paths cross-validate each other."""

from __future__ import annotations

import itertools

import numpy as np


def spin_orbital_integrals(h_mo: np.ndarray, g_mo: np.ndarray):
    """Interleave spins (spatial q -> spin orbitals 2q and 2q+1, spin-down
    even) and return (h_so, <PQ||RS>)."""
    n = h_mo.shape[0]
    nso = 2 * n
    h_so = np.zeros((nso, nso))
    for P in range(nso):
        for Q in range(P % 2, nso, 2):
            h_so[P, Q] = h_mo[P // 2, Q // 2]
    eri_phys = np.zeros((nso, nso, nso, nso))
    for P in range(nso):
        for R in range(P % 2, nso, 2):
            for Q in range(nso):
                for S in range(Q % 2, nso, 2):
                    # <PQ|RS> = (pr|qs) with matching spins on (P,R) and (Q,S)
                    eri_phys[P, Q, R, S] = g_mo[P // 2, R // 2, Q // 2, S // 2]
    return h_so, eri_phys - eri_phys.transpose(0, 1, 3, 2)


def _parity_remove(det: int, orb: int) -> int:
    return -1 if bin(det & ((1 << orb) - 1)).count("1") % 2 else 1


def fci_ground_energy(h_so: np.ndarray, anti: np.ndarray, n_electrons: int,
                      e_nuclear: float) -> float:
    """Smallest eigenvalue over all determinants of the given electron
    count (every Sz subsector included)."""
    nso = h_so.shape[0]
    dets = [d for d in range(1 << nso) if bin(d).count("1") == n_electrons]
    pos = {d: i for i, d in enumerate(dets)}
    dim = len(dets)
    mat = np.zeros((dim, dim))
    for a, det in enumerate(dets):
        occ = [p for p in range(nso) if (det >> p) & 1]
        virt = [p for p in range(nso) if not (det >> p) & 1]
        occ_arr = np.array(occ)
        mat[a, a] = (h_so[occ_arr, occ_arr].sum()
                     + 0.5 * anti[np.ix_(occ_arr, occ_arr, occ_arr,
                                         occ_arr)].trace(axis1=0, axis2=2)
                     .trace())
        for p in occ:
            others = occ_arr[occ_arr != p]
            for r in virt:
                det2 = det & ~(1 << p) | (1 << r)
                sign = _parity_remove(det, p) * _parity_remove(det & ~(1 << p), r)
                val = h_so[p, r] + anti[p, others, r, others].sum()
                mat[a, pos[det2]] += sign * val
        for p, q in itertools.combinations(occ, 2):
            for r, s in itertools.combinations(virt, 2):
                det2 = det & ~(1 << p) & ~(1 << q) | (1 << r) | (1 << s)
                d = det
                sign = 1
                for orb in (q, p):
                    sign *= _parity_remove(d, orb)
                    d &= ~(1 << orb)
                for orb in (r, s):
                    sign *= _parity_remove(d, orb)
                    d |= 1 << orb
                mat[a, pos[det2]] += sign * anti[p, q, r, s]
    return float(np.linalg.eigvalsh(mat)[0] + e_nuclear)
