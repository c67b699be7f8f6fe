"""McMurchie-Davidson one- and two-electron integrals over contracted
Cartesian Gaussians (s and p shells)."""

from __future__ import annotations

import itertools
import math

import numpy as np
from scipy.special import hyp1f1

from .basis import ATOMIC_NUMBER, build_basis


def boys(m: int, t: float) -> float:
    return hyp1f1(m + 0.5, m + 1.5, -t) / (2 * m + 1)


def hermite_e(i, j, t, qx, a, b):
    """Hermite expansion coefficient E_t^{ij} for a Gaussian product."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * qx * qx)
    if j == 0:
        return (hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
                - q * qx / a * hermite_e(i - 1, j, t, qx, a, b)
                + (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b))
    return (hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
            + q * qx / b * hermite_e(i, j - 1, t, qx, a, b)
            + (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b))


def hermite_coulomb(t, u, v, n, p, PC):
    """Auxiliary Hermite Coulomb integral R^n_{tuv}."""
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * float(PC @ PC))
    if t > 0:
        val = PC[0] * hermite_coulomb(t - 1, u, v, n + 1, p, PC)
        if t > 1:
            val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, PC)
        return val
    if u > 0:
        val = PC[1] * hermite_coulomb(t, u - 1, v, n + 1, p, PC)
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, PC)
        return val
    val = PC[2] * hermite_coulomb(t, u, v - 1, n + 1, p, PC)
    if v > 1:
        val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, PC)
    return val


def prim_overlap(a, lmn1, A, b, lmn2, B):
    p = a + b
    val = 1.0
    for x in range(3):
        val *= hermite_e(lmn1[x], lmn2[x], 0, A[x] - B[x], a, b)
    return val * (np.pi / p) ** 1.5


def prim_kinetic(a, lmn1, A, b, lmn2, B):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * prim_overlap(a, lmn1, A, b, lmn2, B)
    term1 = -2 * b * b * (
        prim_overlap(a, lmn1, A, b, (l2 + 2, m2, n2), B)
        + prim_overlap(a, lmn1, A, b, (l2, m2 + 2, n2), B)
        + prim_overlap(a, lmn1, A, b, (l2, m2, n2 + 2), B))
    term2 = -0.5 * (
        l2 * (l2 - 1) * prim_overlap(a, lmn1, A, b, (l2 - 2, m2, n2), B)
        + m2 * (m2 - 1) * prim_overlap(a, lmn1, A, b, (l2, m2 - 2, n2), B)
        + n2 * (n2 - 1) * prim_overlap(a, lmn1, A, b, (l2, m2, n2 - 2), B))
    return term0 + term1 + term2


def prim_nuclear(a, lmn1, A, b, lmn2, B, C):
    p = a + b
    P = (a * A + b * B) / p
    PC = P - C
    val = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        et = hermite_e(lmn1[0], lmn2[0], t, A[0] - B[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            eu = hermite_e(lmn1[1], lmn2[1], u, A[1] - B[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                ev = hermite_e(lmn1[2], lmn2[2], v, A[2] - B[2], a, b)
                val += et * eu * ev * hermite_coulomb(t, u, v, 0, p, PC)
    return 2.0 * np.pi / p * val


def prim_eri(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * A + b * B) / p
    Q = (c * C + d * D) / q
    PQ = P - Q
    val = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        e1t = hermite_e(lmn1[0], lmn2[0], t, A[0] - B[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            e1u = hermite_e(lmn1[1], lmn2[1], u, A[1] - B[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                e1v = hermite_e(lmn1[2], lmn2[2], v, A[2] - B[2], a, b)
                e1 = e1t * e1u * e1v
                if e1 == 0.0:
                    continue
                for tt in range(lmn3[0] + lmn4[0] + 1):
                    e2t = hermite_e(lmn3[0], lmn4[0], tt, C[0] - D[0], c, d)
                    for uu in range(lmn3[1] + lmn4[1] + 1):
                        e2u = hermite_e(lmn3[1], lmn4[1], uu, C[1] - D[1], c, d)
                        for vv in range(lmn3[2] + lmn4[2] + 1):
                            e2v = hermite_e(lmn3[2], lmn4[2], vv,
                                            C[2] - D[2], c, d)
                            e2 = e2t * e2u * e2v
                            if e2 == 0.0:
                                continue
                            val += (e1 * e2 * (-1.0) ** (tt + uu + vv)
                                    * hermite_coulomb(t + tt, u + uu, v + vv,
                                                      0, alpha, PQ))
    return val * 2.0 * np.pi ** 2.5 / (p * q * math.sqrt(p + q))


def _contract2(fn, bf1, bf2, *extra):
    val = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            val += ca * cb * fn(a, bf1.lmn, bf1.center, b, bf2.lmn, bf2.center,
                                *extra)
    return val


def overlap(bf1, bf2):
    return _contract2(prim_overlap, bf1, bf2)


def kinetic(bf1, bf2):
    return _contract2(prim_kinetic, bf1, bf2)


def nuclear(bf1, bf2, atoms):
    val = 0.0
    for sym, xyz in atoms:
        val -= ATOMIC_NUMBER[sym] * _contract2(
            prim_nuclear, bf1, bf2, np.asarray(xyz, dtype=float))
    return val


def eri(bf1, bf2, bf3, bf4):
    val = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            for c, cc in zip(bf3.exps, bf3.coefs):
                for d, cd in zip(bf4.exps, bf4.coefs):
                    val += ca * cb * cc * cd * prim_eri(
                        a, bf1.lmn, bf1.center, b, bf2.lmn, bf2.center,
                        c, bf3.lmn, bf3.center, d, bf4.lmn, bf4.center)
    return val


def integral_tables(atoms):
    """S, T, V matrices and the chemist-notation tensor (pq|rs), using the
    8-fold permutational symmetry of real orbitals."""
    basis = build_basis(atoms)
    nb = len(basis)
    S = np.empty((nb, nb))
    T = np.empty((nb, nb))
    V = np.empty((nb, nb))
    for p in range(nb):
        for q in range(p + 1):
            S[p, q] = S[q, p] = overlap(basis[p], basis[q])
            T[p, q] = T[q, p] = kinetic(basis[p], basis[q])
            V[p, q] = V[q, p] = nuclear(basis[p], basis[q], atoms)
    g = np.zeros((nb, nb, nb, nb))
    for p in range(nb):
        for q in range(p + 1):
            for r in range(p + 1):
                s_max = q if r == p else r
                for s in range(s_max + 1):
                    val = eri(basis[p], basis[q], basis[r], basis[s])
                    for (i, j, k, l) in {(p, q, r, s), (q, p, r, s),
                                         (p, q, s, r), (q, p, s, r),
                                         (r, s, p, q), (s, r, p, q),
                                         (r, s, q, p), (s, r, q, p)}:
                        g[i, j, k, l] = val
    return S, T, V, g


def nuclear_repulsion(atoms) -> float:
    e = 0.0
    for (s1, x1), (s2, x2) in itertools.combinations(atoms, 2):
        dist = np.linalg.norm(np.asarray(x1, dtype=float)
                              - np.asarray(x2, dtype=float))
        e += ATOMIC_NUMBER[s1] * ATOMIC_NUMBER[s2] / dist
    return e
