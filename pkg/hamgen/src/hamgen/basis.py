"""STO-3G basis data and contracted Cartesian Gaussians.

The standard STO-3G fits (to zeta = 1 Slater functions) are scaled per
element by zeta^2; 2s and 2p share exponents.
"""

from __future__ import annotations

import math

import numpy as np

ANGSTROM_TO_BOHR = 1.0 / 0.52917721092

STO3G_1S_EXP = np.array([2.227660584, 0.405771156, 0.109818])
STO3G_1S_COEF = np.array([0.154328967, 0.535328142, 0.444634542])
STO3G_2SP_EXP = np.array([0.994203, 0.231031, 0.0751386])
STO3G_2S_COEF = np.array([-0.099967229, 0.399512826, 0.700115469])
STO3G_2P_COEF = np.array([0.155916275, 0.607683719, 0.391957393])

# (zeta_1s, zeta_2sp); one-shell atoms carry only zeta_1s
ZETA = {
    "H": (1.24,),
    "He": (1.69,),
    "Li": (2.69, 0.80),
    "Be": (3.68, 1.15),
    "B": (4.68, 1.45),
    "C": (5.67, 1.72),
    "N": (6.67, 1.95),
    "O": (7.66, 2.25),
    "F": (8.65, 2.55),
}

ATOMIC_NUMBER = {"H": 1, "He": 2, "Li": 3, "Be": 4, "B": 5, "C": 6, "N": 7,
                 "O": 8, "F": 9}


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


class BasisFunction:
    """Contracted Cartesian Gaussian with angular momentum (l, m, n)."""

    def __init__(self, center, lmn, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.lmn = tuple(lmn)
        self.exps = np.asarray(exps, dtype=float)
        l, m, n = lmn
        norms = ((2 * self.exps / np.pi) ** 0.75
                 * (4 * self.exps) ** ((l + m + n) / 2.0)
                 / math.sqrt(double_factorial(2 * l - 1)
                             * double_factorial(2 * m - 1)
                             * double_factorial(2 * n - 1)))
        self.coefs = np.asarray(coefs, dtype=float) * norms

    def renormalize(self, self_overlap: float) -> None:
        self.coefs = self.coefs / math.sqrt(self_overlap)


def build_basis(atoms) -> "list[BasisFunction]":
    """atoms: list of (symbol, xyz_bohr) -> contracted functions in atom
    order, shells ordered 1s, 2s, 2px, 2py, 2pz."""
    from .integrals import overlap

    basis = []
    for sym, xyz in atoms:
        zetas = ZETA[sym]
        basis.append(BasisFunction(xyz, (0, 0, 0),
                                   STO3G_1S_EXP * zetas[0] ** 2, STO3G_1S_COEF))
        if len(zetas) > 1:
            sp_exps = STO3G_2SP_EXP * zetas[1] ** 2
            basis.append(BasisFunction(xyz, (0, 0, 0), sp_exps, STO3G_2S_COEF))
            for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                basis.append(BasisFunction(xyz, lmn, sp_exps, STO3G_2P_COEF))
    for bf in basis:
        bf.renormalize(overlap(bf, bf))
    return basis
