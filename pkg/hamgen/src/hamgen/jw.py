"""Jordan-Wigner mapping of the second-quantized molecular Hamiltonian to a
real-weighted Pauli sum.

Conventions match the consumer package: qubit p carries spin orbital p
(spatial q -> qubits 2q/2q+1, spin-down even), qubit 0 is the least
significant bit, and position p of a term string acts on qubit p.
"""

from __future__ import annotations

IMAG_DROP_TOL = 1e-12
COEFF_DROP_TOL = 1e-12

_MULT = {
    ("I", "I"): (1, "I"), ("I", "X"): (1, "X"), ("I", "Y"): (1, "Y"),
    ("I", "Z"): (1, "Z"),
    ("X", "I"): (1, "X"), ("Y", "I"): (1, "Y"), ("Z", "I"): (1, "Z"),
    ("X", "X"): (1, "I"), ("Y", "Y"): (1, "I"), ("Z", "Z"): (1, "I"),
    ("X", "Y"): (1j, "Z"), ("Y", "X"): (-1j, "Z"),
    ("Y", "Z"): (1j, "X"), ("Z", "Y"): (-1j, "X"),
    ("Z", "X"): (1j, "Y"), ("X", "Z"): (-1j, "Y"),
}


class NonHermitianError(RuntimeError):
    """The mapped operator kept an imaginary coefficient above tolerance."""


def _ladder_strings(orb: int, nso: int, dagger: bool):
    """a_orb (or its adjoint) as two weighted strings with the Z chain on
    qubits below orb."""
    base = ["Z"] * orb + ["I"] * (nso - orb)
    sx, sy = base.copy(), base.copy()
    sx[orb] = "X"
    sy[orb] = "Y"
    return [(0.5, "".join(sx)), (-0.5j if dagger else 0.5j, "".join(sy))]


def _multiply(acc, factors, nso):
    out = {}
    for c1, s1 in acc:
        for c2, s2 in factors:
            phase = c1 * c2
            chars = []
            for q in range(nso):
                ph, ch = _MULT[(s1[q], s2[q])]
                phase *= ph
                chars.append(ch)
            key = "".join(chars)
            out[key] = out.get(key, 0.0) + phase
    return [(c, s) for s, c in out.items() if c != 0.0]


def jordan_wigner(h_so, g_mo, e_nuclear: float):
    """Map  sum h_PQ a+_P a_Q
          + 1/2 sum_(pqrs,spins) (pq|rs) a+_(p,s1) a+_(r,s2) a_(s,s2) a_(q,s1)
    to (constant, [(coeff, paulis), ...]) with terms sorted by string."""
    nso = h_so.shape[0]
    acc: dict = {}

    def add_product(coeff, ops):
        strings = [(1.0 + 0.0j, "I" * nso)]
        for orb, dagger in ops:
            strings = _multiply(strings, _ladder_strings(orb, nso, dagger), nso)
        for c, s in strings:
            acc[s] = acc.get(s, 0.0) + coeff * c

    for P in range(nso):
        for Q in range(P % 2, nso, 2):
            if abs(h_so[P, Q]) > 1e-14:
                add_product(h_so[P, Q], [(P, True), (Q, False)])

    n_sp = g_mo.shape[0]
    for p in range(n_sp):
        for q in range(n_sp):
            for r in range(n_sp):
                for s in range(n_sp):
                    val = g_mo[p, q, r, s]
                    if abs(val) < 1e-14:
                        continue
                    for s1 in range(2):
                        for s2 in range(2):
                            P, Q = 2 * p + s1, 2 * q + s1
                            R, S = 2 * r + s2, 2 * s + s2
                            if P == R or Q == S:
                                continue
                            add_product(0.5 * val,
                                        [(P, True), (R, True),
                                         (S, False), (Q, False)])

    constant = e_nuclear
    terms = []
    for string, coeff in acc.items():
        if abs(coeff.imag) >= IMAG_DROP_TOL:
            raise NonHermitianError(
                f"imaginary coefficient {coeff.imag:g} on {string}")
        value = coeff.real
        if abs(value) < COEFF_DROP_TOL:
            continue
        if set(string) == {"I"}:
            constant += value
        else:
            terms.append((value, string))
    terms.sort(key=lambda t: t[1])
    return constant, terms
