"""Shared helpers for the test suite: seeded random gates and states."""

import numpy as np

from weylgate import cartan_element, kron2


def rand_su2(rng):
    """A Haar-random SU(2) matrix."""
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return q / np.sqrt(np.linalg.det(q).astype(complex))


def rand_local(rng):
    """A Haar-random SU(2)xSU(2) gate on two qubits."""
    return kron2(rand_su2(rng), rand_su2(rng))


def rand_u4(rng):
    """A Haar-random U(4) matrix (QR of a complex Ginibre sample)."""
    z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_chamber_point(rng):
    """A uniform point of the canonical coordinate cell (rejection sampled)."""
    while True:
        c = np.sort(rng.uniform(0.0, np.pi, size=3))[::-1]
        if c[0] + c[1] <= np.pi:
            return c


def gate_at(coords, rng=None, phase=0.0):
    """The canonical gate at ``coords``, optionally dressed with random locals."""
    u = np.exp(1j * phase) * _canonical(coords)
    if rng is not None:
        u = rand_local(rng) @ u @ rand_local(rng)
    return u


def _canonical(coords):
    from weylgate import canonical_gate

    return canonical_gate(coords)


def rand_nonlocal_hamiltonian(rng, min_coeff=0.05):
    """A traceless two-body Hamiltonian whose Cartan coefficients all clear
    ``min_coeff`` in magnitude (rejection sampled)."""
    from weylgate import assemble_nonlocal, cartan_conjugate

    while True:
        coeffs = rng.uniform(-1.0, 1.0, size=9)
        h = assemble_nonlocal(coeffs)
        target = cartan_conjugate(h)
        if np.min(np.abs(target.coeffs)) >= min_coeff:
            return h


def isotropic_hamiltonian():
    """The swap-symmetric reference Hamiltonian (σxσx+σyσy+σzσz)/4."""
    return cartan_element([0.5, 0.5, 0.5])
