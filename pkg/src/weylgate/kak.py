"""KAK (Cartan) decomposition of two-qubit gates.

Any U in U(4) factors as

    U = e^{iα} · k1 · A(c) · k2,

with k1, k2 tensor products of single-qubit gates, c the canonical
coordinates reduced to the Weyl chamber, and A(c) the canonical gate.  The
factorization here is exact by construction: the chamber reduction is done
with explicit reflection gates and π-translation gates folded into k1, k2
and α, never by replacing coordinates numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .cartan import MAGIC, PAULIS, WEYL_REFLECTIONS
from .chamber import TOL_BASE, canonical_gate, coordinate_phase_pattern
from .errors import BranchSearchError, NotLocalError, VerificationError
from .invariants import m_matrix, m_spectrum, magic_transform
from .linalg import TOL_UNITARY, check_unitary, kron2

_PI = np.pi

# σa⊗σa words: conjugating A(c) by nothing, they implement the π translations
# A(c + π·e_j) = A(c)·(i·W_j); the i goes into the global phase, W_j into a
# neighboring local factor.
_TRANSLATION_WORDS = (
    kron2(PAULIS["x"], PAULIS["x"]),
    kron2(PAULIS["y"], PAULIS["y"]),
    kron2(PAULIS["z"], PAULIS["z"]),
)

_SWAP_LABEL = {(0, 1): "c2-c1", (1, 2): "c3-c2", (0, 2): "c1-c3"}


@dataclass(frozen=True)
class KakDecomposition:
    """U = e^{iα}·k1·a_factor·k2 with coords in the Weyl chamber.

    ``alpha`` is arg(det U)/4 plus the exact π/2 multiples absorbed while
    reducing to the chamber, wrapped to (-π, π].  ``a_factor`` equals
    canonical_gate(coords).  ``residual`` is the Frobenius reconstruction
    error actually measured.
    """

    alpha: float
    k1: np.ndarray
    k2: np.ndarray
    coords: np.ndarray
    a_factor: np.ndarray
    residual: float


def kak_reconstruct(d: KakDecomposition) -> np.ndarray:
    return np.exp(1j * d.alpha) * (d.k1 @ d.a_factor @ d.k2)


def is_local_gate(u, tol: float = 1e-8) -> bool:
    """True iff the magic-basis conjugate of ``u`` is real orthogonal.

    This recognizes exactly SU(2)⊗SU(2): a tensor product dressed with a
    global phase other than ±1 does NOT pass (its magic conjugate is complex).
    """
    u = check_unitary(u, tol=max(tol, TOL_UNITARY))
    o = magic_transform(u)
    if np.max(np.abs(o.imag)) > tol:
        return False
    r = o.real
    return bool(np.linalg.norm(r.T @ r - np.eye(4)) <= max(tol, 1e-9))


@dataclass(frozen=True)
class LocalFactors:
    """k = e^{i·phase}·(a ⊗ b) with a, b single-qubit gates of det 1."""

    a: np.ndarray
    b: np.ndarray
    phase: float


def factor_local(k, tol: float = 1e-8) -> LocalFactors:
    """Split a local gate into its single-qubit factors and a global phase.

    Accepts any e^{iφ}·(a⊗b); the test used is m(k) ∝ identity, which is
    phase-blind (strictly local gates come back with phase 0 or π).

    Raises
    ------
    NotLocalError
        If m(k) is not proportional to the identity within ``tol``, or the
        rank-one factorization leaves a residual above ``tol``.
    """
    k = check_unitary(k, tol=max(tol, TOL_UNITARY))
    m = m_matrix(k)
    m00 = m[0, 0]
    if abs(abs(m00) - 1.0) > tol or np.max(np.abs(m - m00 * np.eye(4))) > tol:
        raise NotLocalError("gate is not a tensor product of single-qubit gates")

    # Reshuffle k[(i,k),(j,l)] -> M[(i,j),(k,l)]; a tensor product becomes
    # the rank-one matrix vec(a)·vec(b)ᵀ.
    mm = k.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    p, q = np.unravel_index(np.argmax(np.abs(mm)), (4, 4))
    col = mm[:, q]
    row = mm[p, :] / mm[p, q]
    a = col.reshape(2, 2)
    b = row.reshape(2, 2)
    a = a / np.sqrt(np.linalg.det(a))
    b = b / np.sqrt(np.linalg.det(b))
    ab = kron2(a, b)
    phase = float(np.angle(np.trace(ab.conj().T @ k) / 4.0))
    resid = np.linalg.norm(k - np.exp(1j * phase) * ab)
    if resid > tol:
        raise NotLocalError(f"tensor factorization residual {resid:.3e} > {tol:.1e}")
    return LocalFactors(a=a, b=b, phase=phase)


class _Reducer:
    """Tracks A(c_start) = e^{iφ}·gl·A(c)·gr through exact chamber moves."""

    def __init__(self, c):
        self.c = np.asarray(c, dtype=float).copy()
        self.phase = 0.0
        self.gl = np.eye(4, dtype=complex)
        self.gr = np.eye(4, dtype=complex)

    def translate_to_mod_pi(self, axis: int) -> None:
        n = int(np.floor(self.c[axis] / _PI))
        if n == 0:
            return
        # A(c) = A(c - πn·e_axis)·(i·W)^n
        self.c[axis] -= _PI * n
        self.phase += n * _PI / 2.0
        if n % 2:
            self.gr = _TRANSLATION_WORDS[axis] @ self.gr

    def reflect(self, label: str) -> None:
        r = WEYL_REFLECTIONS[label]
        # A(c) = gate†·A(action·c)·gate
        self.c = r.action @ self.c
        self.gl = self.gl @ r.gate.conj().T
        self.gr = r.gate @ self.gr

    def sort_descending(self) -> None:
        for i, j in ((0, 1), (1, 2), (0, 1)):
            if self.c[i] < self.c[j]:
                self.reflect(_SWAP_LABEL[(i, j)])

    def reduce(self) -> None:
        for axis in range(3):
            self.translate_to_mod_pi(axis)
        self.sort_descending()
        guard = 0
        while self.c[0] + self.c[1] > _PI + 1e-15:
            guard += 1
            if guard > 30:
                raise BranchSearchError("chamber reduction did not terminate")
            self.reflect("c1+c2")  # -> (-c2, -c1, c3)
            self.translate_to_mod_pi(0)
            self.translate_to_mod_pi(1)
            self.sort_descending()
        if self.c[2] < TOL_BASE and self.c[0] > _PI / 2 + 1e-12:
            self.reflect("c1+c3")  # -> (-c3, c2, -c1)
            self.reflect("c1-c3")  # -> (-c1, c2, -c3)
            self.translate_to_mod_pi(0)  # -> (π-c1, c2, -c3)
            self.sort_descending()
        self.c = self.c + 0.0  # normalize any -0.0


def kak_decompose(u, tol: float = TOL_UNITARY) -> KakDecomposition:
    """Factor a two-qubit gate as e^{iα}·k1·A(c)·k2 with c in the chamber.

    Algorithm: scale to SU(4); in the magic basis, jointly diagonalize the
    real and imaginary parts of m = u_Bᵀu_B to get the eigenframe and
    balanced eigenphases; solve the phase pattern for raw coordinates; pick
    the square-root branch of the diagonal factor (8 sign patterns with
    det +1) that makes the left frame real; finally reduce the raw
    coordinates to the chamber with exact reflection/translation gates.

    Raises
    ------
    BranchSearchError
        If no sign pattern yields a real left frame.
    VerificationError
        If the reconstruction residual exceeds 1e-9.
    """
    u = check_unitary(u, tol=tol)
    alpha = float(np.angle(np.linalg.det(u)) / 4.0)
    u1 = np.exp(-1j * alpha) * u

    spec = m_spectrum(u, tol=tol)
    theta = spec.theta_balanced
    o2 = spec.frame
    ub = magic_transform(u1)

    c_raw = np.array(
        [
            (theta[0] + theta[1]) / 2.0,
            (theta[1] + theta[3]) / 2.0,
            (theta[0] + theta[3]) / 2.0,
        ]
    )
    f_base = np.exp(0.5j * coordinate_phase_pattern(c_raw))

    o1 = None
    signs_used = None
    for signs in product((1.0, -1.0), repeat=4):
        if signs[0] * signs[1] * signs[2] * signs[3] < 0:
            continue  # need det F = +1
        f = np.asarray(signs) * f_base
        cand = ub @ (o2.T * f.conj())
        if np.max(np.abs(cand.imag)) < 1e-8:
            o1 = cand
            signs_used = signs
            break
    if o1 is None:
        raise BranchSearchError("no square-root branch produced a real frame")

    # A sign flip on F entry k adds 2π to pattern entry k, which shifts the
    # raw coordinates by exact multiples of π:
    b = (1.0 - np.asarray(signs_used)) / 2.0
    c_adj = c_raw + _PI * np.array([b[0] + b[1], b[1] + b[3], b[0] + b[3]])

    k1 = MAGIC @ o1.real @ MAGIC.conj().T
    k2 = MAGIC @ o2 @ MAGIC.conj().T

    red = _Reducer(c_adj)
    red.reduce()
    coords = red.c
    alpha_out = alpha + red.phase
    alpha_out = float(np.angle(np.exp(1j * alpha_out)))  # wrap to (-π, π]
    k1_final = k1 @ red.gl
    k2_final = red.gr @ k2
    a_factor = canonical_gate(coords)

    rec = np.exp(1j * alpha_out) * (k1_final @ a_factor @ k2_final)
    residual = float(np.linalg.norm(u - rec))
    if residual > 1e-9:
        raise VerificationError(f"reconstruction residual {residual:.3e} > 1e-9")
    if not (is_local_gate(k1_final) and is_local_gate(k2_final)):
        raise VerificationError("a reduced outer factor failed local recognition")

    return KakDecomposition(
        alpha=alpha_out,
        k1=k1_final,
        k2=k2_final,
        coords=coords,
        a_factor=a_factor,
        residual=residual,
    )
