"""Canonical (Weyl-chamber) coordinates of two-qubit gates.

Every two-qubit gate is, up to single-qubit gates and a global phase, the
canonical gate

    A(c) = exp((i/2)(c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz)),

and the coordinate triple c is unique once reduced to the chamber

    c1 ≥ c2 ≥ c3 ≥ 0,   c1 + c2 ≤ π,   and  c1 ≤ π/2 whenever c3 = 0.

The symmetry group identifying equivalent triples is generated by
permutations, paired sign flips, and translations by π on each axis; on the
c3 = 0 face there is one extra identification [c1, c2, 0] ~ [π-c1, c2, 0].

Named reference points in the chamber (useful constants)::

    O = [0,0,0] identity     A1 = [π,0,0] identity (far corner)
    A2 = [π/2,π/2,0] iSWAP class     A3 = [π/2,π/2,π/2] SWAP
    L = [π/2,0,0] CNOT class         M = [3π/4,π/4,0]
    N = [3π/4,π/4,π/4] inverse-sqrt-SWAP class
    P = [π/4,π/4,π/4] sqrt-SWAP class      Q = [π/4,π/4,0]
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .cartan import MAGIC
from .errors import VerificationError
from .invariants import (
    LocalInvariants,
    invariant_distance,
    invariants_from_coords,
    local_invariants,
    m_spectrum,
)
from .linalg import TOL_UNITARY, check_unitary

TOL_BASE = 1e-9  # below this, c3 counts as "on the base" for the mirror rule
_TOL_CHAMBER = 1e-12  # slack for the closed chamber inequalities
_TOL_DEDUPE = 1e-12

PI = np.pi

VERTEX_O = np.array([0.0, 0.0, 0.0])
VERTEX_A1 = np.array([PI, 0.0, 0.0])
VERTEX_A2 = np.array([PI / 2, PI / 2, 0.0])
VERTEX_A3 = np.array([PI / 2, PI / 2, PI / 2])
VERTEX_L = np.array([PI / 2, 0.0, 0.0])
VERTEX_M = np.array([3 * PI / 4, PI / 4, 0.0])
VERTEX_N = np.array([3 * PI / 4, PI / 4, PI / 4])
VERTEX_P = np.array([PI / 4, PI / 4, PI / 4])
VERTEX_Q = np.array([PI / 4, PI / 4, 0.0])

# The 4 sign patterns with an even number of flips, and all 6 permutations:
# together (mod π on each axis) they generate the full identification group.
_EVEN_SIGNS = np.array(
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
)
_PERMS = tuple(permutations(range(3)))


def in_chamber(c, tol: float = _TOL_CHAMBER) -> bool:
    """Closed chamber membership test (base-mirror rule included)."""
    c1, c2, c3 = (float(x) for x in np.asarray(c, dtype=float))
    if not (c1 >= c2 - tol and c2 >= c3 - tol and c3 >= -tol):
        return False
    if c1 + c2 > PI + tol:
        return False
    if c3 <= TOL_BASE and c1 > PI / 2 + tol:
        return False
    return True


def weyl_orbit(c, dedupe_tol: float = _TOL_DEDUPE) -> list[np.ndarray]:
    """All images of a coordinate triple under the identification group,
    reduced mod π to [0, π)³ and deduplicated.  Sorted lexicographically."""
    c = np.asarray(c, dtype=float)
    if c.shape != (3,):
        raise ValueError("coords must be a length-3 vector")
    pts = []
    for s in _EVEN_SIGNS:
        base = np.mod(s * c, PI)
        for p in _PERMS:
            pts.append(base[list(p)])
    pts.sort(key=tuple)
    out: list[np.ndarray] = []
    for p in pts:
        if not out or np.max(np.abs(p - out[-1])) > dedupe_tol:
            out.append(p)
    return out


def canonicalize(c) -> np.ndarray:
    """The chamber representative of a coordinate triple.

    Scans the full orbit for points satisfying the chamber inequalities,
    takes the lexicographically least (which settles boundary ties), and
    then applies the base-mirror rule: if c3 < 1e-9 and c1 > π/2, replace
    c1 by π - c1 and re-sort.
    """
    candidates = [p for p in weyl_orbit(c) if _chamber_pre(p)]
    if not candidates:
        # Floating-point edge: every candidate missed a closed inequality by
        # ~1 ulp. Retry with a loose slack; the result is still in the
        # chamber to machine precision.
        candidates = [p for p in weyl_orbit(c) if _chamber_pre(p, tol=1e-9)]
    if not candidates:
        raise VerificationError(f"no chamber representative found for {c!r}")
    best = candidates[0]  # orbit list is lexicographically sorted
    c1, c2, c3 = best
    if c3 < TOL_BASE and c1 > PI / 2 + _TOL_CHAMBER:
        mirrored = np.sort(np.array([PI - c1, c2, c3]))[::-1]
        return mirrored
    return best.copy()


def _chamber_pre(p, tol: float = _TOL_CHAMBER) -> bool:
    """Chamber inequalities without the base-mirror rule."""
    return (
        p[0] >= p[1] - tol
        and p[1] >= p[2] - tol
        and p[2] >= -tol
        and p[0] + p[1] <= PI + tol
    )


def coords_of_inverse(c) -> np.ndarray:
    """Canonical coordinates of U⁻¹ given those of U: mirror of c1 through π/2
    on the π-translated axis, i.e. canonicalize([π-c1, c2, c3])."""
    c = np.asarray(c, dtype=float)
    return canonicalize(np.array([PI - c[0], c[1], c[2]]))


def gate_coords(u, tol: float = TOL_UNITARY, verify_tol: float = 1e-8) -> np.ndarray:
    """Canonical coordinates of an arbitrary two-qubit gate.

    Extracts the eigenphases θ of m(U) (balanced to sum to zero), solves the
    linear pattern for (c1, c2, c3) under every eigenvalue ordering, reduces
    each solution to the chamber, and keeps the ones whose closed-form
    invariants reproduce the gate's invariants within ``verify_tol``.  All
    survivors must agree; their common value is returned.  Other 2π branch
    choices need not be searched: they shift the solved triple by multiples
    of π, which the mod-π reduction already identifies.
    """
    u = check_unitary(u, tol=tol)
    theta = m_spectrum(u, tol=tol).theta_balanced
    target = local_invariants(u, tol=tol)

    raw: list[tuple[float, float, float]] = []
    for p in _PERMS4:
        t = theta[list(p)]
        raw.append(
            (
                (t[0] + t[1]) / 2.0,
                (t[1] + t[3]) / 2.0,
                (t[0] + t[3]) / 2.0,
            )
        )
    survivors: list[np.ndarray] = []
    for triple in dict.fromkeys((round(a, 12), round(b, 12), round(g, 12)) for a, b, g in raw):
        cand = canonicalize(np.array(triple))
        if invariant_distance(invariants_from_coords(cand), target) <= verify_tol:
            survivors.append(cand)
    if not survivors:
        raise VerificationError(
            "no eigenphase ordering reproduced the gate's invariants"
        )
    first = survivors[0]
    for s in survivors[1:]:
        if np.max(np.abs(s - first)) > 10 * verify_tol:
            raise VerificationError(
                "eigenphase orderings disagree on the canonical point"
            )
    return first


_PERMS4 = tuple(permutations(range(4)))


def canonical_gate(c) -> np.ndarray:
    """The canonical gate A(c) itself (exact, via its magic-basis diagonal).

    In the magic basis A(c) is diagonal with phases
    (c1-c2+c3, c1+c2-c3, -(c1+c2+c3), -c1+c2+c3)/2.
    """
    c = np.asarray(c, dtype=float)
    if c.shape != (3,):
        raise ValueError("coords must be a length-3 vector")
    ph = coordinate_phase_pattern(c) / 2.0
    return (MAGIC * np.exp(1j * ph)) @ MAGIC.conj().T


def coordinate_phase_pattern(c) -> np.ndarray:
    """The four magic-basis phase sums (twice the diagonal phases of A(c))."""
    c1, c2, c3 = (float(x) for x in np.asarray(c, dtype=float))
    return np.array([c1 - c2 + c3, c1 + c2 - c3, -(c1 + c2 + c3), -c1 + c2 + c3])


# ---------------------------------------------------------------------------
# Named gates


def _cnot() -> np.ndarray:
    return np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    )


def _cz() -> np.ndarray:
    return np.diag([1, 1, 1, -1]).astype(complex)


def _swap() -> np.ndarray:
    return np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    )


def _sqrt_swap() -> np.ndarray:
    s = _swap()
    # principal square root: (I + iS)·(1-i)/2 has square S
    return (1 - 1j) / 2 * (np.eye(4) + 1j * s)


def _sqrt_swap_inv() -> np.ndarray:
    return _sqrt_swap().conj().T


def controlled_gate(phases) -> np.ndarray:
    """Controlled one-qubit gate, parameterized by the rotation's canonical
    angles: control qubit 1, target action exp((i/2)(γ1σx+γ2σy+γ3σz))-like.

    Concretely ``diag-block`` form  |0⟩⟨0|⊗I + |1⟩⟨1|⊗V with
    V = exp(i(γ1 σx + γ2 σy + γ3 σz)); only the invariant class matters
    here, which depends on the γ's through the single angle |γ|.
    """
    g = np.asarray(phases, dtype=float)
    if g.shape != (3,):
        raise ValueError("controlled gate takes 3 rotation components")
    from .cartan import PAULIS  # local import to avoid a cycle at module load

    h = g[0] * PAULIS["x"] + g[1] * PAULIS["y"] + g[2] * PAULIS["z"]
    angle = np.linalg.norm(g)
    if angle < 1e-300:
        v = np.eye(2, dtype=complex)
    else:
        n = h / angle
        v = np.cos(angle) * np.eye(2) + 1j * np.sin(angle) * n
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = np.eye(2)
    out[2:, 2:] = v
    return out


_NAMED = {
    "identity": lambda: np.eye(4, dtype=complex),
    "cnot": _cnot,
    "cz": _cz,
    "swap": _swap,
    "sqrtswap": _sqrt_swap,
    "sqrtswap_inv": _sqrt_swap_inv,
    "iswap": lambda: np.array(
        [[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}


def named_gate(name: str) -> np.ndarray:
    """Look up a standard gate by name.

    Known names: identity, cnot, cz, swap, sqrtswap, sqrtswap_inv, iswap,
    and ``cu(γ1,γ2,γ3)`` for the controlled rotation family.
    """
    key = name.strip().lower().replace("-", "_")
    if key in _NAMED:
        return _NAMED[key]()
    if key.startswith("cu(") and key.endswith(")"):
        parts = key[3:-1].split(",")
        if len(parts) != 3:
            raise ValueError("UnknownGate: cu(...) takes exactly 3 numbers")
        return controlled_gate([float(p) for p in parts])
    raise ValueError(
        f"UnknownGate: {name!r}; known: {sorted(_NAMED)} or cu(a,b,c)"
    )
