"""Shared fixtures and independent numerical oracles.

The oracles here deliberately avoid the code paths used by the package:
spectral norms come from power iteration on the Gram matrix, numerical
radii from alternating ascent over the field of values (and from a flat
dense angle grid with no refinement), so agreement between package and
oracle is evidence rather than tautology.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from aradius import make_context

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


# --------------------------------------------------------------------------
# random input helpers


def cgauss(rng: np.random.Generator, *shape) -> np.ndarray:
    """Standard complex Gaussian array."""
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_psd(rng: np.random.Generator, n: int, rank: int | None = None) -> np.ndarray:
    """Random PSD weight, optionally rank-deficient, spectral norm ~1."""
    g = cgauss(rng, n, n)
    if rank is not None and rank < n:
        d = np.zeros(n)
        d[:rank] = rng.uniform(0.5, 2.0, rank)
        a = g.conj().T @ np.diag(d) @ g
    else:
        a = g @ g.conj().T / n + 1e-3 * np.eye(n)
    return a / np.linalg.norm(a, 2)


def random_context(rng: np.random.Generator, n: int, rank: int | None = None):
    return make_context(random_psd(rng, n, rank))


# --------------------------------------------------------------------------
# independent oracles


def oracle_spectral_norm(m, iters: int = 600, seed: int = 0) -> float:
    """Largest singular value via power iteration on the Gram matrix."""
    m = np.asarray(m, dtype=np.complex128)
    gram = m.conj().T @ m
    rng = np.random.default_rng(seed)
    v = cgauss(rng, gram.shape[0])
    v /= np.linalg.norm(v)
    for _ in range(iters):
        w = gram @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
    return float(np.sqrt(np.real(np.vdot(v, gram @ v))))


def oracle_radius(m, restarts: int = 24, iters: int = 120, seed: int = 0) -> float:
    """Classical numerical radius by alternating ascent.

    For a fixed angle the maximizer of ``Re e^{-i t} <Mx, x>`` over unit
    vectors is the top eigenvector of the Hermitian part of
    ``e^{-i t} M``; updating the angle to ``arg <Mx, x>`` and repeating
    climbs to a local maximum of ``|<Mx, x>|``.  Multi-start makes it a
    reliable global value at the dimensions used in this suite.
    """
    m = np.asarray(m, dtype=np.complex128)
    n = m.shape[0]
    rng = np.random.default_rng(seed)
    best = 0.0
    starts = [cgauss(rng, n) for _ in range(restarts)] + [e for e in np.eye(n)]
    for x in starts:
        x = np.asarray(x, dtype=np.complex128)
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        x = x / nx
        for _ in range(iters):
            val = complex(np.vdot(x, m @ x))
            theta = 0.0 if val == 0 else np.angle(val)
            h = 0.5 * (np.exp(-1j * theta) * m + np.exp(1j * theta) * m.conj().T)
            vals, vecs = np.linalg.eigh(h)
            x_new = vecs[:, -1]
            if np.linalg.norm(x_new - x) < 1e-14 or np.linalg.norm(x_new + x) < 1e-14:
                x = x_new
                break
            x = x_new
        best = max(best, abs(complex(np.vdot(x, m @ x))))
    return float(best)


def oracle_radius_grid(m, k: int = 16384) -> float:
    """Numerical radius from a flat dense angle grid, no refinement.

    Batched eigensolves of the Hermitian parts ``H_t`` for ``k`` equally
    spaced angles; the maximum top eigenvalue is the radius up to the
    quadratic grid error.
    """
    m = np.asarray(m, dtype=np.complex128)
    thetas = np.linspace(0.0, 2.0 * np.pi, k, endpoint=False)
    phases = np.exp(-1j * thetas)[:, None, None]
    h = 0.5 * (phases * m[None, :, :] + np.conj(phases) * m.conj().T[None, :, :])
    tops = np.linalg.eigvalsh(h)[:, -1]
    return float(np.max(tops))


def penrose_defect(m, mp) -> float:
    """Largest residual of the four Moore-Penrose identities."""
    m = np.asarray(m, dtype=np.complex128)
    mp = np.asarray(mp, dtype=np.complex128)
    r1 = np.linalg.norm(m @ mp @ m - m, 2)
    r2 = np.linalg.norm(mp @ m @ mp - mp, 2)
    r3 = np.linalg.norm((m @ mp).conj().T - m @ mp, 2)
    r4 = np.linalg.norm((mp @ m).conj().T - mp @ m, 2)
    return float(max(r1, r2, r3, r4))


def a_unit_vector(ctx, rng: np.random.Generator) -> np.ndarray:
    """Random vector normalized to A-norm one (range component kept)."""
    from aradius import vec_seminorm

    for _ in range(64):
        x = ctx.range_proj @ cgauss(rng, ctx.dim)
        nx = vec_seminorm(ctx, x)
        if nx > 1e-8:
            return x / nx
    raise AssertionError("could not draw an A-unit vector")


# --------------------------------------------------------------------------
# fixtures


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


@pytest.fixture
def identity_ctx():
    return make_context(np.eye(3))


@pytest.fixture
def diag_ctx():
    return make_context(np.diag([1.0, 2.0]))


@pytest.fixture
def rank1_ctx():
    return make_context(np.ones((2, 2)))


# --------------------------------------------------------------------------
# acceptance summary lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one verdict line per acceptance criterion."""
    lines = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            tag = name.replace("test_criterion_", "")
            num, _, label = tag.partition("_")
            verdict = "PASS" if status == "passed" else "FAIL"
            lines[int(num)] = (
                f"criterion {num} [{verdict}] {label.replace('_', ' ')}"
            )
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(lines):
            terminalreporter.write_line(lines[num])
