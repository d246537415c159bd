from types import SimpleNamespace

import numpy as np
import pytest

from sjd.domains import FCPoint, SJDiskPoint, SJUHPPoint, fc_forward, sample_disk, sample_plane, sample_uhp
from sjd.geometry import (
    HermitianMetric2,
    ModelParams,
    RealTwoForm,
    annihilator_residual,
    diff_op_coeffs,
    disk_action_map,
    fc1_map,
    fc_action_map,
    fc_inverse_map,
    fc_map,
    gram_matrix,
    kahler_potential,
    kernel,
    kernel_fc,
    log_kernel,
    log_kernel_fc,
    measure_density,
    metric,
    partial_cayley_map,
    pullback,
    to_real_two_form,
    top_form_check,
    two_form,
    uhp_action_map,
)
from sjd.group import random_jacobi, random_sl2r
from sjd.numdiff import to_real

N = 1000


@pytest.fixture
def rng():
    return np.random.default_rng(4242)


def test_model_params():
    assert ModelParams().k == 1.0
    assert abs(ModelParams(1.5).lambda1 - 3 / (2 * np.pi ** 2)) < 1e-15
    with pytest.raises(ValueError):
        ModelParams(0.7)
    with pytest.raises(ValueError):
        ModelParams(1.2, strict=True)
    assert ModelParams(1.5, strict=True).k == 1.5


def test_kahler_potential_examples():
    assert kahler_potential(SJDiskPoint(0, 0)) == 0
    w = 0.3 - 0.6j
    assert abs(kahler_potential(SJDiskPoint(0, w), 1.5) + 3 * np.log(1 - abs(w) ** 2)) < 1e-15
    assert abs(kahler_potential(SJDiskPoint(1, 0.5)) - (2 + 2 * np.log(4 / 3))) < 1e-14


def test_kernel_examples(rng):
    assert kernel(SJDiskPoint(0, 0), SJDiskPoint(0, 0)) == 1
    z, w = sample_plane(rng, N), sample_disk(rng, N)
    p = SJDiskPoint(z, w)
    diag = log_kernel(p, p)
    assert np.max(np.abs(diag.imag)) < 1e-12
    assert np.max(np.abs(diag.real - kahler_potential(p))) < 1e-12
    small = SJDiskPoint(z / 3, w)
    assert np.max(np.abs(kernel(small, small) - np.exp(kahler_potential(small))) / np.exp(kahler_potential(small))) < 1e-12


def test_kernel_hermitian_symmetry(rng):
    p = SJDiskPoint(sample_plane(rng, N), sample_disk(rng, N))
    q = SJDiskPoint(sample_plane(rng, N), sample_disk(rng, N))
    assert np.max(np.abs(log_kernel(p, q) - np.conj(log_kernel(q, p)))) < 1e-11


def test_kernel_fc_examples():
    w = 0.2 + 0.7j
    assert abs(kernel_fc(FCPoint(0, w), FCPoint(0, w)) - (1 - abs(w) ** 2) ** -2) < 1e-12
    # 2F = 2 - 0.5 - 0.5
    assert abs(kernel_fc(FCPoint(1, 0.5), FCPoint(1, 0.5)) - 0.75 ** -2 * np.exp(0.5)) < 1e-13


def test_kernel_fc_substitution(rng):
    p = FCPoint(sample_plane(rng, N), sample_disk(rng, N))
    q = FCPoint(sample_plane(rng, N), sample_disk(rng, N))
    lhs = log_kernel_fc(p, q)
    rhs = log_kernel(fc_forward(p), fc_forward(q))
    # relative error of K is the absolute error of log K (phase wrapped)
    d = lhs - rhs
    d = d.real + 1j * np.angle(np.exp(1j * d.imag))
    assert np.max(np.abs(d)) < 1e-10


@pytest.mark.parametrize("n", [2, 5, 8])
def test_gram_psd(rng, n):
    for _ in range(50):
        pts = [SJDiskPoint(z, w) for z, w in zip(sample_plane(rng, n), sample_disk(rng, n))]
        G = gram_matrix(pts)
        assert np.max(np.abs(G - G.conj().T)) < 1e-12
        assert np.min(np.linalg.eigvalsh(G)) > -1e-9
        assert np.allclose(np.diag(G), 1)


def test_metric_examples():
    w, k = 0.4 - 0.5j, 1.5
    P = 1 - abs(w) ** 2
    assert np.allclose(metric("fc", (2 - 1j, w), k).h, np.diag([1, 2 * k / P ** 2]), atol=1e-15)
    assert np.allclose(metric("disk", (0, w), k).h, np.diag([1 / P, 2 * k / P ** 2]), atol=1e-15)
    assert np.allclose(metric("fc1", (3, 0.2 + 2j), k).h, np.diag([1, k / 8]), atol=1e-15)


def test_metric_disk_entries(rng):
    z, w = sample_plane(rng, 200), sample_disk(rng, 200)
    for i in range(200):
        P = 1 - abs(w[i]) ** 2
        eta = (z[i] + w[i] * np.conj(z[i])) / P
        h = metric("disk", (z[i], w[i])).h
        assert abs(h[0, 0] - 1 / P) < 1e-12 * abs(h[0, 0])
        assert abs(h[0, 1] - eta / P) < 1e-12 * abs(h[1, 1])
        assert abs(h[1, 1] - (2 / P ** 2 + abs(eta) ** 2 / P)) < 1e-12 * abs(h[1, 1])
        assert HermitianMetric2(h).is_positive_definite()


def _potential_ld(x):
    x = np.asarray(x, dtype=np.longdouble)
    i = np.clongdouble(1j)
    return kahler_potential(SimpleNamespace(z=x[0] + i * x[1], w=x[2] + i * x[3]))


def _complex_hessian_ld(z, w, h):
    # central differences of the potential evaluated in extended precision
    h = np.longdouble(h)
    x0 = np.array([z.real, z.imag, w.real, w.imag], dtype=np.longdouble)
    e = np.eye(4, dtype=np.longdouble) * h
    H = np.zeros((4, 4), dtype=np.longdouble)
    for a in range(4):
        for b in range(4):
            H[a, b] = (_potential_ld(x0 + e[a] + e[b]) - _potential_ld(x0 + e[a] - e[b])
                       - _potential_ld(x0 - e[a] + e[b]) + _potential_ld(x0 - e[a] - e[b])) / (4 * h * h)
    H = H.astype(float)
    return np.array([[0.25 * (H[2 * a, 2 * b] + H[2 * a + 1, 2 * b + 1] + 1j * (H[2 * a, 2 * b + 1] - H[2 * a + 1, 2 * b]))
                      for b in range(2)] for a in range(2)])


def test_metric_from_potential(rng):
    z, w = sample_plane(rng, 200), sample_disk(rng, 200, radius=0.7)
    err = max(np.max(np.abs(_complex_hessian_ld(z[i], w[i], 1e-5) - metric("disk", (z[i], w[i])).h)) for i in range(200))
    assert err < 1e-6


def test_metric_from_potential_near_boundary(rng):
    # entries grow like 1/P^2, so compare relative to the largest entry
    z, w = sample_plane(rng, 100), sample_disk(rng, 100)
    for i in range(100):
        h = metric("disk", (z[i], w[i])).h
        assert np.max(np.abs(_complex_hessian_ld(z[i], w[i], 1e-6) - h)) < 1e-6 * np.max(np.abs(h))


def test_real_form_convention():
    om = to_real_two_form(HermitianMetric2(np.eye(2))).omega
    blk = np.array([[0, 2], [-2, 0]])
    assert np.array_equal(om, np.block([[blk, np.zeros((2, 2))], [np.zeros((2, 2)), blk]]))


def test_real_form_antisymmetric_and_pfaffian(rng):
    for z, w in zip(sample_plane(rng, 100), sample_disk(rng, 100)):
        om = two_form("disk", (z, w), 1.5)
        assert np.array_equal(om.omega, -om.omega.T)
        assert om.pfaffian() > 0
        assert abs(om.pfaffian() ** 2 - np.linalg.det(om.omega)) < 1e-9 * np.linalg.det(om.omega)
    with pytest.raises(ValueError):
        RealTwoForm(np.ones((4, 4)))


def test_pullback_identity_map():
    from sjd.geometry import ChartMap
    ident = ChartMap("id", "disk", "disk", lambda a, b: (a, b), lambda a, b: (np.eye(2), np.zeros((2, 2))))
    p = (0.3 + 1j, 0.2 - 0.4j)
    assert np.allclose(pullback(ident, p).omega, two_form("disk", p).omega, atol=0, rtol=0)


@pytest.mark.parametrize("method,tol", [("analytic", 1e-9), ("fd", 1e-6)])
def test_fc_pullback_theorem(rng, method, tol):
    phi = fc_map()
    eta, w = sample_plane(rng, N), sample_disk(rng, N)
    err = max(np.max(np.abs(pullback(phi, (eta[i], w[i]), method=method).omega - two_form("fc", (eta[i], w[i])).omega))
              for i in range(N))
    assert err < tol


@pytest.mark.parametrize("method,tol", [("analytic", 1e-9), ("fd", 1e-6)])
def test_fc1_pullback_theorem(rng, method, tol):
    phi = fc1_map()
    eta, v = sample_plane(rng, N), sample_uhp(rng, N)
    err = max(np.max(np.abs(pullback(phi, (eta[i], v[i]), method=method).omega - two_form("fc1", (eta[i], v[i])).omega))
              for i in range(N))
    assert err < tol


def test_partial_cayley_pullback(rng):
    phi = partial_cayley_map()
    u, v = sample_plane(rng, 300), sample_uhp(rng, 300)
    for i in range(300):
        ref = two_form("uhp", (u[i], v[i])).omega
        assert np.max(np.abs(pullback(phi, (u[i], v[i])).omega - ref)) < 1e-9 * max(1, np.max(np.abs(ref)))


def test_broken_fc_fails_pullback():
    p = (1.0 + 0.5j, 0.4 + 0.2j)
    err = np.max(np.abs(pullback(fc_map(-1.0), p).omega - two_form("fc", p).omega))
    assert err > 1e-2


def test_fc_inverse_pullback(rng):
    phi = fc_inverse_map()
    for z, w in zip(sample_plane(rng, 200), sample_disk(rng, 200)):
        ref = two_form("disk", (z, w)).omega
        assert np.max(np.abs(pullback(phi, (z, w)).omega - ref)) < 1e-9 * max(1, np.max(np.abs(ref)))


@pytest.mark.parametrize("make", [fc_map, fc1_map, partial_cayley_map, fc_inverse_map])
def test_analytic_jacobians_match_fd(rng, make):
    phi = make()
    src = phi.source
    a = sample_plane(rng, 50)
    b = sample_uhp(rng, 50) if src in ("uhp", "fc1") else sample_disk(rng, 50)
    for x in zip(a, b):
        r = to_real(*x)
        assert np.max(np.abs(phi.jacobian(r) - phi.jacobian(r, "fd"))) < 1e-6 * max(1, np.max(np.abs(phi.jacobian(r))))


def test_group_invariance(rng):
    z, w, v = sample_plane(rng, 200), sample_disk(rng, 200), sample_uhp(rng, 200)
    worst = 0.0
    for i in range(200):
        j = random_jacobi(rng)
        for phi, p, chart in [(disk_action_map(j), (z[i], w[i]), "disk"), (fc_action_map(j), (z[i], w[i]), "fc")]:
            ref = two_form(chart, p).omega
            worst = max(worst, np.max(np.abs(pullback(phi, p).omega - ref)) / max(1, np.max(np.abs(ref))))
        phi = uhp_action_map(random_sl2r(rng), complex(*rng.uniform(-2, 2, 2)))
        ref = two_form("uhp", (z[i], v[i])).omega
        worst = max(worst, np.max(np.abs(pullback(phi, (z[i], v[i])).omega - ref)) / max(1, np.max(np.abs(ref))))
    assert worst < 1e-8


def test_action_jacobians_match_fd(rng):
    for _ in range(30):
        j = random_jacobi(rng)
        for phi in (disk_action_map(j), fc_action_map(j)):
            r = to_real(complex(*rng.uniform(-2, 2, 2)), 0.5 * complex(*rng.uniform(-1, 1, 2)))
            J = phi.jacobian(r)
            assert np.max(np.abs(J - phi.jacobian(r, "fd"))) < 1e-6 * max(1, np.max(np.abs(J)))


def test_measure_examples():
    assert measure_density("disk", (0, 0)) == 1
    assert measure_density("fc", (0, 0)) == 1
    assert measure_density("fc", (0, 0.5), 2.0) == pytest.approx(0.75 ** 2, rel=1e-15)


def test_measure_change_of_variables(rng):
    phi = fc_map()
    for eta, w in zip(sample_plane(rng, N), sample_disk(rng, N)):
        z = eta - w * np.conj(eta)
        det = abs(np.linalg.det(phi.jacobian(to_real(eta, w))))
        lhs = measure_density("disk", (z, w)) * det
        rhs = measure_density("fc", (eta, w))
        assert abs(lhs - rhs) < 1e-9 * rhs


def test_top_form_ratio_constant(rng):
    for k in (1.0, 1.5, 3.0):
        a, b = top_form_check((0.7, 0), k)
        assert abs(a - 4 * 2 * (2 * k)) < 1e-12
        ratios = [np.divide(*top_form_check((eta, w), k)) for eta, w in zip(sample_plane(rng, 100), sample_disk(rng, 100))]
        assert np.ptp(ratios) < 1e-12
    # omega_0 ^ omega_0 comes out as -2 times (-8k d nu'); reported, see README
    assert abs(ratios[0] + 2) < 1e-12


def test_diff_op_examples():
    c = diff_op_coeffs(SJDiskPoint(0, 0), 1.0)
    assert c["K+"] == (0, 0, 0) and c["K0"][0] == 1
    c = diff_op_coeffs(SJDiskPoint(1, 0.5), 1.0)
    assert c["K+"] == (1.5, 0.5, 0.25)
    assert c["a"] == (0, 1, 0) and c["K-"] == (0, 0, 1)
    assert c.as_array().shape == (5, 3)


def test_annihilator_residuals(rng):
    x, y = annihilator_residual(SJDiskPoint(0, 0), 1.0)
    assert np.all(x == 0) and np.all(y == 0)
    x, y = annihilator_residual(SJDiskPoint(1, 0.3), 1.0)
    assert np.linalg.norm(x) < 1e-12 and np.linalg.norm(y) < 1e-12
    worst = 0.0
    for z, w in zip(sample_plane(rng, 500), sample_disk(rng, 500)):
        for k in (1.0, 2.5):
            x, y = annihilator_residual(SJDiskPoint(z, w), k)
            worst = max(worst, np.max(np.abs(x)), np.max(np.abs(y)))
    assert worst < 1e-11


def test_printed_x_weight_leaves_residual():
    z, w, k = 1.0, 0.3, 2.0
    x, _ = annihilator_residual(SJDiskPoint(z, w), k, printed_x=True)
    assert abs(x[2] - w * (k - z)) < 1e-15
