import numpy as np
import pytest

from sjd import InvariantError
from sjd.domains import FCPoint, SJDiskPoint, SJUHPPoint, fc_forward, fc_inverse, partial_cayley, sample_disk, sample_plane, sample_uhp
from sjd.group import (
    JacobiElement,
    SL2RElement,
    SU11Element,
    act_disk,
    act_fc,
    act_uhp,
    compose,
    inverse,
    jacobi_from_sl2r,
    random_jacobi,
    random_sl2r,
    star_conjugate,
)

E = JacobiElement.identity()


@pytest.fixture
def rng():
    return np.random.default_rng(77)


def close(j1, j2, tol=1e-10):
    return (abs(j1.g.a - j2.g.a) < tol and abs(j1.g.b - j2.g.b) < tol
            and abs(j1.alpha - j2.alpha) < tol and abs(j1.t - j2.t) < tol)


def test_su11_invariant_and_renormalisation():
    g = SU11Element(np.cosh(0.3) * (1 + 1e-11), np.sinh(0.3))
    assert abs(abs(g.a) ** 2 - abs(g.b) ** 2 - 1) < 1e-14
    with pytest.raises(InvariantError):
        SU11Element(1.0, 0.5)
    with pytest.raises(InvariantError):
        SL2RElement(1, 1, 1, 1)


def test_star_conjugate_examples():
    g = star_conjugate(SL2RElement.identity())
    assert abs(g.a - 1) < 1e-15 and abs(g.b) < 1e-15
    # C^-1 [[1,1],[0,1]] C = (1/2i) [[2i-1, 1], [-1, 2i+1]]
    g = star_conjugate(SL2RElement(1, 1, 0, 1))
    assert abs(g.a - (1 + 0.5j)) < 1e-15 and abs(g.b + 0.5j) < 1e-15


def test_star_conjugate_homomorphism(rng):
    for _ in range(100):
        m1, m2 = random_sl2r(rng), random_sl2r(rng)
        lhs = star_conjugate(m1 @ m2)
        rhs = star_conjugate(m1) @ star_conjugate(m2)
        assert abs(lhs.a - rhs.a) < 1e-12 and abs(lhs.b - rhs.b) < 1e-12
        assert abs(abs(lhs.a) ** 2 - abs(lhs.b) ** 2 - 1) < 1e-12


def test_group_axioms(rng):
    for _ in range(200):
        j1, j2, j3 = (random_jacobi(rng) for _ in range(3))
        assert close(compose(E, j1), j1) and close(compose(j1, E), j1)
        assert close(compose(compose(j1, j2), j3), compose(j1, compose(j2, j3)))
        assert close(compose(j1, inverse(j1)), E) and close(compose(inverse(j1), j1), E)
        assert close(inverse(inverse(j1)), j1)


def test_inverse_examples():
    assert close(inverse(E), E, 1e-15)
    j = JacobiElement(SU11Element.identity(), 0.3 - 1.2j, 0.7)
    assert close(inverse(j), JacobiElement(SU11Element.identity(), -0.3 + 1.2j, -0.7), 1e-15)


def test_long_composition_keeps_invariant(rng):
    js = [random_jacobi(rng, max_s=0.05, alpha_width=0.5) for _ in range(1000)]
    j = E
    for x in js:
        j = compose(j, x)
        assert abs(abs(j.g.a) ** 2 - abs(j.g.b) ** 2 - 1) < 1e-12 * (abs(j.g.a) ** 2 + abs(j.g.b) ** 2)
    for x in reversed(js):
        j = compose(j, inverse(x))
    assert close(j, E, 1e-8)


def test_act_disk_examples():
    p = SJDiskPoint(0.4 - 0.1j, 0.3 + 0.5j)
    q = act_disk(E, p)
    assert abs(q.z - p.z) < 1e-15 and abs(q.w - p.w) < 1e-15
    a0 = 1.1 + 0.7j
    q = act_disk(JacobiElement(SU11Element.identity(), a0), p)
    assert abs(q.z - (p.z + a0 - np.conj(a0) * p.w)) < 1e-15 and q.w == p.w
    th = 0.4
    q = act_disk(JacobiElement(SU11Element(np.exp(1j * th), 0)), p)
    assert abs(q.w - np.exp(2j * th) * p.w) < 1e-15


def test_act_uhp_examples():
    p = SJUHPPoint(0.4 - 0.1j, 0.3 + 2j)
    q = act_uhp(SL2RElement.identity(), 0, p)
    assert (q.u, q.v) == (p.u, p.v)
    q = act_uhp(SL2RElement.identity(), 0.5 + 2j, p)
    assert abs(q.u - (p.u + 2 * p.v + 0.5)) < 1e-15 and q.v == p.v


def test_act_fc_examples():
    p = FCPoint(0.4 - 0.1j, 0.3 + 0.5j)
    q = act_fc(E, p)
    assert abs(q.eta - p.eta) < 1e-15 and abs(q.w - p.w) < 1e-15
    q = act_fc(JacobiElement(SU11Element.identity(), 2 - 1j), p)
    assert abs(q.eta - (p.eta + 2 - 1j)) < 1e-15


def test_left_action_disk_and_fc(rng):
    z, w = sample_plane(rng, 300), sample_disk(rng, 300)
    for i in range(300):
        j1, j2 = random_jacobi(rng), random_jacobi(rng)
        p = SJDiskPoint(z[i], w[i])
        a = act_disk(compose(j1, j2), p)
        b = act_disk(j1, act_disk(j2, p))
        assert abs(a.z - b.z) < 1e-9 * (1 + abs(a.z)) and abs(a.w - b.w) < 1e-9
        f = FCPoint(z[i], w[i])
        a = act_fc(compose(j1, j2), f)
        b = act_fc(j1, act_fc(j2, f))
        assert abs(a.eta - b.eta) < 1e-9 * (1 + abs(a.eta)) and abs(a.w - b.w) < 1e-9


def test_right_action_ordering_fails():
    # a translation after a rotation distinguishes the two orderings
    j1 = JacobiElement(SU11Element.identity(), 1.0)
    j2 = JacobiElement(SU11Element(np.exp(0.5j), 0))
    p = SJDiskPoint(0.2, 0.3)
    a = act_disk(compose(j1, j2), p)
    b = act_disk(j2, act_disk(j1, p))
    assert abs(a.z - b.z) > 1e-3


def test_left_action_uhp(rng):
    u, v = sample_plane(rng, 200), sample_uhp(rng, 200)
    for i in range(200):
        h1, h2 = random_sl2r(rng), random_sl2r(rng)
        a1, a2 = complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2))
        j = compose(jacobi_from_sl2r(h1, a1), jacobi_from_sl2r(h2, a2))
        p = SJUHPPoint(u[i], v[i])
        seq = act_uhp(h1, a1, act_uhp(h2, a2, p))
        one = partial_cayley(seq)
        via = act_disk(j, partial_cayley(p))
        assert abs(one.z - via.z) < 1e-9 * (1 + abs(via.z)) and abs(one.w - via.w) < 1e-9


def test_actions_preserve_domains(rng):
    z, w, v = sample_plane(rng, 500), sample_disk(rng, 500), sample_uhp(rng, 500)
    for i in range(500):
        j = random_jacobi(rng)
        assert abs(act_disk(j, SJDiskPoint(z[i], w[i])).w) < 1
        assert abs(act_fc(j, FCPoint(z[i], w[i])).w) < 1
        assert act_uhp(random_sl2r(rng), z[i], SJUHPPoint(z[i], v[i])).v.imag > 0


def test_uhp_disk_compatibility(rng):
    u, v = sample_plane(rng, 500), sample_uhp(rng, 500)
    for i in range(500):
        h = random_sl2r(rng)
        alpha = complex(*rng.uniform(-2, 2, 2))
        p = SJUHPPoint(u[i], v[i])
        lhs = partial_cayley(act_uhp(h, alpha, p))
        rhs = act_disk(jacobi_from_sl2r(h, alpha), partial_cayley(p))
        assert abs(lhs.z - rhs.z) < 1e-9 * (1 + abs(rhs.z)) and abs(lhs.w - rhs.w) < 1e-9


def test_fc_equivariance(rng):
    eta, w = sample_plane(rng, 1000), sample_disk(rng, 1000)
    for i in range(1000):
        j = random_jacobi(rng)
        p = FCPoint(eta[i], w[i])
        lhs = fc_inverse(act_disk(j, fc_forward(p)))
        rhs = act_fc(j, p)
        assert abs(lhs.eta - rhs.eta) < 1e-9 * (1 + abs(rhs.eta)) and abs(lhs.w - rhs.w) < 1e-9
