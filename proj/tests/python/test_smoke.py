import cmath
import math
import os
import subprocess
import sys

import pytest

sys.path.insert(0, os.environ["UHP_PYDIR"])

import uhp_native as uhp


def test_hermite_coefficients_closed_form():
    p = uhp.unitary_hermite(8, 1.0)
    assert p.n == 8
    c = p.coeffs()
    assert len(c) == 9
    for j in range(9):
        expected = (-1) ** (8 - j) * math.comb(8, j) * math.exp(-j * (8 - j) / 2)
        assert c[j] == pytest.approx(expected, rel=1e-15)


def test_roots_ordered_symmetric_and_inside_support():
    # The member with parameter sigma2/n carries the root measure that
    # approximates the sigma2 limit law.
    p = uhp.unitary_hermite(50, 1.0 / 50)
    roots = p.roots()
    assert len(roots) == 50
    assert roots == sorted(roots)
    bound = uhp.support_halfwidth(1.0) + 0.05
    assert all(abs(t) < bound for t in roots)
    for t, s in zip(roots, reversed(roots)):
        assert t == pytest.approx(-s, abs=1e-12)


def test_empirical_moments_match_limit():
    roots = uhp.unitary_hermite(50, 1.0 / 50).roots()
    for k in range(1, 4):
        empirical = sum(cmath.exp(1j * k * t) for t in roots) / len(roots)
        assert empirical.real == pytest.approx(uhp.moment(1.0, k), abs=5 / 50)
        assert empirical.imag == pytest.approx(0.0, abs=1e-12)


def test_eval_matches_direct_sum():
    p = uhp.unitary_hermite(12, 0.7)
    z = 0.3 + 0.2j
    direct = sum(c * z**j for j, c in enumerate(p.coeffs()))
    assert p.eval(z) == pytest.approx(direct, rel=1e-12)
    assert cmath.exp(p.log_eval(z)) == pytest.approx(direct, rel=1e-12)


def test_density_normalization_and_symmetry():
    assert uhp.cdf(1.0, math.pi) == pytest.approx(1.0, abs=1e-10)
    assert uhp.cdf(1.0, 0.0) == pytest.approx(0.5, abs=1e-10)
    assert uhp.density(1.0, 0.4) == pytest.approx(uhp.density(1.0, -0.4), abs=1e-14)
    assert uhp.density(1.0, 3.0) == 0.0


def test_multiplicative_convolution_adds_variance():
    a = uhp.unitary_hermite(10, 0.4)
    b = uhp.unitary_hermite(10, 0.9)
    product = uhp.finite_free_mult(a, b, 10).coeffs()
    expected = uhp.unitary_hermite(10, 1.3).coeffs()
    for x, y in zip(product, expected):
        assert x == pytest.approx(y, rel=1e-12)


def test_flow_advances_the_variance_parameter():
    flowed = uhp.flow_roots(uhp.unitary_hermite(8, 0.1), 0.3)
    direct = uhp.unitary_hermite(8, 0.4).roots()
    for t, s in zip(flowed, direct):
        assert t == pytest.approx(s, abs=1e-10)


def test_json_round_trip():
    p = uhp.unitary_hermite(6, 1.0)
    q = uhp.CirclePoly.from_json(p.to_json())
    assert q.n == p.n
    # Serialized log magnitudes carry 17 significant digits, one ulp shy of
    # the extended precision they were computed at.
    for x, y in zip(q.coeffs(), p.coeffs()):
        assert x == pytest.approx(y, rel=1e-14)
    with pytest.raises(ValueError):
        uhp.CirclePoly.from_json("not json")


def test_log_partition_against_enumeration():
    n, beta, h = 10, 0.7, 0.3 + 0.45j
    z = sum(
        math.comb(n, k) * cmath.exp(beta / (2 * n) * (n - 2 * k) ** 2 + h * (n - 2 * k))
        for k in range(n + 1)
    )
    assert uhp.log_partition(n, beta, h) == pytest.approx(cmath.log(z), rel=1e-12)


def test_free_energy_is_the_large_n_limit():
    limit = uhp.free_energy(0.5, 0.3 + 0j)
    finite = uhp.log_partition(400, 0.5, 0.3 + 0j) / 400
    assert abs(finite - limit) < 1e-2
    with pytest.raises(ValueError):
        uhp.free_energy(0.5, -0.1 + 0j)


def test_lee_yang_zeros_pair_up():
    zeros = uhp.lee_yang_zeros(12, 0.25)
    assert len(zeros) == 12
    assert zeros == sorted(zeros)
    assert all(abs(y) < math.pi / 2 for y in zeros)
    for y, w in zip(zeros, reversed(zeros)):
        assert y == pytest.approx(-w, abs=1e-12)
    assert uhp.lee_yang_support(0.25) == pytest.approx(
        math.asin(0.5) + math.sqrt(0.25 - 0.0625), rel=1e-15
    )


def test_disk_asymptotics_at_the_origin():
    assert uhp.limit_log_hermite(0j, 1.0) == pytest.approx(0.0, abs=1e-14)
    assert uhp.limit_log_hermite_derivative(0j, 1.0) == pytest.approx(
        -math.exp(-0.5), rel=1e-13
    )


def test_integral_representation_matches_eval():
    # The quadrature route evaluates the member with parameter sigma2/n.
    p = uhp.unitary_hermite(12, 1.0 / 12)
    z = 0.2 + 0.1j
    assert uhp.hermite_integral(12, 1.0, z) == pytest.approx(p.eval(z), rel=1e-9)


def test_flow_rejects_odd_degree():
    with pytest.raises(ValueError):
        uhp.flow_roots(uhp.unitary_hermite(7, 0.5), 0.1)


def test_cli_agrees_with_the_module():
    cli = os.environ["UHP_CLI"]
    run = subprocess.run(
        [cli, "roots", "--n", "6", "--sigma2", "1"], capture_output=True, text=True
    )
    assert run.returncode == 0
    lines = run.stdout.strip().splitlines()
    assert lines[0] == "k,theta"
    angles = [float(line.split(",")[1]) for line in lines[1:]]
    expected = uhp.unitary_hermite(6, 1.0 / 6).roots()
    assert angles == pytest.approx(expected, abs=1e-12)

    bad = subprocess.run([cli, "roots", "--n", "6"], capture_output=True, text=True)
    assert bad.returncode == 2
