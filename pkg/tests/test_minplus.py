"""Test for the min-plus curve algebra."""
import numpy as np
import pytest

from tsnc.minplus import (
    UNBOUNDED, ConcaveCurve, ConvexCurve, RateLatency, TokenBucket, add_concave,
    convolve_service, eval_concave, eval_convex, h_dev, intersection_delay, propagate,
    residual_service, shape, v_dev
)
from tsnc.utils.errors import DomainError, UnstableError


@pytest.fixture
def two_piece_arrival():
    # min(1 + 10 t, 10 + t), crossing at t = 1
    return ConcaveCurve([TokenBucket(rate=10., burst=1.), TokenBucket(rate=1., burst=10.)])


@pytest.fixture
def two_piece_service():
    # max(t, 10 (t - 1)), crossing at t = 10/9
    return ConvexCurve([RateLatency(rate=1., latency=0.), RateLatency(rate=10., latency=1.)])


def _random_pair(rng):
    while True:
        alpha = ConcaveCurve(
            TokenBucket(rate=rng.uniform(0.5, 10.), burst=rng.uniform(1., 10.))
            for _ in range(rng.integers(1, 4)))
        beta = ConvexCurve(
            RateLatency(rate=rng.uniform(0.5, 20.), latency=rng.uniform(0.1, 1.))
            for _ in range(rng.integers(1, 4)))
        if alpha.rate < beta.rate:
            return alpha, beta


def _horizon(alpha, beta):
    points = list(alpha.breakpoints()) + list(beta.breakpoints())
    points.append(alpha.inverse(beta(beta.breakpoints()[-1])))
    return 2. * max(points) + 1.


def test_concave_curve(two_piece_arrival):
    assert two_piece_arrival.breakpoints() == pytest.approx((1.,))
    assert two_piece_arrival(0.) == 1.
    assert two_piece_arrival(0.5) == pytest.approx(6.)
    assert two_piece_arrival(2.) == pytest.approx(12.)
    assert two_piece_arrival.burst == 1.
    assert two_piece_arrival.rate == 1.
    assert two_piece_arrival.inverse(6.) == pytest.approx(0.5)
    assert two_piece_arrival.inverse(12.) == pytest.approx(2.)
    assert two_piece_arrival.inverse(0.5) == 0.
    values = two_piece_arrival(np.array([0., 0.5, 2.]))
    assert list(values) == pytest.approx([1., 6., 12.])


def test_concave_curve_canonical_form():
    # the faster bucket with the larger burst never binds
    curve = ConcaveCurve([TokenBucket(rate=1., burst=5.), TokenBucket(rate=2., burst=6.)])
    assert curve.pieces == (TokenBucket(rate=1., burst=5.),)
    assert curve == ConcaveCurve.token_bucket(rate=1., burst=5.)


def test_convex_curve(two_piece_service):
    assert two_piece_service.breakpoints() == pytest.approx((0., 10. / 9.))
    assert two_piece_service.latency == 0.
    assert two_piece_service.rate == 10.
    assert two_piece_service(1.) == pytest.approx(1.)
    assert two_piece_service(2.) == pytest.approx(10.)
    assert two_piece_service.inverse(1.) == pytest.approx(1.)
    assert two_piece_service.slope_at(0.5) == 1.
    assert two_piece_service.slope_at(2.) == 10.


def test_curves_reject_negative_time(two_piece_arrival, two_piece_service):
    with pytest.raises(DomainError):
        two_piece_arrival(-1.)
    with pytest.raises(DomainError):
        two_piece_service(-1e-9)


@pytest.mark.parametrize("rate, burst", [(-1., 0.), (1., -1.), (float("nan"), 1.)])
def test_token_bucket_rejects(rate, burst):
    with pytest.raises(DomainError):
        TokenBucket(rate=rate, burst=burst)


def test_rate_latency_needs_positive_rate():
    with pytest.raises(DomainError):
        RateLatency(rate=0., latency=1.)


@pytest.mark.parametrize("rate, burst, service_rate, latency", [
    (1e4, 80., 4e6, 1e-5),
    (0., 0., 1., 2.),
    (2., 4., 10., 1.),
])
def test_deviations_token_bucket_rate_latency(rate, burst, service_rate, latency):
    alpha = ConcaveCurve.token_bucket(rate=rate, burst=burst)
    beta = ConvexCurve.rate_latency(rate=service_rate, latency=latency)
    assert h_dev(alpha, beta) == pytest.approx(latency + burst / service_rate)
    assert v_dev(alpha, beta) == pytest.approx(burst + rate * latency)
    assert intersection_delay(alpha, beta) == pytest.approx(
        (burst + service_rate * latency) / (service_rate - rate))


def test_intersection_delay_without_burst():
    alpha = ConcaveCurve.token_bucket(rate=1., burst=0.)
    beta = ConvexCurve.rate_latency(rate=4., latency=3.)
    assert intersection_delay(alpha, beta) == pytest.approx(4.)
    assert intersection_delay(ConcaveCurve.zero(), beta) == pytest.approx(3.)


def test_deviations_unstable():
    alpha = ConcaveCurve.token_bucket(rate=5., burst=1.)
    beta = ConvexCurve.rate_latency(rate=5., latency=1.)
    for deviation in (h_dev, v_dev, intersection_delay):
        with pytest.raises(UnstableError):
            deviation(alpha, beta)


def test_deviations_against_dense_grid():
    rng = np.random.default_rng(42)
    for _ in range(1000):
        alpha, beta = _random_pair(rng)
        grid, dt = np.linspace(0., _horizon(alpha, beta), 20001, retstep=True)
        arrivals = alpha(grid)
        latencies = np.array([piece.latency for piece in beta.pieces])[:, None]
        rates = np.array([piece.rate for piece in beta.pieces])[:, None]
        horizontal = np.min(latencies + arrivals[None, :] / rates, axis=0) - grid
        vertical = arrivals - beta(grid)
        assert np.argmax(horizontal) < len(grid) - 1
        assert np.argmax(vertical) < len(grid) - 1
        # both distances are concave and Lipschitz, the grid maximum is at most one step away
        lipschitz = max(1., alpha.pieces[0].rate / beta.pieces[0].rate)
        delay = h_dev(alpha, beta)
        assert horizontal.max() - 1e-9 <= delay <= horizontal.max() + lipschitz * dt + 1e-9
        backlog = v_dev(alpha, beta)
        slope = alpha.pieces[0].rate + beta.rate
        assert vertical.max() - 1e-9 <= backlog <= vertical.max() + slope * dt + 1e-9


def test_intersection_delay_crossing():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        alpha, beta = _random_pair(rng)
        t = intersection_delay(alpha, beta)
        assert t >= beta.latency
        assert beta(t) >= alpha(t) - 1e-9 * max(1., alpha(t))
        eps = 1e-12 * t
        assert beta(t - eps) <= alpha(t - eps) + 1e-12 * max(1., alpha(t))
        later = t * (1. + 1e-6)
        assert beta(later) > alpha(later)


def test_add_concave():
    total = add_concave(ConcaveCurve.token_bucket(rate=1., burst=2.),
                        ConcaveCurve.token_bucket(rate=3., burst=4.))
    assert total == ConcaveCurve.token_bucket(rate=4., burst=6.)
    assert add_concave(total, ConcaveCurve.zero()) == total


def test_shape():
    alpha = ConcaveCurve.token_bucket(rate=1., burst=10.)
    shaped = shape(alpha, TokenBucket(rate=100., burst=2.))
    assert shaped.burst == 2.
    grid = np.linspace(0., 10., 101)
    assert np.all(shaped(grid) <= alpha(grid))
    assert shape(alpha, UNBOUNDED) is alpha


def test_shape_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        alpha = ConcaveCurve(
            TokenBucket(rate=rng.uniform(0.5, 10.), burst=rng.uniform(1., 10.))
            for _ in range(rng.integers(1, 4)))
        shaper = TokenBucket(rate=rng.uniform(10., 100.), burst=rng.uniform(0., 5.))
        shaped = shape(alpha, shaper)
        grid = np.linspace(0., 20., 401)
        assert np.all(shaped(grid) <= alpha(grid) * (1 + 1e-9))
        assert np.all(shaped(grid) <= (shaper.burst + shaper.rate * grid) * (1 + 1e-9))


def test_propagate():
    alpha = ConcaveCurve([TokenBucket(rate=2., burst=3.), TokenBucket(rate=1., burst=5.)])
    shifted = propagate(alpha, 0.5)
    grid = np.linspace(0., 5., 51)
    assert shifted(grid) == pytest.approx(alpha(grid + 0.5))
    assert propagate(alpha, 0.) is alpha
    with pytest.raises(DomainError):
        propagate(alpha, -1.)


def test_convolve_service():
    beta = ConvexCurve.rate_latency(rate=4e6, latency=1e-5)
    tandem = convolve_service(beta, beta)
    assert tandem.rate == pytest.approx(4e6)
    assert tandem.latency == pytest.approx(2e-5)
    assert len(tandem.pieces) == 1
    assert convolve_service(UNBOUNDED, beta) is beta
    assert convolve_service(beta, UNBOUNDED) is beta
    assert convolve_service(UNBOUNDED, UNBOUNDED) is UNBOUNDED


def test_convolve_service_multi_piece(two_piece_service):
    result = convolve_service(two_piece_service, ConvexCurve.rate_latency(rate=5., latency=0.))
    # slope 1 up to 10/9, then slope 5, the slope 10 segment is never reached
    assert result(2.) == pytest.approx(10. / 9. + 5. * (2. - 10. / 9.))
    assert result(1.) == pytest.approx(1.)
    assert result.rate == pytest.approx(5.)


def test_residual_service():
    beta = ConvexCurve.rate_latency(rate=10., latency=1.)
    residual = residual_service(beta, ConcaveCurve.token_bucket(rate=2., burst=4.))
    assert residual.rate == pytest.approx(8.)
    assert residual.latency == pytest.approx(1.75)
    assert residual_service(beta, ConcaveCurve.zero()) is beta
    with pytest.raises(UnstableError):
        residual_service(beta, ConcaveCurve.token_bucket(rate=10., burst=0.))


def test_eval():
    arrival = ConcaveCurve([TokenBucket(rate=10e3, burst=80.), TokenBucket(rate=5e5, burst=16e3)])
    assert eval_concave(arrival, 1.) == pytest.approx(10080.)
    assert eval_concave(ConcaveCurve.token_bucket(rate=10e3, burst=80.), 50e-6) == \
        pytest.approx(80.5)
    assert eval_concave(ConcaveCurve.token_bucket(rate=10e3, burst=0.), 0.) == 0.
    service = ConvexCurve([RateLatency(rate=4e6, latency=10e-6),
                           RateLatency(rate=50e6, latency=1e-3)])
    assert eval_convex(service, 10e-6) == 0.
    assert eval_convex(service, 50e-6) == pytest.approx(160.)
    assert eval_convex(service, 2e-3) == pytest.approx(5e4)
    with pytest.raises(DomainError):
        eval_concave(arrival, -1.)
    with pytest.raises(DomainError):
        eval_convex(service, -1.)


def _random_arrival(rng, pieces=None):
    return ConcaveCurve(
        TokenBucket(rate=rng.uniform(0.5, 10.), burst=rng.uniform(1., 10.))
        for _ in range(pieces or rng.integers(1, 4)))


def _random_service(rng, pieces=None):
    return ConvexCurve(
        RateLatency(rate=rng.uniform(0.5, 20.), latency=rng.uniform(0.1, 1.))
        for _ in range(pieces or rng.integers(1, 4)))


def test_canonical_form_is_idempotent():
    rng = np.random.default_rng(11)
    for _ in range(200):
        alpha = _random_arrival(rng, pieces=rng.integers(1, 6))
        beta = _random_service(rng, pieces=rng.integers(1, 6))
        assert ConcaveCurve(alpha.pieces) == alpha
        assert ConvexCurve(beta.pieces) == beta


def test_canonical_form_keeps_values():
    rng = np.random.default_rng(12)
    grid = rng.uniform(0., 20., 200)
    for _ in range(200):
        buckets = [TokenBucket(rate=rng.uniform(0.5, 10.), burst=rng.uniform(1., 10.))
                   for _ in range(rng.integers(1, 6))]
        expected = np.min([bucket.burst + bucket.rate * grid for bucket in buckets], axis=0)
        assert ConcaveCurve(buckets)(grid) == pytest.approx(expected, rel=1e-6)
        servers = [RateLatency(rate=rng.uniform(0.5, 20.), latency=rng.uniform(0.1, 1.))
                   for _ in range(rng.integers(1, 6))]
        expected = np.max([server.rate * np.maximum(0., grid - server.latency)
                           for server in servers], axis=0)
        assert ConvexCurve(servers)(grid) == pytest.approx(expected, rel=1e-6, abs=1e-9)


def test_convolve_service_commutative_and_associative():
    rng = np.random.default_rng(13)
    grid = np.linspace(0., 10., 201)
    for _ in range(100):
        first, second, third = (_random_service(rng) for _ in range(3))
        assert convolve_service(first, second)(grid) == \
            pytest.approx(convolve_service(second, first)(grid), rel=1e-9, abs=1e-9)
        left = convolve_service(convolve_service(first, second), third)
        right = convolve_service(first, convolve_service(second, third))
        assert left(grid) == pytest.approx(right(grid), rel=1e-9, abs=1e-9)


def test_h_dev_monotonicity():
    rng = np.random.default_rng(14)
    for _ in range(200):
        alpha, beta = _random_pair(rng)
        delay = h_dev(alpha, beta)
        smaller = ConcaveCurve(alpha.pieces + (TokenBucket(rate=rng.uniform(0.1, 10.),
                                                           burst=rng.uniform(0.5, 10.)),))
        assert h_dev(smaller, beta) <= delay * (1 + 1e-9) + 1e-12
        larger = ConvexCurve(beta.pieces + (RateLatency(rate=rng.uniform(0.5, 20.),
                                                        latency=rng.uniform(0.05, 1.)),))
        assert h_dev(alpha, larger) <= delay * (1 + 1e-9) + 1e-12


def test_h_dev_below_intersection_delay():
    rng = np.random.default_rng(15)
    for _ in range(200):
        alpha, beta = _random_pair(rng)
        assert h_dev(alpha, beta) <= intersection_delay(alpha, beta) * (1 + 1e-9) + 1e-12


def test_shaping_never_increases_h_dev():
    rng = np.random.default_rng(16)
    for _ in range(200):
        alpha, beta = _random_pair(rng)
        shaper = TokenBucket(rate=rng.uniform(1., 100.), burst=rng.uniform(0., 5.))
        assert h_dev(shape(alpha, shaper), beta) <= h_dev(alpha, beta) * (1 + 1e-9) + 1e-12
