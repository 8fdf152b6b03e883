import numpy as np
import pytest

from newton_condg import (
    Box,
    Problem,
    SolverConfig,
    TheoryParams,
    check_problem,
    validate_config,
)


def test_theory_params_accepts_valid_draw():
    # omega1*vartheta + omega2 = 0.5 < 1 and lambda_max = (1-0.5)/1.5 = 1/3 > 0.3
    tp = TheoryParams(omega1=1.0, omega2=0.0, vartheta=0.5, lam=0.3)
    tp.validate()
    assert tp.lambda_max() == pytest.approx(1.0 / 3.0)


@pytest.mark.parametrize(
    "params, fragment",
    [
        (dict(omega1=1.0, omega2=1.5), "omega2 < omega1"),
        (dict(omega1=1.0, omega2=-0.1), "omega2 < omega1"),
        (dict(omega1=2.0, omega2=0.5, vartheta=0.3), "omega1*vartheta + omega2 < 1"),
        (dict(omega1=1.0, vartheta=1.0), "vartheta < 1"),
        (dict(omega1=1.0, lam=1.0), "lambda"),
        (dict(omega1=1.0, lam=-0.1), "lambda"),
    ],
)
def test_theory_params_names_first_violation(params, fragment):
    with pytest.raises(ValueError, match="violated"):
        try:
            TheoryParams(**params).validate()
        except ValueError as exc:
            assert fragment in str(exc)
            raise


def test_validate_config_theta_boundary():
    # theta = lambda^2/2 exactly is accepted
    cfg = SolverConfig(theta=0.005)
    tp = TheoryParams(omega1=1.0, lam=0.1)
    validate_config(cfg, tp)


def test_validate_config_rejects_theta_with_zero_lambda():
    cfg = SolverConfig(theta=1e-5)
    tp = TheoryParams(omega1=1.0, lam=0.0)
    with pytest.raises(ValueError, match="theta"):
        validate_config(cfg, tp)
    validate_config(SolverConfig(theta=0.0), tp)


def test_validate_config_monotone_in_theta():
    tp = TheoryParams(omega1=1.0, omega2=0.0, vartheta=0.0, lam=0.2)
    rng = np.random.default_rng(7)
    for _ in range(50):
        theta = rng.uniform(0.0, tp.lam ** 2 / 2.0)
        validate_config(SolverConfig(theta=theta), tp)
        validate_config(SolverConfig(theta=rng.uniform(0.0, theta)), tp)


def test_theta_schedule():
    cfg = SolverConfig(theta=(1e-3, 1e-4, 0.0))
    assert cfg.theta_at(0) == 1e-3
    assert cfg.theta_at(2) == 0.0
    assert cfg.theta_at(99) == 0.0  # last entry repeats
    assert cfg.theta_sup() == 1e-3
    with pytest.raises(ValueError):
        SolverConfig(theta=(1e-3, -1.0))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(tol_inf=0.0),
        dict(max_outer=0),
        dict(max_condg=0),
        dict(refresh_period=0),
        dict(theta=-1e-9),
        dict(jacobian_strategy="bogus"),
        dict(linsolve="bogus"),
        dict(no_progress_factor=1.0),
    ],
)
def test_solver_config_invariants(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)


def _quadratic_problem(n=4):
    return Problem(
        name="q",
        n=n,
        fun=lambda x: x * x - 1.0,
        jac=lambda x: np.diag(2.0 * x),
        pattern=np.eye(n, dtype=bool),
        feasible_set=Box(np.zeros(n), np.full(n, 2.0)),
        known_root=np.ones(n),
    )


def test_check_problem_passes_on_consistent_problem():
    check_problem(_quadratic_problem())


def test_check_problem_flags_bad_root():
    p = _quadratic_problem()
    bad = Problem(
        name="bad", n=p.n, fun=p.fun, jac=p.jac, feasible_set=p.feasible_set,
        known_root=np.full(p.n, 1.5),
    )
    with pytest.raises(AssertionError, match="known_root"):
        check_problem(bad)


def test_check_problem_flags_pattern_violation():
    n = 4
    dense_fun = lambda x: np.full(n, x.sum()) ** 3 - x
    bad = Problem(
        name="bad", n=n, fun=dense_fun, pattern=np.eye(n, dtype=bool),
        feasible_set=Box(np.zeros(n), np.ones(n)),
    )
    with pytest.raises(AssertionError, match="pattern"):
        check_problem(bad)


def test_problem_shape_validation():
    with pytest.raises(ValueError):
        Problem(name="x", n=0, fun=lambda x: x, feasible_set=Box([0.0], [1.0]))
    with pytest.raises(ValueError):
        Problem(
            name="x", n=2, fun=lambda x: x, pattern=np.eye(3, dtype=bool),
            feasible_set=Box([0.0, 0.0], [1.0, 1.0]),
        )
