import pytest
from hypothesis import HealthCheck, settings

from scopekit import IOTA, App, Lam, Var, arrow

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

II = arrow(IOTA, IOTA)


@pytest.fixture
def term_a():
    # over [ι ⟶ ι]: λx:ι. f (f x)
    return Lam(IOTA, App(Var(1), App(Var(1), Var(0))))


@pytest.fixture
def term_b():
    return Lam(IOTA, Var(0))


@pytest.fixture
def a_of_b():
    ident = Lam(IOTA, Var(0))
    return Lam(IOTA, App(ident, App(ident, Var(0))))
