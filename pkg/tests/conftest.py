"""Shared fixtures: the worked-example rings and a clean settings singleton."""

import pytest

from src.core.divisors.calculus import component, hypersurface, make_divisor
from src.core.divisors.models import QDivisor
from src.core.sectionring.models import SectionRing, section_ring
from src.core.utils.config import reload_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test sees default settings, unaffected by the caller's environment."""
    for key in ("LOG_LEVEL", "LOG_FILE"):
        monkeypatch.delenv(key, raising=False)
    reload_settings()
    yield
    reload_settings()


def power_sum(nvars: int, power: int) -> str:
    return " + ".join(f"x{i}**{power}" for i in range(nvars))


def power_sum_ring(
    ambient_dim: int, nvars: int, power: int, coeff: str, label: str
) -> SectionRing:
    F = hypersurface("F", power_sum(nvars, power), ambient_dim)
    return section_ring(make_divisor(ambient_dim, [(F, coeff)]), label=label)


@pytest.fixture
def three_points_divisor() -> QDivisor:
    """1/3 (V(y0) + V(z0) + V(y0 + z0)) on P^1, y0 = x0 and z0 = x1."""
    return make_divisor(
        1,
        [
            (component("y0", 1, "x0"), "1/3"),
            (component("z0", 1, "x1"), "1/3"),
            (component("y0+z0", 1, "x0 + x1"), "1/3"),
        ],
    )


@pytest.fixture
def ring_a(three_points_divisor) -> SectionRing:
    return section_ring(three_points_divisor, label="A")


@pytest.fixture
def ring_b() -> SectionRing:
    """1/2 V(x0^4 + x1^4) on P^1: half of four points."""
    return power_sum_ring(1, 2, 4, "1/2", "B")


@pytest.fixture
def theorem_b():
    """B = R(P^{d-2}, 1/2 V(f)) with deg f = 2(d-1)."""

    def _build(d: int) -> SectionRing:
        return power_sum_ring(d - 2, d - 1, 2 * (d - 1), "1/2", f"B{d}")

    return _build


@pytest.fixture
def griffith_ring():
    """R(P^{d-2}, (1/d) V(x0^d + ... + x_{d-2}^d))."""

    def _build(d: int) -> SectionRing:
        return power_sum_ring(d - 2, d - 1, d, f"1/{d}", f"R{d}")

    return _build


@pytest.fixture
def example_3_5_ring():
    """R(P^{m-1}, (1/r) V(x0^n + ... + x_{m-1}^n))."""

    def _build(r: int, n: int, m: int) -> SectionRing:
        return power_sum_ring(m - 1, m, n, f"1/{r}", f"E({r},{n},{m})")

    return _build


@pytest.fixture
def half_three_points() -> SectionRing:
    """1/2 (three points) on P^1: canonical order 3 with twist -1."""
    return section_ring(
        make_divisor(
            1,
            [
                (component("p", 1, "x0"), "1/2"),
                (component("q", 1, "x1"), "1/2"),
                (component("r", 1, "x0 - x1"), "1/2"),
            ],
        ),
        label="H3",
    )


@pytest.fixture
def hyperplane_ring():
    """K[x0..xr] as R(P^r, V(x0))."""

    def _build(r: int) -> SectionRing:
        return section_ring(make_divisor(r, [(component("H", 1, "x0"), 1)]), label=f"P{r}")

    return _build
