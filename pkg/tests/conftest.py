import numpy as np
import pytest
from hypothesis import settings

from cakeshare.valuation import ValuationSpec, normalize

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def river_trio():
    """The three built-in densities: ramp up, ramp down, three-hump wave."""
    return [
        normalize(ValuationSpec.linear_ramp("increasing", label="Ethiopia")),
        normalize(ValuationSpec.linear_ramp("decreasing", label="Egypt")),
        normalize(ValuationSpec.sinusoid(1.0, 0.5, 3, 0.0, label="Sudan")),
    ]


def random_pc_spec(rng: np.random.Generator, label: str,
                   max_segments: int = 8) -> ValuationSpec:
    """Random piecewise-constant density with at least one positive height
    and no degenerate-width segment."""
    k = int(rng.integers(1, max_segments + 1))
    gaps = rng.uniform(0.3, 1.0, k)
    edges = np.concatenate(([0.0], np.cumsum(gaps) / gaps.sum()))
    edges[-1] = 1.0
    heights = rng.uniform(0.0, 4.0, k)
    heights[int(rng.integers(0, k))] += 0.5
    return ValuationSpec.piecewise_constant(edges.tolist(), heights.tolist(),
                                            label=label)


@pytest.fixture
def nile_vals():
    return river_trio()
