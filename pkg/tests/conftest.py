import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from giniscore.core import Sample


def random_sample(
    rng: np.random.Generator,
    n: int,
    *,
    ties: bool,
    weighted: bool,
    response_ties: bool = False,
) -> Sample:
    """Seeded random sample; `ties` controls prediction ties."""
    if response_ties:
        responses = rng.integers(0, max(2, n // 3), size=n).astype(float)
        if not responses.any():
            responses[0] = 1.0
    else:
        responses = rng.exponential(1.0, size=n)
    if ties:
        levels = int(rng.integers(1, max(2, n // 2 + 1)))
        predictions = rng.integers(0, levels + 1, size=n).astype(float)
    else:
        predictions = rng.normal(size=n)
    weights = rng.uniform(0.1, 3.0, size=n) if weighted else np.ones(n)
    return Sample.from_arrays(responses, predictions, weights)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
