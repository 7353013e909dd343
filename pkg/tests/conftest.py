import pytest
from hypothesis import settings

from qfe import PrimeSet, from_rationals, from_seeds

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

# The three reciprocal seed polynomials for P = {2, 5, 7}: each h_p is
# [p]_{q^3} / [p]_q, written out coefficient by coefficient.
SEED_COEFFS_257 = {
    2: [1, -1, 1],
    5: [1, -1, 0, 1, -1, 1, 0, -1, 1],
    7: [1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1],
}


@pytest.fixture(scope="session")
def seeds_257():
    return {p: from_rationals(cs) for p, cs in SEED_COEFFS_257.items()}


@pytest.fixture(scope="session")
def seq_257(seeds_257):
    """The seed-built sequence on S({2,5,7}); session-scoped so the memo
    is shared across test modules."""
    return from_seeds(PrimeSet.of([2, 5, 7]), seeds_257)
