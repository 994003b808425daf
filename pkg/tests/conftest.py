import sys

import pytest
from hypothesis import HealthCheck, settings

# Big terms flow through assertion reprs on failure; never let the
# interpreter's int->str guard turn a clean failure into a ValueError.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

settings.register_profile(
    "dungeonlab",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dungeonlab")


@pytest.fixture(scope="session")
def terms_to_45():
    """All four sequences to n = 45, shared across modules."""
    from dungeonlab import SequenceId, sequence_terms

    return {seq: sequence_terms(seq, 45) for seq in SequenceId}
