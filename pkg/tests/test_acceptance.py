"""The acceptance suite: every check must pass inside its time budget.

These are the same checks `confspace selftest` runs; each one performs exact
(zero-tolerance) comparisons and raises on the first mismatch.
"""

import pytest

from confspace import selftest


@pytest.mark.parametrize(
    "number,name,budget",
    [(num, name, budget) for num, name, budget, _ in selftest.CHECKS],
    ids=["%02d-%s" % (num, name) for num, name, _, _ in selftest.CHECKS])
def test_acceptance(number, name, budget):
    result = selftest.run_check(number)
    assert result.ok, "%s failed: %s" % (name, result.detail)
    assert result.elapsed <= budget, (
        "%s exceeded its %.0fs budget: %.2fs" % (name, budget, result.elapsed))
