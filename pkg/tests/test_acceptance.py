"""Acceptance gate: every criterion runs at its stated tolerance (exact)
and prints one pass/fail line."""

import pytest

from tracta import acceptance as A


@pytest.mark.parametrize("criterion", A.CRITERIA,
                         ids=[f"criterion_{i + 1}" for i in range(len(A.CRITERIA))])
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()
