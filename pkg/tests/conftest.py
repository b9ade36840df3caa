import time

import pytest

from franel.hyperterm import binom_power_term
from franel.telescoper import zeilberger


@pytest.fixture(scope="session")
def telescoped():
    """Telescoping operator, certificate, and solve time for s = 1..6."""
    results = {}
    for s in range(1, 7):
        t0 = time.time()
        op, cert = zeilberger(binom_power_term(s), 4, verify=False)
        results[s] = (op, cert, time.time() - t0)
    return results
