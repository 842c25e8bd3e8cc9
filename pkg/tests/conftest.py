"""Shared corpora for the test suite.

The exhaustive corpus is one graph per isomorphism class of decorated
cycle up to n=10 and is reused by several modules, so it is built once
per session.  Random corpora are cheap enough to build where needed.
"""

from __future__ import annotations

import pytest

from ubx.generators import exhaustive_corpus, fixtures, random_corpus


@pytest.fixture(scope="session")
def exhaustive10():
    return exhaustive_corpus(10)


@pytest.fixture(scope="session")
def random500():
    return random_corpus(500, seed=7, max_n=14)


@pytest.fixture(scope="session")
def fx():
    return fixtures()
