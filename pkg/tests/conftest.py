import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unsharp import enumerate_effect_algebras, fixture


@pytest.fixture(scope="session")
def e9():
    return fixture("E9")


@pytest.fixture(scope="session")
def e6():
    return fixture("E6")


@pytest.fixture(scope="session")
def small_algebras():
    'Every effect algebra on at most five labeled elements.'
    return [
        E for n in range(2, 6) for E in enumerate_effect_algebras(n).algebras
    ]


@pytest.fixture(scope="session")
def fixture_algebras():
    from unsharp import BUNDLED

    return [fixture(name) for name in BUNDLED]


def idx(E, label):
    return E.labels.index(label)
