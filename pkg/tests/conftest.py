import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from t2hflts.io import bundled_lts, bundled_survey  # noqa: E402
from t2hflts.it2 import IT2TrFN, Trapezoid  # noqa: E402
from t2hflts.linguistic import LinguisticTermSet, Term  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def uniform_lts(g: int, lmf_height: float = 0.8, labels=None) -> LinguisticTermSet:
    """Evenly spaced triangular-ish terms, mirror-symmetric about 0.5."""
    step = 1.0 / g
    terms = []
    for i in range(g + 1):
        c = i * step
        u = Trapezoid(max(c - step, 0.0), c, c, min(c + step, 1.0))
        w = 0.5 * step
        l = Trapezoid(max(c - w, 0.0), c, c, min(c + w, 1.0), lmf_height)
        label = labels[i] if labels else f"s{i}"
        terms.append(Term(label, IT2TrFN(u, l)))
    return LinguisticTermSet(tuple(terms))


@pytest.fixture(scope="session")
def lts():
    return bundled_lts()


@pytest.fixture(scope="session")
def survey():
    return bundled_survey()


@pytest.fixture(scope="session")
def survey2():
    return bundled_survey("example2_survey.json")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(scope="session")
def sm4():
    return json.loads((FIXTURES / "sm4_topsis.json").read_text())


@pytest.fixture(scope="session")
def sm5():
    return json.loads((FIXTURES / "sm5_wlq.json").read_text())
