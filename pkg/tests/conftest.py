import sys
from pathlib import Path

import pytest

import ringlab as rl

sys.path.insert(0, str(Path(__file__).parent))

_SPEC_BY_NAME = {str(spec): spec for spec in rl.DEFAULT_CORPUS}


def corpus_ring(name: str) -> rl.FiniteRing:
    """Build (and share) one of the default corpus rings by its spec string."""
    return rl.build_cached(_SPEC_BY_NAME[name])


@pytest.fixture(scope="session")
def corpus():
    """All default corpus rings, keyed by canonical spec string."""
    return {name: rl.build_cached(spec) for name, spec in _SPEC_BY_NAME.items()}


@pytest.fixture(scope="session")
def unital_corpus(corpus):
    return {name: ring for name, ring in corpus.items() if ring.unital}
