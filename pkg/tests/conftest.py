import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from prefonto.corpus import load_corpus


@pytest.fixture(scope="session")
def corpus():
    """The bundled knowledge base, loaded and materialized once per run."""
    return load_corpus()
