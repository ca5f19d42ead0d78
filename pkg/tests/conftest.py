import json
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def derived():
    """Frozen oracle values; regenerate with tests/gen_oracles.py."""
    path = Path(__file__).parent / "data" / "derived.json"
    return json.loads(path.read_text())
