import json

import pytest


@pytest.fixture
def write_doc(tmp_path):
    """Write a JSON document to a temp file and return its path as str."""

    counter = {"n": 0}

    def _write(obj):
        counter["n"] += 1
        path = tmp_path / f"doc{counter['n']}.json"
        path.write_text(json.dumps(obj))
        return str(path)

    return _write
