import json
import os
import sys

import pytest

# Add the project root to the Python path
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)


@pytest.fixture
def config_dir():
    """Directory holding the shipped run configurations"""
    return os.path.join(PROJECT_ROOT, "config")


@pytest.fixture
def write_config(tmp_path):
    """Write a config document to a temp file and return its path"""
    def _write(document, name="run.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return _write
