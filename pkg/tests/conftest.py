import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


@pytest.fixture
def tmp_cert(tmp_path):
    """Write a decomposition to a JSON file and return its path."""
    from hqd.io import dumps

    def write(d, name="cert.json", labels="int"):
        p = tmp_path / name
        p.write_text(dumps(d, labels))
        return p

    return write
