import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tools"))

FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_config():
    from queryrefine import harness

    return harness.load_config(FIXTURES / "experiment.json")


@pytest.fixture(scope="session")
def fixture_docs(fixture_config):
    from queryrefine.corpus import ingest_records

    return ingest_records(fixture_config.corpus_path, fixture_config.preprocess)


@pytest.fixture(scope="session")
def fixture_index(fixture_docs, fixture_config):
    from queryrefine.vectorindex import build_index

    return build_index(fixture_docs, fixture_config.weighting_mode)
