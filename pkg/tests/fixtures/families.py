"""
Fixtures for seeded randomness, cache isolation and CLI config files.
"""

# pylint: disable=redefined-outer-name, unused-import

import json
import os
import random

import pytest

from pystirling.families import clear_caches
from pystirling.settings import DEFAULT_SEED

CONFIG_FILENAME = "pystirling.json"


@pytest.fixture
def rng():
    """
    Generator seeded with the default seed, so randomized tests are reproducible.
    """
    return random.Random(DEFAULT_SEED)


@pytest.fixture
def cleared_caches():
    """
    Fixture for running a test against empty family tables.
    """
    clear_caches()
    yield
    clear_caches()


@pytest.fixture
def config_file(tmp_path):
    """
    Writes a config file which switches the output format to JSON and lowers `max_n`.
    """
    path = os.path.join(tmp_path, CONFIG_FILENAME)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps({"format": "json", "max_n": 3, "seed": 7}))

    yield path


@pytest.fixture
def series_file(tmp_path):
    """
    Writes a series document for log(1 + x) up to order 4.
    """
    path = os.path.join(tmp_path, "logm.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps({"order": 4, "taylor": ["0", "1", "-1", "2", "-6"]}))

    yield path
