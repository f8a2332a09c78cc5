"""
Shared fixtures: every test runs in its own directory with its own log and configuration.
"""

import networkx as nx
import pytest

from core.config import ConfigManager, set_config
from core.graph import Graph
from core.log_writer import setup_logging


@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    setup_logging(str(tmp_path / "logs"))
    config = ConfigManager(str(tmp_path / "qindex_config.json"))
    # single process unless a test asks for the pool
    config.enumeration.workers = 1
    set_config(config)
    yield config
    set_config(None)


@pytest.fixture
def config(isolated_environment):
    return isolated_environment


@pytest.fixture
def from_nx():
    return Graph.from_networkx


@pytest.fixture
def atlas_graphs():
    """Every graph on at most seven vertices, one per isomorphism class."""
    return [Graph.from_networkx(g) for g in nx.graph_atlas_g()]
