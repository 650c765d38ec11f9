import pytest

from gridswarm.algorithms import BUILTIN_IDS, builtin
from gridswarm.engine import run
from gridswarm.verify import detect_phases


@pytest.fixture(scope="session")
def medium_traces():
    """One ~700-round trace per builtin, enough for phases 0..6."""
    return {bid: run(builtin(bid), 700) for bid in BUILTIN_IDS}


@pytest.fixture(scope="session")
def medium_detections(medium_traces):
    return {
        bid: detect_phases(medium_traces[bid], bid, 6) for bid in BUILTIN_IDS
    }
