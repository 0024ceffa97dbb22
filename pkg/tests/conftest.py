import os
from importlib import resources

import pytest
from hypothesis import HealthCheck, settings

from ratmaps.cli import parse_document
from ratmaps.maps import RationalMap
from ratmaps.ring import Ring

settings.register_profile("ratmaps", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ratmaps"))


def fixture_text(name: str) -> str:
    return resources.files("ratmaps").joinpath("fixtures", f"{name}.map").read_text()


def load_map(name: str) -> RationalMap:
    return parse_document(fixture_text(name)).to_map()


CORPUS = ["identity", "cremona", "squares", "cubes", "cubic_mu1", "monomial"]
CORPUS_DEGREES = {"identity": 1, "cremona": 1, "squares": 4, "cubes": 9, "cubic_mu1": 1, "monomial": 1}


@pytest.fixture
def plane():
    return Ring([["x0", "x1", "x2"]])


@pytest.fixture
def p1p1():
    return Ring([["x10", "x11"], ["x20", "x21"]])


@pytest.fixture(params=CORPUS)
def corpus_map(request):
    return request.param, load_map(request.param)
