import pytest
from hypothesis import settings

from cocart.fixtures import FIXTURE_NAMES
from helpers import bundle

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(params=FIXTURE_NAMES)
def any_bundle(request):
    return bundle(request.param)
