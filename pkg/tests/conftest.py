import pytest
from hypothesis import settings

from diassoc import make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FINITE = ["GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"]


@pytest.fixture(params=FINITE)
def finite_ctx(request):
    return make_field(request.param)
