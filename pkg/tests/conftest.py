import pytest

from carlitz_vmf.context import Context

_CTX = {}


def shared_context(q: int) -> Context:
    """One context per field for the whole session, so caches are shared."""
    if q not in _CTX:
        _CTX[q] = Context(q)
    return _CTX[q]


@pytest.fixture(params=[2, 3], ids=["q2", "q3"])
def ctx(request):
    return shared_context(request.param)


@pytest.fixture
def ctx2():
    return shared_context(2)


@pytest.fixture
def ctx3():
    return shared_context(3)
