import pytest

from dissections.algebra import rational
from dissections.corpus import corpus_ct, drawable_corpus


@pytest.fixture(autouse=True)
def _check_rational_reduction():
    """Re-verify rational-function coprimality by gcd recomputation in tests."""
    rational.CHECK_REDUCED = True
    yield
    rational.CHECK_REDUCED = False


@pytest.fixture(params=drawable_corpus())
def drawable_ct(request):
    return corpus_ct(request.param)
