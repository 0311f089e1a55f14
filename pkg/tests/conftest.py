import pytest

from quiverhh.fixtures import FIXTURES

SQ_SOURCE = """\
field Q
vertex s u d t
arrow a1 s u
arrow a2 u t
arrow b1 s d
arrow b2 d t
nilpotency 3
relation a1*a2 - b1*b2
rotation s a1+ b1+
rotation u a2+ a1-
rotation t a2- b2-
rotation d b2+ b1-
outer a1+
"""


@pytest.fixture(params=sorted(FIXTURES))
def named(request):
    return request.param, FIXTURES[request.param]()


@pytest.fixture
def sq_file(tmp_path):
    path = tmp_path / "sq.quiver"
    path.write_text(SQ_SOURCE)
    return str(path)
