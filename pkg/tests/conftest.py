import pytest
from hypothesis import HealthCheck, settings

from invbargraph import invseq, recur

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def a_lemma_8():
    return recur.a_table_lemma(8)


@pytest.fixture(scope="session")
def a_three_8():
    return recur.a_table_threeterm(8)


@pytest.fixture(scope="session")
def a_brute_8():
    return invseq.brute_dist_area_sper(8)


@pytest.fixture(scope="session")
def b_lemma_9():
    return recur.b_table_lemma(9)


@pytest.fixture(scope="session")
def b_three_9():
    return recur.b_table_threeterm(9)


@pytest.fixture(scope="session")
def b_brute_9():
    return invseq.brute_dist_lda(9)
