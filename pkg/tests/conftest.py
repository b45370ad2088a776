import pytest

from beta_words import default_corpus


@pytest.fixture(scope="session")
def corpus_members():
    return default_corpus()
