import pytest

from ringinv.catalog import named_instances, random_instances


@pytest.fixture(scope="session")
def named_catalog():
    return named_instances()


@pytest.fixture(scope="session")
def named_contexts(named_catalog):
    """Shared contexts so expensive per-instance data is computed once."""
    return {inst.name: inst.context() for inst in named_catalog}


@pytest.fixture(scope="session")
def big_catalog(named_catalog):
    """Named instances plus 500 seeded random ones (acceptance scale)."""
    rand, stats = random_instances(500, seed=20260808)
    assert stats.valid == 500
    return list(named_catalog) + rand
