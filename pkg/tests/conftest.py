"""Session-wide fixtures: the full synthesis tables are expensive enough
(seconds each) that every test shares one copy."""

import pytest

import ncvsynth as nv
from ncvsynth import io as nio


@pytest.fixture(scope="session")
def ncv111_full():
    return nv.settle_all(nv.NCV_111, nv.FULL_TOPOLOGY)


@pytest.fixture(scope="session")
def ncv012_full():
    return nv.settle_all(nv.NCV_012, nv.FULL_TOPOLOGY)


@pytest.fixture(scope="session")
def ncv155_full():
    return nv.settle_all(nv.NCV_155, nv.FULL_TOPOLOGY)


@pytest.fixture(scope="session")
def ncv111_path():
    return nv.settle_all(nv.NCV_111, nv.PATH_TOPOLOGY)


@pytest.fixture(scope="session")
def nct_gc():
    return nv.settle_all_nct()


@pytest.fixture(scope="session")
def comparison_111(nct_gc, ncv111_full):
    return nv.compare(nct_gc, ncv111_full, nv.NCV_111)


@pytest.fixture(scope="session")
def comparison_012(nct_gc, ncv012_full):
    return nv.compare(nct_gc, ncv012_full, nv.NCV_012)


@pytest.fixture(scope="session")
def warm_cache_dir(tmp_path_factory, ncv111_full, ncv012_full):
    """Cache directory pre-seeded with session tables, for CLI tests."""
    cache = tmp_path_factory.mktemp("ncv-cache")
    for table in (ncv111_full, ncv012_full):
        path = cache / f"{table.metric.slug}_{table.topology.slug}.csv"
        with path.open("w", newline="") as fh:
            nio.write_table_csv(table.costs, fh)
    return cache
