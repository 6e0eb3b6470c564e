import os

import pytest

from chromastab import generate, kernels

JOBS = min(4, os.cpu_count() or 1)


@pytest.fixture(scope="session")
def jobs():
    return JOBS


@pytest.fixture(scope="session")
def s9_catalog():
    """The 30-entry order-9 catalog; shared across the whole suite."""
    spec = generate.GenSpec(9, max_degree=4, predicate="family-members")
    return generate.enumerate_catalog(spec, jobs=JOBS)


@pytest.fixture(scope="session")
def levels_through_8():
    """Every isomorphism class of orders 1..8 (unbounded), cached."""
    return generate.all_levels(8, None, JOBS)


@pytest.fixture(params=["pure", "compiled"])
def backend(request):
    """Run a test under each kernel backend."""
    if request.param == "compiled" and not kernels.have_compiled():
        pytest.skip("compiled kernel extension not built")
    kernels.set_backend(request.param)
    yield kernels.active()
    kernels.set_backend("auto")


@pytest.fixture()
def pure_backend():
    kernels.set_backend("pure")
    yield kernels.active()
    kernels.set_backend("auto")
