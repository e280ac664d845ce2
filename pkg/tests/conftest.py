from __future__ import annotations

from typing import Callable, Dict

import pytest

from lattice_builder import SubgroupLattice, enumerate_subgroups
from utils.group_spec import build_group


@pytest.fixture(scope="session")
def lattice_of() -> Callable[[str], SubgroupLattice]:
    """Named-group lattices, built once per session."""
    cache: Dict[str, SubgroupLattice] = {}

    def build(spec: str) -> SubgroupLattice:
        if spec not in cache:
            cache[spec] = enumerate_subgroups(build_group(spec))
        return cache[spec]

    return build


@pytest.fixture(scope="session")
def s3(lattice_of):
    return lattice_of("S3")


@pytest.fixture(scope="session")
def s4(lattice_of):
    return lattice_of("S4")


@pytest.fixture(scope="session")
def a4(lattice_of):
    return lattice_of("A4")


@pytest.fixture(scope="session")
def a5(lattice_of):
    return lattice_of("A5")


@pytest.fixture(scope="session")
def s5(lattice_of):
    return lattice_of("S5")


@pytest.fixture(scope="session")
def v4(lattice_of):
    # the order-4 dihedral group is the Klein four-group
    return lattice_of("D4")


@pytest.fixture(scope="session")
def trivial(lattice_of):
    return lattice_of("trivial")
