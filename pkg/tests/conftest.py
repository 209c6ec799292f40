import pytest

from hopfbax import build_double, build_taft, spin_half, spin_one, \
    uqsl2_r_matrix


@pytest.fixture(scope="session")
def taft2():
    return build_taft(2)


@pytest.fixture(scope="session")
def taft3():
    return build_taft(3)


@pytest.fixture(scope="session")
def taft4():
    return build_taft(4)


@pytest.fixture(scope="session")
def double2(taft2):
    return build_double(taft2)


@pytest.fixture(scope="session")
def double3(taft3):
    return build_double(taft3)


@pytest.fixture(scope="session")
def double4_reps(taft4):
    from hopfbax import rep_irreducible
    d = build_double(taft4)
    return d, {l: rep_irreducible(d, 3, l) for l in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def r_half():
    return uqsl2_r_matrix(spin_half(), parametric=True)


@pytest.fixture(scope="session")
def r_one():
    return uqsl2_r_matrix(spin_one(), parametric=True)
