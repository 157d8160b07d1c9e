import numpy as np
import pytest

from codewigner import codes, gf2, matgen


@pytest.fixture(scope="session")
def field16():
    return gf2.field_new(4)


@pytest.fixture(scope="session")
def code_3_3():
    return codes.bch_code(3, 3)


@pytest.fixture(scope="session")
def code_4_5():
    return codes.bch_code(4, 5)


@pytest.fixture(scope="session")
def params_3():
    return matgen.ensemble_params(3, 3)


@pytest.fixture(scope="session")
def all_sign_matrices_n2():
    """All 8 symmetric sign matrices of order 2."""
    out = []
    for mask in range(8):
        bits = np.array([(mask >> i) & 1 for i in range(3)])
        out.append(matgen.build_matrix(matgen.zeta(bits), 2))
    return out
