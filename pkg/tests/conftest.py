import pytest

from twistedreal.conformal import AntiLinearOp, FiniteTriple, QMatrix, kron

I2 = QMatrix.identity(2)


def unit(i, j):
    return QMatrix([[1 if (r, c) == (i, j) else 0 for c in range(2)] for r in range(2)])


V = QMatrix([[0, 1], [1, 0]])
KT = QMatrix([[2, 1], [1, 1]])
KDIAG = QMatrix([[1, 0], [0, 4]])


def gns_triple() -> FiniteTriple:
    """M2 acting by left multiplication on its own 4-dim space, J = adjoint,
    D(h) = v h + h v with v = [[0,1],[1,0]]."""
    gens = tuple(kron(unit(i, j), I2) for i in range(2) for j in range(2))
    D = kron(V, I2) + kron(I2, V.transpose())
    K = QMatrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    return FiniteTriple(n=4, gens=gens, D=D, J=AntiLinearOp(K), epsilon=1, epsilon_prime=1)


@pytest.fixture
def gns():
    t = gns_triple()
    t.validate()
    return t


@pytest.fixture
def k_left():
    """The conformal factor L_{[[2,1],[1,1]]} on the GNS space."""
    return kron(KT, I2)


@pytest.fixture
def k_diag():
    return kron(KDIAG, I2)
