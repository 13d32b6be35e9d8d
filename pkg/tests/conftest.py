import numpy as np

from framecalc import Frame


def random_frame(rng, dim, count, lam_min, lam_max, declared=False):
    """Random frame whose operator spectrum spans exactly [lam_min, lam_max].

    Eigenvalues are placed on a linspace hitting both endpoints, rotated by a
    random orthogonal basis; the vectors are an orthonormal count-by-dim
    column frame times the operator square root.
    """
    assert count >= dim >= 2
    eigenvalues = np.linspace(lam_min, lam_max, dim)
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    q = q * np.where(np.diag(r) < 0, -1.0, 1.0)
    sqrt_op = (q * np.sqrt(eigenvalues)) @ q.T
    u, _ = np.linalg.qr(rng.standard_normal((count, dim)))
    vectors = u @ sqrt_op
    bounds = (float(lam_min), float(lam_max)) if declared else None
    return Frame(dim, vectors, bounds)


def random_unit(rng, dim):
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)
