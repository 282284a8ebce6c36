"""Float-backend matrix decompositions.

Everything here leans on the SVD, so the exact backend is rejected at the
boundary with a BackendError. Tests compare reconstructions and invariants
rather than individual factor entries, since unitary factors are only
determined up to phase.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BackendError, DomainError, ShapeError
from .matrix import (EQ_TOL, EXACT, FLOAT, RANK_FACTOR, Matrix, block,
                     hstack, matrices_equal, rank)
from .pinv import moore_penrose


def _require_float(a: Matrix, what: str):
    if a.backend == EXACT:
        raise BackendError("%s needs the float backend" % what)


@dataclass(frozen=True)
class SVDForm:
    """Full singular value decomposition a = u diag(sigma) v*."""

    u: Matrix
    sigma: tuple
    v: Matrix

    def sigma_matrix(self) -> Matrix:
        m, n = self.u.rows, self.v.rows
        out = np.zeros((m, n), dtype=complex)
        for i, s in enumerate(self.sigma):
            out[i, i] = s
        return Matrix.from_ndarray(out)

    def reconstruct(self) -> Matrix:
        return self.u @ self.sigma_matrix() @ self.v.ct


def svd(a: Matrix) -> SVDForm:
    """Full SVD with singular values in descending order."""
    _require_float(a, "svd")
    if a.rows == 0 or a.cols == 0:
        return SVDForm(Matrix.identity(a.rows, FLOAT), (),
                       Matrix.identity(a.cols, FLOAT))
    u, s, vh = np.linalg.svd(a.to_ndarray())
    return SVDForm(Matrix.from_ndarray(u), tuple(float(x) for x in s),
                   Matrix.from_ndarray(vh.conj().T))


@dataclass(frozen=True)
class HSForm:
    """Unitary similarity form b = u [[sk, sl], [0, 0]] u* of a square matrix.

    sigma holds the r positive singular values of b (descending), k is
    r x r, l is r x (n - r), and k k* + l l* = I_r. The pseudoinverse has
    the closed form u [[k* s^-1, 0], [l* s^-1, 0]] u*.
    """

    u: Matrix
    sigma: tuple
    k: Matrix
    l: Matrix

    @property
    def r(self) -> int:
        return len(self.sigma)

    @property
    def n(self) -> int:
        return self.u.rows

    def sigma_diag(self) -> Matrix:
        return Matrix.from_ndarray(np.diag(np.array(self.sigma, dtype=complex)))

    def sigma_inv(self) -> Matrix:
        return Matrix.from_ndarray(
            np.diag(np.array([1.0 / s for s in self.sigma], dtype=complex)))

    def core(self) -> Matrix:
        """The n x n block matrix [[sk, sl], [0, 0]]."""
        s = self.sigma_diag()
        top = hstack(s @ self.k, s @ self.l)
        bottom = Matrix.zeros(self.n - self.r, self.n, FLOAT)
        return block([[top], [bottom]])

    def reconstruct(self) -> Matrix:
        return self.u @ self.core() @ self.u.ct

    def pinv(self) -> Matrix:
        """Closed-form pseudoinverse of the reconstructed matrix."""
        si = self.sigma_inv()
        left = block([[self.k.ct @ si], [self.l.ct @ si]])
        rest = Matrix.zeros(self.n, self.n - self.r, FLOAT)
        return self.u @ hstack(left, rest) @ self.u.ct


def hartwig_spindelbock(b: Matrix, rank_factor: float = RANK_FACTOR) -> HSForm:
    """Factor a square matrix as u [[sk, sl], [0, 0]] u* with u unitary.

    u comes from the SVD b = u1 diag(s) v1*; the top block row is then
    diag(s) times the leading rows of v1* u1, which splits into k and l
    with k k* + l l* = I_r.
    """
    _require_float(b, "hartwig_spindelbock")
    if not b.is_square:
        raise ShapeError("need a square matrix, got %sx%s" % b.shape)
    n = b.rows
    if n == 0:
        return HSForm(Matrix.identity(0, FLOAT), (), Matrix.zeros(0, 0, FLOAT),
                      Matrix.zeros(0, 0, FLOAT))
    arr = b.to_ndarray()
    u1, s, v1h = np.linalg.svd(arr)
    if s.size and s[0] > 0.0:
        cutoff = n * s[0] * (2.0 ** -52) * rank_factor
        r = int(np.count_nonzero(s > cutoff))
    else:
        r = 0
    w = v1h @ u1
    k = Matrix.from_ndarray(w[:r, :r])
    l = Matrix.from_ndarray(w[:r, r:])
    return HSForm(Matrix.from_ndarray(u1), tuple(float(x) for x in s[:r]), k, l)


def partitioned_mp(p: Matrix, q: Matrix):
    """Pseudoinverse of m = [[p, q], [0, 0]] from r = p p* + q q*.

    The zero block row pads m to p.cols + q.cols rows when that exceeds the
    row count of [p q], otherwise no padding is added. Returns (m, m_pinv)
    with m_pinv = [[p* r+, 0], [q* r+, 0]].
    """
    if p.rows != q.rows:
        raise ShapeError("blocks need equal row counts")
    if p.backend != q.backend:
        raise BackendError("mixed backends")
    m_rows = p.rows
    total_cols = p.cols + q.cols
    pad = max(total_cols - m_rows, 0)
    top = hstack(p, q)
    m = block([[top], [Matrix.zeros(pad, total_cols, p.backend)]]) if pad else top
    r = p @ p.ct + q @ q.ct
    rd = moore_penrose(r)
    left = block([[p.ct @ rd], [q.ct @ rd]])
    if pad:
        mp = hstack(left, Matrix.zeros(total_cols, pad, p.backend))
    else:
        mp = left
    return m, mp


@dataclass(frozen=True)
class CanonicalPair:
    """Simultaneous block form of a pair a, b with a below b in diamond order.

    With r = rank(b) and t = rank(a), there are unitaries u, v such that

        a = u [[a_core, 0], [0, 0]] v*      (a_core is t x r)
        b = u [[b_core, 0], [0, 0]] v*      (b_core is r x r)

    where a_core a_core* = a_core (top t rows of b_core)* and that common
    Gram matrix is nonsingular.
    """

    u: Matrix
    v: Matrix
    a_core: Matrix
    b_core: Matrix

    @property
    def rank_first(self) -> int:
        return self.a_core.rows

    @property
    def rank_second(self) -> int:
        return self.b_core.rows

    def _embed(self, core: Matrix) -> Matrix:
        m, n = self.u.rows, self.v.rows
        out = np.zeros((m, n), dtype=complex)
        arr = core.to_ndarray()
        out[: core.rows, : core.cols] = arr
        return self.u @ Matrix.from_ndarray(out) @ self.v.ct

    def first(self) -> Matrix:
        return self._embed(self.a_core)

    def second(self) -> Matrix:
        return self._embed(self.b_core)

    # named blocks of the partition
    @property
    def a_left(self) -> Matrix:
        t = self.rank_first
        return self.a_core.submatrix(0, t, 0, t)

    @property
    def a_right(self) -> Matrix:
        t, r = self.rank_first, self.rank_second
        return self.a_core.submatrix(0, t, t, r)

    def b_blocks(self):
        t, r = self.rank_first, self.rank_second
        c = self.b_core
        return (c.submatrix(0, t, 0, t), c.submatrix(0, t, t, r),
                c.submatrix(t, r, 0, t), c.submatrix(t, r, t, r))

    def gram(self) -> Matrix:
        return self.a_core @ self.a_core.ct

    def cross_gram(self) -> Matrix:
        t = self.rank_first
        return self.a_core @ self.b_core.submatrix(0, t, 0, self.rank_second).ct


def diamond_canonical_pair(a: Matrix, b: Matrix, tol: float = EQ_TOL,
                           rank_factor: float = RANK_FACTOR) -> CanonicalPair:
    """Simultaneous unitary block form for a diamond-comparable pair.

    Requires a below b in the diamond order and a nonzero; the zero matrix
    sits below everything and carries no block data, so it is rejected.
    """
    from .orders import leq_diamond

    _require_float(a, "diamond_canonical_pair")
    _require_float(b, "diamond_canonical_pair")
    if a.shape != b.shape:
        raise ShapeError("need equal shapes, got %s and %s" % (a.shape, b.shape))
    if rank(a, rank_factor) == 0:
        raise DomainError("zero lower matrix has no canonical block form")
    if not leq_diamond(a, b, tol=tol).verdict:
        raise DomainError("pair is not diamond-comparable")

    m, n = a.shape
    u1, s, v1h = np.linalg.svd(b.to_ndarray())
    cutoff = max(m, n) * s[0] * (2.0 ** -52) * rank_factor
    r = int(np.count_nonzero(s > cutoff))
    d = np.diag(s[:r])

    a_rot = u1.conj().T @ a.to_ndarray() @ v1h.conj().T
    a1 = Matrix.from_ndarray(a_rot[:r, :r])

    hs = hartwig_spindelbock(a1, rank_factor)
    t = hs.r
    u2 = hs.u.to_ndarray()

    u_full = u1.copy()
    u_full[:, :r] = u1[:, :r] @ u2
    v_full = v1h.conj().T.copy()
    v_full[:, :r] = v_full[:, :r] @ u2

    a_core = hs.core().submatrix(0, t, 0, r)
    b_core = Matrix.from_ndarray(u2.conj().T @ d @ u2)
    return CanonicalPair(Matrix.from_ndarray(u_full),
                         Matrix.from_ndarray(v_full), a_core, b_core)
