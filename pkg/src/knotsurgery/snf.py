"""Smith normal form over the integers and first-homology bookkeeping.

Everything is exact (Python ints).  smith_normal_form returns unimodular
U, V with U @ A @ V = D diagonal and d_1 | d_2 | ... ; the brute-force
invariant-factor reference via gcds of k x k minors lives here too so tests
can cross-check the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def det(A):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def smith_normal_form(A):
    """Return (U, D, V) with U A V = D in Smith normal form.

    U and V are unimodular; D is diagonal (rectangular allowed) with
    nonnegative diagonal and the divisibility chain d_1 | d_2 | ...
    """
    n = len(A)
    m = len(A[0]) if n else 0
    M = [list(map(int, row)) for row in A]
    U = _identity(n)
    V = _identity(m)

    def row_op(i, j, q):  # row_i -= q * row_j
        if q:
            Mi, Mj, Ui, Uj = M[i], M[j], U[i], U[j]
            for t in range(m):
                Mi[t] -= q * Mj[t]
            for t in range(n):
                Ui[t] -= q * Uj[t]

    def col_op(i, j, q):  # col_i -= q * col_j
        if q:
            for t in range(n):
                M[t][i] -= q * M[t][j]
            for t in range(m):
                V[t][i] -= q * V[t][j]

    def row_swap(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        if i != j:
            for t in range(n):
                M[t][i], M[t][j] = M[t][j], M[t][i]
            for t in range(m):
                V[t][i], V[t][j] = V[t][j], V[t][i]

    for k in range(min(n, m)):
        # bring a minimal-magnitude nonzero of the block to (k, k)
        piv = None
        for i in range(k, n):
            for j in range(k, m):
                if M[i][j] and (piv is None
                                or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(k, piv[0])
        col_swap(k, piv[1])
        while True:
            # clear column k
            restart = False
            for i in range(k + 1, n):
                if M[i][k]:
                    row_op(i, k, M[i][k] // M[k][k])
                    if M[i][k]:
                        row_swap(k, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(k + 1, m):
                if M[k][j]:
                    col_op(j, k, M[k][j] // M[k][k])
                    if M[k][j]:
                        col_swap(k, j)
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the whole remaining block
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, m):
                    if M[i][j] % M[k][k]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(k, offender, -1)  # row_k += offending row, then re-clear
    for i in range(min(n, m)):
        if M[i][i] < 0:
            for t in range(m):
                M[i][t] = -M[i][t]
            for t in range(n):
                U[i][t] = -U[i][t]
    return U, M, V


def invariant_factors(A):
    """(nontrivial torsion factors, free rank) of coker(A) on Z^m rows...

    The matrix presents an abelian group on len(A[0]) generators with one
    relation per row; returns the torsion invariant factors > 1 and the
    free rank.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    if n == 0 or m == 0:
        return (), m
    _, D, _ = smith_normal_form(A)
    r = min(n, m)
    diag = [D[i][i] for i in range(r)]
    rank = sum(1 for d in diag if d)
    torsion = tuple(d for d in diag if d > 1)
    return torsion, m - rank


def invariant_factors_minor_gcd(A):
    """Brute-force reference: d_k = gcd(k-minors) / gcd((k-1)-minors).

    Exponential; intended for matrices up to about 5x5.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    if n == 0 or m == 0:
        return (), m
    r = min(n, m)
    gs = [1]
    for k in range(1, r + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(m), k):
                sub = [[A[i][j] for j in cols] for i in rows]
                g = gcd(g, det(sub))
        gs.append(g)
        if g == 0:
            break
    ds = []
    for k in range(1, len(gs)):
        if gs[k] == 0:
            break
        ds.append(gs[k] // gs[k - 1])
    rank = len(ds)
    torsion = tuple(d for d in ds if d > 1)
    return torsion, m - rank


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: torsion factors and free rank."""

    torsion: tuple
    rank: int

    @staticmethod
    def from_matrix(A):
        torsion, free = invariant_factors(A)
        return AbelianGroup(torsion, free)

    def is_trivial(self):
        return not self.torsion and self.rank == 0

    def order(self):
        """Group order, or None when infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"torsion": list(self.torsion), "rank": self.rank}

    @staticmethod
    def cyclic(n):
        n = abs(n)
        if n == 0:
            return AbelianGroup((), 1)
        if n == 1:
            return AbelianGroup((), 0)
        return AbelianGroup((n,), 0)
