"""Exact linear algebra over the prime field F_q.

Matrices are numpy int64 arrays holding canonical residues.  ``q`` is capped
below 2**31 so that a product of two residues never overflows int64.
Dense elimination is used up to ``sparse_threshold`` rows/columns; larger
rank computations switch to a dict-of-rows elimination.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ArgumentError

DEFAULT_PRIME = 32003
CROSS_CHECK_PRIME = 2
SPARSE_THRESHOLD = 512


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    def __init__(self, q: int = DEFAULT_PRIME, sparse_threshold: int = SPARSE_THRESHOLD):
        q = int(q)
        if not is_prime(q):
            raise ArgumentError(f"{q} is not prime")
        if q >= 2**31:
            raise ArgumentError("field prime must be below 2**31")
        self.q = q
        self.sparse_threshold = sparse_threshold

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    # scalars

    def reduce(self, x: int) -> int:
        return int(x) % self.q

    def inv(self, x: int) -> int:
        x = int(x) % self.q
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, self.q - 2, self.q)

    def neg(self, x: int) -> int:
        return (-int(x)) % self.q

    # matrices

    def matrix(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        return a % self.q

    def rref(self, a: np.ndarray):
        """Reduced row echelon form and pivot columns."""
        q = self.q
        a = np.array(a, dtype=np.int64) % q
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, c])
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            inv = pow(int(a[r, c]), q - 2, q)
            if inv != 1:
                a[r] = (a[r] * inv) % q
            col = a[:, c].copy()
            col[r] = 0
            hit = np.flatnonzero(col)
            if hit.size:
                a[hit] = (a[hit] - np.outer(col[hit], a[r])) % q
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self, a) -> int:
        a = np.asarray(a)
        if a.size == 0:
            return 0
        if max(a.shape) > self.sparse_threshold:
            return self._sparse_rank(a)
        return len(self.rref(a)[1])

    def _sparse_rank(self, a) -> int:
        q = self.q
        pivot_rows = {}  # leading column -> row dict with leading entry 1
        for row in np.asarray(a):
            cur = {int(j): int(v) % q for j, v in zip(np.flatnonzero(row), row[np.flatnonzero(row)])}
            cur = {j: v for j, v in cur.items() if v}
            while cur:
                lead = min(cur)
                prow = pivot_rows.get(lead)
                if prow is None:
                    inv = pow(cur[lead], q - 2, q)
                    pivot_rows[lead] = {j: v * inv % q for j, v in cur.items()}
                    break
                f = cur[lead]
                for j, v in prow.items():
                    nv = (cur.get(j, 0) - f * v) % q
                    if nv:
                        cur[j] = nv
                    else:
                        cur.pop(j, None)
        return len(pivot_rows)

    def nullspace(self, a) -> np.ndarray:
        """Rows form a basis of {x : a @ x = 0}."""
        a = np.asarray(a, dtype=np.int64)
        rows, cols = a.shape
        if cols == 0:
            return np.zeros((0, 0), dtype=np.int64)
        if rows == 0:
            return np.eye(cols, dtype=np.int64)
        r, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, p in enumerate(pivots):
                basis[k, p] = (-r[i, f]) % self.q
        return basis

    def solve(self, a, b):
        """Some x with a @ x = b, or None if the system is inconsistent."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64).reshape(-1)
        rows, cols = a.shape if a.ndim == 2 else (len(b), 0)
        if rows == 0:
            return np.zeros(cols, dtype=np.int64)
        if cols == 0:
            return np.zeros(0, dtype=np.int64) if not np.any(b % self.q) else None
        aug = np.concatenate([a.reshape(rows, cols), b.reshape(-1, 1)], axis=1)
        r, pivots = self.rref(aug)
        if cols in pivots:
            return None
        x = np.zeros(cols, dtype=np.int64)
        for i, p in enumerate(pivots):
            x[p] = r[i, cols]
        return x

    def matmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        # chunked accumulation keeps every partial sum below 2**63
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        step = max(1, (2**62) // (self.q - 1) ** 2) if self.q > 2 else a.shape[1]
        for s in range(0, a.shape[1], step):
            out = (out + a[:, s:s + step] @ b[s:s + step]) % self.q
        return out

    def det(self, a) -> int:
        a = np.array(a, dtype=np.int64) % self.q
        n = a.shape[0]
        det = 1
        for c in range(n):
            nz = np.flatnonzero(a[c:, c])
            if nz.size == 0:
                return 0
            piv = c + int(nz[0])
            if piv != c:
                a[[c, piv]] = a[[piv, c]]
                det = -det
            det = det * int(a[c, c]) % self.q
            inv = pow(int(a[c, c]), self.q - 2, self.q)
            below = a[c + 1:, c] * inv % self.q
            a[c + 1:] = (a[c + 1:] - np.outer(below, a[c])) % self.q
        return det % self.q


@lru_cache(maxsize=None)
def get_field(q: int) -> PrimeField:
    return PrimeField(q)


def as_field(field) -> PrimeField:
    if isinstance(field, PrimeField):
        return field
    return get_field(int(field))
