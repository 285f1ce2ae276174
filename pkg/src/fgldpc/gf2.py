"""Dense bit-packed GF(2) matrices.

Rows are stored as little-endian ``uint64`` words: column ``c`` lives in word
``c // 64`` at bit ``c % 64``.  Padding bits beyond ``n_cols`` are always zero.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

WORD = 64
_CHUNK = 1024


def n_words(n_cols: int) -> int:
    return max(1, -(-n_cols // WORD))


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a ``(..., n)`` 0/1 array into ``(..., n_words(n))`` uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    packed = np.packbits(bits, axis=-1, bitorder="little")
    pad = n_words(n) * 8 - packed.shape[-1]
    if pad:
        packed = np.concatenate(
            [packed, np.zeros(packed.shape[:-1] + (pad,), dtype=np.uint8)], axis=-1
        )
    return np.ascontiguousarray(packed).view("<u8")


def unpack_bits(words: np.ndarray, n_cols: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`."""
    words = np.ascontiguousarray(words, dtype="<u8")
    return np.unpackbits(words.view(np.uint8), axis=-1, count=n_cols, bitorder="little")


class BinaryMatrix:
    """An immutable ``m x n`` matrix over GF(2)."""

    __slots__ = ("_words", "_n_cols")

    def __init__(self, words: np.ndarray, n_cols: int):
        words = np.array(words, dtype="<u8", copy=True)
        if words.ndim != 2 or words.shape[1] != n_words(n_cols):
            raise ValueError(f"word array of shape {words.shape} does not fit {n_cols} columns")
        words.setflags(write=False)
        self._words = words
        self._n_cols = n_cols

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> BinaryMatrix:
        return cls(np.zeros((n_rows, n_words(n_cols)), dtype="<u8"), n_cols)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls.from_coordinates(np.arange(n), np.arange(n), (n, n))

    @classmethod
    def from_dense(cls, array) -> BinaryMatrix:
        array = np.asarray(array)
        if array.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(pack_bits(array & 1), array.shape[1])

    @classmethod
    def from_coordinates(cls, rows, cols, shape: tuple[int, int]) -> BinaryMatrix:
        """Matrix with ones at ``(rows[i], cols[i])``; repeated entries stay 1."""
        m, n = shape
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if rows.size and (rows.min() < 0 or rows.max() >= m or cols.min() < 0 or cols.max() >= n):
            raise IndexError("coordinate out of range")
        words = np.zeros((m, n_words(n)), dtype="<u8")
        np.bitwise_or.at(
            words, (rows, cols // WORD), np.left_shift(np.uint64(1), (cols % WORD).astype(np.uint64))
        )
        return cls(words, n)

    @classmethod
    def from_supports(cls, supports, n_cols: int) -> BinaryMatrix:
        """Matrix whose ``i``-th row has ones exactly at ``supports[i]``."""
        supports = [np.asarray(s, dtype=np.int64).ravel() for s in supports]
        rows = np.repeat(np.arange(len(supports)), [s.size for s in supports])
        cols = np.concatenate(supports) if supports else np.zeros(0, dtype=np.int64)
        return cls.from_coordinates(rows, cols, (len(supports), n_cols))

    # -- views -------------------------------------------------------------

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def shape(self) -> tuple[int, int]:
        return (self._words.shape[0], self._n_cols)

    @property
    def n_rows(self) -> int:
        return self._words.shape[0]

    @property
    def n_cols(self) -> int:
        return self._n_cols

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self):
        return hash((self.shape, self._words.tobytes()))

    def __getstate__(self):
        return (self._words, self._n_cols)

    def __setstate__(self, state):
        words, n_cols = state
        words = np.array(words, copy=True)
        words.setflags(write=False)
        self._words = words
        self._n_cols = n_cols

    def to_dense(self) -> np.ndarray:
        return unpack_bits(self._words, self._n_cols)

    def row(self, i: int) -> np.ndarray:
        return unpack_bits(self._words[i], self._n_cols)

    def rows(self, index) -> BinaryMatrix:
        """Submatrix made of the given rows, in the given order."""
        return BinaryMatrix(self._words[np.asarray(index)], self._n_cols)

    def nonzero(self) -> tuple[np.ndarray, np.ndarray]:
        """Row and column indices of the ones, in row-major order."""
        rows, cols = [], []
        for start in range(0, self.n_rows, _CHUNK):
            r, c = np.nonzero(unpack_bits(self._words[start:start + _CHUNK], self._n_cols))
            rows.append(r + start)
            cols.append(c)
        if not rows:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        return np.concatenate(rows).astype(np.int64), np.concatenate(cols).astype(np.int64)

    def row_supports(self) -> list[np.ndarray]:
        rows, cols = self.nonzero()
        return np.split(cols, np.searchsorted(rows, np.arange(1, self.n_rows)))

    @property
    def nnz(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self._words).sum(axis=1).astype(np.int64)

    def col_weights(self) -> np.ndarray:
        _, cols = self.nonzero()
        return np.bincount(cols, minlength=self._n_cols).astype(np.int64)

    def density(self) -> float:
        return self.nnz / (self.n_rows * self.n_cols)

    def to_sparse(self) -> sp.csr_matrix:
        rows, cols = self.nonzero()
        data = np.ones(rows.size, dtype=np.int32)
        return sp.csr_matrix((data, (rows, cols)), shape=self.shape)

    @property
    def T(self) -> BinaryMatrix:
        rows, cols = self.nonzero()
        return BinaryMatrix.from_coordinates(cols, rows, (self.n_cols, self.n_rows))

    def transpose(self) -> BinaryMatrix:
        return self.T

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """``M @ v mod 2`` for a 0/1 vector, or for each row of a 2-D batch."""
        v = np.asarray(v)
        if v.shape[-1] != self._n_cols:
            raise ValueError(f"vector length {v.shape[-1]} != {self._n_cols} columns")
        packed = pack_bits(v)
        if packed.ndim == 1:
            return (np.bitwise_count(self._words & packed).sum(axis=1) & 1).astype(np.uint8)
        prod = np.bitwise_count(packed[:, None, :] & self._words[None, :, :]).sum(axis=2)
        return (prod & 1).astype(np.uint8)


# -- elimination ----------------------------------------------------------


def _eliminate(words: np.ndarray, n_cols: int, reduced: bool) -> list[int]:
    """In-place Gaussian elimination on packed rows; returns pivot columns.

    After the call the first ``len(pivots)`` rows form an echelon basis
    (reduced if ``reduced``) and the remaining rows are zero.
    """
    m = words.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == m:
            break
        w, b = divmod(col, WORD)
        hits = np.flatnonzero((words[r:, w] >> np.uint64(b)) & np.uint64(1)) + r
        if hits.size == 0:
            continue
        p = hits[0]
        if p != r:
            words[[r, p]] = words[[p, r]]
        # Rows after the first hit are unaffected by the swap.
        hits = hits[1:]
        if reduced:
            above = np.flatnonzero((words[:r, w] >> np.uint64(b)) & np.uint64(1))
            hits = np.concatenate([above, hits])
        if hits.size:
            words[hits, w:] ^= words[r, w:]
        pivots.append(col)
        r += 1
    return pivots


def rank_gf2(M: BinaryMatrix) -> int:
    """Rank over GF(2), eliminating along the shorter dimension."""
    if M.n_rows > M.n_cols and M.n_rows > WORD:
        M = M.T
    work = np.array(M.words, copy=True)
    return len(_eliminate(work, M.n_cols, reduced=False))


def row_echelon(M: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    """Reduced row echelon basis of the row space and its pivot columns."""
    work = np.array(M.words, copy=True)
    pivots = _eliminate(work, M.n_cols, reduced=True)
    return BinaryMatrix(work[: len(pivots)], M.n_cols), pivots


def null_space(M: BinaryMatrix) -> BinaryMatrix:
    """A basis (as rows) of ``{x : M x = 0}``."""
    basis, pivots = row_echelon(M)
    n = M.n_cols
    free = np.setdiff1d(np.arange(n), pivots)
    out = np.zeros((free.size, n), dtype=np.uint8)
    out[np.arange(free.size), free] = 1
    if pivots:
        out[:, pivots] = basis.to_dense()[:, free].T
    return BinaryMatrix.from_dense(out)


class RowSpace:
    """Membership oracle for the row space of a fixed matrix."""

    def __init__(self, M: BinaryMatrix):
        basis, pivots = row_echelon(M)
        self.n_cols = M.n_cols
        self.rank = len(pivots)
        self._basis = basis.words
        self._pivots = pivots

    def reduce(self, vectors: np.ndarray) -> np.ndarray:
        """Reduce packed vectors (``(k, words)``) modulo the row space."""
        v = np.array(vectors, dtype="<u8", copy=True)
        for row, col in zip(self._basis, self._pivots):
            w, b = divmod(col, WORD)
            hit = ((v[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
            if hit.any():
                v[hit] ^= row
        return v

    def contains_many(self, vectors) -> np.ndarray:
        """Boolean membership for each row of a 0/1 array or a BinaryMatrix."""
        if isinstance(vectors, BinaryMatrix):
            if vectors.n_cols != self.n_cols:
                raise ValueError("length mismatch")
            packed = vectors.words
        else:
            vectors = np.atleast_2d(np.asarray(vectors))
            if vectors.shape[1] != self.n_cols:
                raise ValueError(f"vector length {vectors.shape[1]} != {self.n_cols}")
            packed = pack_bits(vectors)
        out = np.empty(packed.shape[0], dtype=bool)
        for start in range(0, packed.shape[0], _CHUNK):
            red = self.reduce(packed[start:start + _CHUNK])
            out[start:start + _CHUNK] = ~red.any(axis=1)
        return out

    def contains(self, v) -> bool:
        return bool(self.contains_many(np.asarray(v)[None, :])[0])


def row_space_contains(M: BinaryMatrix, v) -> bool:
    """Whether ``v`` is a GF(2) combination of rows of ``M`` (rank comparison)."""
    v = np.asarray(v, dtype=np.uint8).ravel()
    if v.size != M.n_cols:
        raise ValueError(f"vector length {v.size} != {M.n_cols}")
    augmented = BinaryMatrix(np.vstack([M.words, pack_bits(v)[None, :]]), M.n_cols)
    return rank_gf2(augmented) == rank_gf2(M)


# -- products and structure -----------------------------------------------


def _row_products(M: BinaryMatrix):
    """Yield ``(start, block)`` with ``block = M[start:start+c] @ M.T`` as integer counts."""
    S = M.to_sparse()
    St = S.T.tocsr()
    for start in range(0, M.n_rows, _CHUNK):
        yield start, (S[start:start + _CHUNK] @ St)


def gram(M: BinaryMatrix) -> BinaryMatrix:
    """``M M^T`` over GF(2)."""
    m = M.n_rows
    words = np.zeros((m, n_words(m)), dtype="<u8")
    for start, block in _row_products(M):
        words[start:start + block.shape[0]] = pack_bits(block.toarray() & 1)
    return BinaryMatrix(words, m)


def pairwise_overlap_max(M: BinaryMatrix) -> int:
    """Largest number of common ones between two distinct rows."""
    best = 0
    for start, block in _row_products(M):
        block = block.tocoo()
        off = block.row + start != block.col
        if off.any():
            best = max(best, int(block.data[off].max()))
    return best


def girth_at_least_6(M: BinaryMatrix) -> bool:
    """True iff no two columns share two rows, i.e. the Tanner graph has no 4-cycles."""
    return pairwise_overlap_max(M.T) <= 1


def cyclic_shift(words: np.ndarray, n_cols: int, k: int = 1) -> np.ndarray:
    """Right cyclic shift by ``k`` of packed rows."""
    return pack_bits(np.roll(unpack_bits(words, n_cols), k, axis=-1))


def is_circulant(M: BinaryMatrix) -> bool:
    """Square, and every row is the 1-step right cyclic shift of the previous one."""
    m, n = M.shape
    if m != n:
        return False
    if m <= 1:
        return True
    return np.array_equal(cyclic_shift(M.words[:-1], n), M.words[1:])


def circulant_blocks(M: BinaryMatrix, size: int) -> bool:
    """True iff ``M`` splits into side-by-side ``size x size`` circulant blocks."""
    m, n = M.shape
    if m != size or n % size:
        return False
    dense = M.to_dense()
    return all(
        is_circulant(BinaryMatrix.from_dense(dense[:, j:j + size])) for j in range(0, n, size)
    )


def cyclic_shift_closed(M: BinaryMatrix) -> bool:
    """True iff the right cyclic shift of every row lies in the row space."""
    space = RowSpace(M)
    for start in range(0, M.n_rows, _CHUNK):
        shifted = cyclic_shift(M.words[start:start + _CHUNK], M.n_cols)
        if space.reduce(shifted).any():
            return False
    return True


def min_distance_exhaustive(M: BinaryMatrix, budget: int = 24) -> int:
    """Minimum weight of a nonzero vector in the null space of ``M``.

    Enumerates all ``2**k - 1`` codewords.  The low part of the basis is
    expanded into a table once; the high part is walked in Gray-code order
    so each step costs one XOR of the table against a single word-vector.
    """
    basis = null_space(M).words
    k = basis.shape[0]
    if k == 0:
        raise ValueError("null space is trivial; minimum distance undefined")
    if k > budget:
        raise ValueError(f"null space dimension {k} exceeds budget {budget}")

    low = min(k, 16)
    table = np.zeros((1, basis.shape[1]), dtype="<u8")
    for b in basis[:low]:
        table = np.concatenate([table, table ^ b])
    table_weights = np.bitwise_count(table).sum(axis=1)
    best = int(table_weights[1:].min()) if table.shape[0] > 1 else M.n_cols + 1

    high = basis[low:]
    offset = np.zeros(basis.shape[1], dtype="<u8")
    for i in range(1, 2 ** high.shape[0]):
        # Gray code: flip the basis vector at the lowest set bit of i.
        offset ^= high[(i & -i).bit_length() - 1]
        best = min(best, int(np.bitwise_count(table ^ offset).sum(axis=1).min()))
    return best
