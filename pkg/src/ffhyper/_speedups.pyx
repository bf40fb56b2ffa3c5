# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python arithmetic kernel.

Coefficients are int64 with 128-bit accumulators.  Inputs (and reduction
rows) are capped at |x| < 2^48 and intermediate sums are range-checked,
so any value that could not be represented raises OverflowError instead
of wrapping; the caller then redoes the operation on the pure kernel.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef extern from *:
    ctypedef long long int128 "__int128"

ctypedef long long i64

cdef i64 I64MAX = 0x7FFFFFFFFFFFFFFF
cdef i64 INPUT_MAX = (<i64>1) << 48


cdef i64* _alloc_i64(Py_ssize_t n) except NULL:
    cdef i64* buf = <i64*> PyMem_Malloc(n * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef int128* _alloc_i128(Py_ssize_t n) except NULL:
    cdef int128* buf = <int128*> PyMem_Malloc(n * sizeof(int128))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef int _fill_checked(i64* dst, object row, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    cdef i64 v
    for i in range(n):
        v = row[i]
        if v > INPUT_MAX or v < -INPUT_MAX:
            raise OverflowError("kernel input exceeds the int64 fast-path range")
        dst[i] = v
    return 0


cdef class KernelRing:
    cdef int N, phi, nred
    cdef i64* red

    def __cinit__(self, int N, int phi, object red):
        self.N = N
        self.phi = phi
        self.nred = len(red)
        self.red = NULL
        self.red = _alloc_i64(<Py_ssize_t> self.nred * phi)
        cdef Py_ssize_t d
        for d in range(self.nred):
            _fill_checked(self.red + d * phi, red[d], phi)

    def __dealloc__(self):
        if self.red != NULL:
            PyMem_Free(self.red)

    cdef int _reduce_raw(self, int128* raw, Py_ssize_t nraw, int128* out) except -1:
        cdef int phi = self.phi
        cdef Py_ssize_t d, t
        cdef int128 c
        cdef i64 c64
        cdef i64* row
        for t in range(phi):
            out[t] = raw[t] if t < nraw else 0
        for d in range(nraw - 1, phi - 1, -1):
            c = raw[d]
            if c != 0:
                if c > I64MAX or c < -I64MAX:
                    raise OverflowError("reduction coefficient out of int64 range")
                c64 = <i64> c
                row = self.red + (d - phi) * phi
                for t in range(phi):
                    out[t] += (<int128> c64) * row[t]
        return 0

    cdef object _emit(self, int128* out):
        cdef int phi = self.phi
        cdef Py_ssize_t t
        cdef list result = [0] * phi
        for t in range(phi):
            if out[t] > I64MAX or out[t] < -I64MAX:
                raise OverflowError("kernel result exceeds int64")
            result[t] = <i64> out[t]
        return result

    def reduce(self, object raw):
        cdef Py_ssize_t nraw = len(raw)
        cdef int128* buf = _alloc_i128(nraw + self.phi)
        cdef int128* out = buf + nraw
        cdef Py_ssize_t i
        cdef i64 v
        try:
            for i in range(nraw):
                v = raw[i]
                buf[i] = v
            self._reduce_raw(buf, nraw, out)
            return self._emit(out)
        finally:
            PyMem_Free(buf)

    def mul(self, object a, object b):
        cdef int phi = self.phi
        cdef Py_ssize_t nraw = 2 * phi - 1
        cdef i64* ab = _alloc_i64(2 * phi)
        cdef int128* raw = NULL
        cdef Py_ssize_t i, j
        cdef i64 ai
        try:
            _fill_checked(ab, a, phi)
            _fill_checked(ab + phi, b, phi)
            raw = _alloc_i128(nraw + phi)
            for i in range(nraw):
                raw[i] = 0
            for i in range(phi):
                ai = ab[i]
                if ai != 0:
                    for j in range(phi):
                        raw[i + j] += (<int128> ai) * ab[phi + j]
            self._reduce_raw(raw, nraw, raw + nraw)
            return self._emit(raw + nraw)
        finally:
            PyMem_Free(ab)
            if raw != NULL:
                PyMem_Free(raw)

    def shift(self, object a, int k):
        cdef int phi = self.phi
        cdef Py_ssize_t nraw = k + phi
        cdef i64* buf = _alloc_i64(phi)
        cdef int128* raw = NULL
        cdef Py_ssize_t i
        try:
            _fill_checked(buf, a, phi)
            raw = _alloc_i128(nraw + phi)
            for i in range(nraw):
                raw[i] = 0
            for i in range(phi):
                raw[k + i] = buf[i]
            self._reduce_raw(raw, nraw, raw + nraw)
            return self._emit(raw + nraw)
        finally:
            PyMem_Free(buf)
            if raw != NULL:
                PyMem_Free(raw)

    def conv(self, object arows, object brows):
        """Cyclic convolution over Z/m of two length-m tables of vectors."""
        cdef Py_ssize_t m = len(arows)
        cdef int phi = self.phi
        cdef Py_ssize_t nraw = 2 * phi - 1
        cdef i64* amat = _alloc_i64(m * phi)
        cdef i64* bmat = NULL
        cdef int128* raw = NULL
        cdef int128* out = NULL
        cdef Py_ssize_t i, j, x, y, k
        cdef i64 ax
        cdef i64* ar
        cdef i64* br
        cdef int128* acc
        try:
            for i in range(m):
                _fill_checked(amat + i * phi, arows[i], phi)
            bmat = _alloc_i64(m * phi)
            for i in range(m):
                _fill_checked(bmat + i * phi, brows[i], phi)
            raw = _alloc_i128(m * nraw)
            for i in range(m * nraw):
                raw[i] = 0
            for i in range(m):
                ar = amat + i * phi
                for j in range(m):
                    br = bmat + j * phi
                    k = (i + j) % m
                    acc = raw + k * nraw
                    for x in range(phi):
                        ax = ar[x]
                        if ax != 0:
                            for y in range(phi):
                                acc[x + y] += (<int128> ax) * br[y]
            out = _alloc_i128(phi)
            result = []
            for k in range(m):
                self._reduce_raw(raw + k * nraw, nraw, out)
                result.append(self._emit(out))
            return result
        finally:
            PyMem_Free(amat)
            if bmat != NULL:
                PyMem_Free(bmat)
            if raw != NULL:
                PyMem_Free(raw)
            if out != NULL:
                PyMem_Free(out)

    def dot(self, object arows, object brows):
        cdef Py_ssize_t m = len(arows)
        cdef int phi = self.phi
        cdef Py_ssize_t nraw = 2 * phi - 1
        cdef i64* ab = _alloc_i64(2 * phi)
        cdef int128* raw = NULL
        cdef Py_ssize_t i, x, y
        cdef i64 ax
        try:
            raw = _alloc_i128(nraw + phi)
            for i in range(nraw):
                raw[i] = 0
            for i in range(m):
                _fill_checked(ab, arows[i], phi)
                _fill_checked(ab + phi, brows[i], phi)
                for x in range(phi):
                    ax = ab[x]
                    if ax != 0:
                        for y in range(phi):
                            raw[x + y] += (<int128> ax) * ab[phi + y]
            self._reduce_raw(raw, nraw, raw + nraw)
            return self._emit(raw + nraw)
        finally:
            PyMem_Free(ab)
            if raw != NULL:
                PyMem_Free(raw)

    def sum_shifts(self, object rows, object shifts):
        cdef Py_ssize_t m = len(rows)
        cdef int phi = self.phi
        cdef Py_ssize_t nraw = self.N + phi - 1
        cdef i64* buf = _alloc_i64(phi)
        cdef int128* raw = NULL
        cdef Py_ssize_t i, t
        cdef int k
        try:
            raw = _alloc_i128(nraw + phi)
            for i in range(nraw):
                raw[i] = 0
            for i in range(m):
                _fill_checked(buf, rows[i], phi)
                k = shifts[i]
                for t in range(phi):
                    raw[k + t] += buf[t]
            self._reduce_raw(raw, nraw, raw + nraw)
            return self._emit(raw + nraw)
        finally:
            PyMem_Free(buf)
            if raw != NULL:
                PyMem_Free(raw)
