# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel: walks every ordered generator pair (f, g)
of the truncated algebra, closes the pair under multiplication by x and y
with bit-packed echelon rows, and collects the canonical forms of the
ideals of the requested colength.

GF(2) vectors are plain bitmasks (bit i = coefficient of basis monomial i).
GF(3) vectors pack two bitmasks into one 64-bit word: the low half marks
digit-1 coordinates, the high half digit-2 coordinates; addition mod 3 and
negation become a handful of boolean operations.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

ctypedef unsigned int u32
ctypedef unsigned long long u64

DEF MAXDIM = 16
DEF MAXSTACK = 64


# ---------------------------------------------------------------- GF(2) ----

cdef inline u32 mul2(u32 v, int* mulmap, int dim) noexcept:
    cdef u32 out = 0
    cdef int i
    for i in range(dim):
        if (v >> i) & 1 and mulmap[i] >= 0:
            out |= (<u32>1) << mulmap[i]
    return out


cdef inline u32 reduce2(u32 v, u32* rowv, int* piv, int nrows) noexcept:
    cdef int r
    for r in range(nrows):
        if (v >> piv[r]) & 1:
            v ^= rowv[r]
    return v


cdef int close2(u32* rowv, int* piv, int nrows, u32 seed,
                int* mulx, int* muly, int dim) noexcept:
    """Insert seed and close under multiplication; returns new row count."""
    cdef u32 stack[MAXSTACK]
    cdef int top = 0
    cdef u32 v
    cdef int i
    stack[top] = seed
    top += 1
    while top > 0:
        top -= 1
        v = reduce2(stack[top], rowv, piv, nrows)
        if v == 0:
            continue
        for i in range(dim):
            if (v >> i) & 1:
                piv[nrows] = i
                break
        rowv[nrows] = v
        nrows += 1
        stack[top] = mul2(v, mulx, dim)
        top += 1
        stack[top] = mul2(v, muly, dim)
        top += 1
    return nrows


cdef tuple canonical2(u32* rowv_in, int* piv_in, int nrows):
    cdef u32 rowv[MAXDIM]
    cdef int piv[MAXDIM]
    cdef int i, j
    cdef u32 tv
    cdef int tp
    for i in range(nrows):
        rowv[i] = rowv_in[i]
        piv[i] = piv_in[i]
    for j in range(nrows):
        for i in range(nrows):
            if i != j and (rowv[i] >> piv[j]) & 1:
                rowv[i] ^= rowv[j]
    # insertion sort by pivot
    for i in range(1, nrows):
        tv = rowv[i]
        tp = piv[i]
        j = i - 1
        while j >= 0 and piv[j] > tp:
            rowv[j + 1] = rowv[j]
            piv[j + 1] = piv[j]
            j -= 1
        rowv[j + 1] = tv
        piv[j + 1] = tp
    return tuple([rowv[i] for i in range(nrows)])


def _enumerate_gf2(int dim, mulx_seq, muly_seq, int colength):
    cdef int mulx[MAXDIM]
    cdef int muly[MAXDIM]
    cdef u32 frow[MAXDIM]
    cdef int fpiv[MAXDIM]
    cdef u32 srow[MAXDIM]
    cdef int spiv[MAXDIM]
    cdef int i, fn, sn
    cdef u32 f, g, v
    cdef u32 nelem = (<u32>1) << dim
    for i in range(dim):
        mulx[i] = mulx_seq[i]
        muly[i] = muly_seq[i]
    found = set()
    for f in range(nelem):
        if f & 1:  # unit: the pair ideal is the whole algebra
            continue
        fn = close2(frow, fpiv, 0, f, mulx, muly, dim)
        if dim - fn == colength:
            # every g inside the span reproduces this ideal
            found.add(canonical2(frow, fpiv, fn))
        for g in range(nelem):
            if g & 1:
                continue
            v = reduce2(g, frow, fpiv, fn)
            if v == 0:
                continue
            for i in range(fn):
                srow[i] = frow[i]
                spiv[i] = fpiv[i]
            sn = close2(srow, spiv, fn, v, mulx, muly, dim)
            if dim - sn == colength:
                found.add(canonical2(srow, spiv, sn))
    return sorted(
        tuple(tuple((row >> i) & 1 for i in range(dim)) for row in rec)
        for rec in found
    )


# ---------------------------------------------------------------- GF(3) ----
# vector = u64; bits 0..dim-1: coordinates equal to 1; bits 32..32+dim-1:
# coordinates equal to 2

cdef inline u64 neg3(u64 v) noexcept:
    return ((v & 0xffffffffULL) << 32) | (v >> 32)


cdef inline u64 add3(u64 a, u64 b) noexcept:
    cdef u64 a1 = a & 0xffffffffULL
    cdef u64 a2 = a >> 32
    cdef u64 b1 = b & 0xffffffffULL
    cdef u64 b2 = b >> 32
    cdef u64 r1 = (a1 & ~(b1 | b2)) | (b1 & ~(a1 | a2)) | (a2 & b2)
    cdef u64 r2 = (a2 & ~(b1 | b2)) | (b2 & ~(a1 | a2)) | (a1 & b1)
    return r1 | (r2 << 32)


cdef inline int digit3(u64 v, int i) noexcept:
    return <int>(((v >> i) & 1) + 2 * ((v >> (32 + i)) & 1))


cdef inline u64 mul3(u64 v, int* mulmap, int dim) noexcept:
    cdef u64 out = 0
    cdef int i, d
    for i in range(dim):
        d = digit3(v, i)
        if d and mulmap[i] >= 0:
            out |= (<u64>(d & 1)) << mulmap[i]
            out |= (<u64>((d >> 1) & 1)) << (32 + mulmap[i])
    return out


cdef inline u64 reduce3(u64 v, u64* rowv, int* piv, int nrows) noexcept:
    cdef int r, d
    for r in range(nrows):
        d = digit3(v, piv[r])
        if d == 1:
            v = add3(v, neg3(rowv[r]))
        elif d == 2:
            v = add3(v, rowv[r])
    return v


cdef int close3(u64* rowv, int* piv, int nrows, u64 seed,
                int* mulx, int* muly, int dim) noexcept:
    cdef u64 stack[MAXSTACK]
    cdef int top = 0
    cdef u64 v
    cdef int i
    stack[top] = seed
    top += 1
    while top > 0:
        top -= 1
        v = reduce3(stack[top], rowv, piv, nrows)
        if v == 0:
            continue
        for i in range(dim):
            if digit3(v, i):
                if digit3(v, i) == 2:
                    v = neg3(v)  # scale by 2 so the pivot is 1
                piv[nrows] = i
                break
        rowv[nrows] = v
        nrows += 1
        stack[top] = mul3(v, mulx, dim)
        top += 1
        stack[top] = mul3(v, muly, dim)
        top += 1
    return nrows


cdef tuple canonical3(u64* rowv_in, int* piv_in, int nrows):
    cdef u64 rowv[MAXDIM]
    cdef int piv[MAXDIM]
    cdef int i, j, d
    cdef u64 tv
    cdef int tp
    for i in range(nrows):
        rowv[i] = rowv_in[i]
        piv[i] = piv_in[i]
    for j in range(nrows):
        for i in range(nrows):
            if i != j:
                d = digit3(rowv[i], piv[j])
                if d == 1:
                    rowv[i] = add3(rowv[i], neg3(rowv[j]))
                elif d == 2:
                    rowv[i] = add3(rowv[i], rowv[j])
    for i in range(1, nrows):
        tv = rowv[i]
        tp = piv[i]
        j = i - 1
        while j >= 0 and piv[j] > tp:
            rowv[j + 1] = rowv[j]
            piv[j + 1] = piv[j]
            j -= 1
        rowv[j + 1] = tv
        piv[j + 1] = tp
    return tuple([rowv[i] for i in range(nrows)])


def _enumerate_gf3(int dim, mulx_seq, muly_seq, int colength):
    cdef int mulx[MAXDIM]
    cdef int muly[MAXDIM]
    cdef u64 frow[MAXDIM]
    cdef int fpiv[MAXDIM]
    cdef u64 srow[MAXDIM]
    cdef int spiv[MAXDIM]
    cdef int i, fn, sn
    cdef long fcode, gcode, nelem = 1
    cdef u64 f, g, v
    cdef u64* enc
    for i in range(dim):
        mulx[i] = mulx_seq[i]
        muly[i] = muly_seq[i]
        nelem *= 3
    enc = <u64*> PyMem_Malloc(nelem * sizeof(u64))
    if enc == NULL:
        raise MemoryError()
    cdef long rem, c
    for fcode in range(nelem):
        v = 0
        c = fcode
        for i in range(dim):
            rem = c % 3
            c //= 3
            if rem == 1:
                v |= (<u64>1) << i
            elif rem == 2:
                v |= (<u64>1) << (32 + i)
        enc[fcode] = v
    found = set()
    try:
        for fcode in range(nelem):
            f = enc[fcode]
            if digit3(f, 0):  # unit
                continue
            fn = close3(frow, fpiv, 0, f, mulx, muly, dim)
            if dim - fn == colength:
                found.add(canonical3(frow, fpiv, fn))
            for gcode in range(nelem):
                g = enc[gcode]
                if digit3(g, 0):
                    continue
                v = reduce3(g, frow, fpiv, fn)
                if v == 0:
                    continue
                for i in range(fn):
                    srow[i] = frow[i]
                    spiv[i] = fpiv[i]
                sn = close3(srow, spiv, fn, v, mulx, muly, dim)
                if dim - sn == colength:
                    found.add(canonical3(srow, spiv, sn))
    finally:
        PyMem_Free(enc)
    return sorted(
        tuple(tuple(_digit_py(row, i) for i in range(dim)) for row in rec)
        for rec in found
    )


def _digit_py(row, int i):
    return int(((row >> i) & 1) + 2 * ((row >> (32 + i)) & 1))


def enumerate_ideals(int q, int dim, mulx_seq, muly_seq, int colength):
    """Canonical bases (tuples of coefficient tuples) of all ideals of the
    given colength reachable from ordered generator pairs, sorted."""
    if dim > 13:
        raise ValueError(f"dimension {dim} exceeds the packed-row limit")
    if q == 2:
        return _enumerate_gf2(dim, mulx_seq, muly_seq, colength)
    if q == 3:
        return _enumerate_gf3(dim, mulx_seq, muly_seq, colength)
    raise ValueError(f"kernel supports q in (2, 3), got {q}")
