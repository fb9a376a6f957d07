# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled face kernels; same contract as ``_kernels_py`` for masks < 2**64."""
from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from libcpp.algorithm cimport sort

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long x) nogil

MAX_VERTICES = 64


cdef void _collect(const vector[uint64_t]& facets, unordered_set[uint64_t]& out) noexcept nogil:
    cdef uint64_t f, sub
    cdef size_t i
    for i in range(facets.size()):
        f = facets[i]
        sub = f
        while sub:
            out.insert(sub)
            sub = (sub - 1) & f


cdef long _link_euler(const vector[uint64_t]& facets, uint64_t sigma,
                      vector[uint64_t]& scratch, unordered_set[uint64_t]& seen) noexcept nogil:
    cdef size_t i
    cdef uint64_t f, r
    cdef long chi = 0
    scratch.clear()
    seen.clear()
    for i in range(facets.size()):
        f = facets[i]
        if f & sigma == sigma:
            r = f & ~sigma
            if r:
                scratch.push_back(r)
    _collect(scratch, seen)
    for r in seen:
        if popcount64(r) & 1:
            chi += 1
        else:
            chi -= 1
    return chi


def face_masks(facets):
    cdef vector[uint64_t] fs = facets
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] out
    cdef uint64_t r
    with nogil:
        _collect(fs, seen)
        out.reserve(seen.size())
        for r in seen:
            out.push_back(r)
        sort(out.begin(), out.end())
    return out


def size_counts(facets):
    cdef vector[uint64_t] fs = facets
    cdef unordered_set[uint64_t] seen
    cdef vector[long] out
    cdef size_t i
    cdef int top = 0, k
    cdef uint64_t r
    for i in range(fs.size()):
        k = popcount64(fs[i])
        if k > top:
            top = k
    out.resize(top, 0)
    with nogil:
        _collect(fs, seen)
        for r in seen:
            out[popcount64(r) - 1] += 1
    return list(out)


def link_euler(facets, sigma):
    cdef vector[uint64_t] fs = facets
    cdef vector[uint64_t] scratch
    cdef unordered_set[uint64_t] seen
    cdef uint64_t s = sigma
    cdef long chi
    with nogil:
        chi = _link_euler(fs, s, scratch, seen)
    return chi


def link_eulers(facets, sigmas):
    cdef vector[uint64_t] fs = facets
    cdef vector[uint64_t] ss = sigmas
    cdef vector[uint64_t] scratch
    cdef unordered_set[uint64_t] seen
    cdef vector[long] out
    cdef size_t i
    out.resize(ss.size())
    with nogil:
        for i in range(ss.size()):
            out[i] = _link_euler(fs, ss[i], scratch, seen)
    return list(out)
