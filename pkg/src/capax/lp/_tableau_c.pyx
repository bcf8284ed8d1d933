# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled simplex tableau kernel.

Same algorithm as `_tableau_py.Tableau`, pivot for pivot: Bland entering on
the lowest eligible column, leaving on the minimum ratio with ties to the
smallest basis variable, cells as normalized integer pairs.  Arithmetic stays
on Python big ints (exactness is the point); the win is C-level loop and list
handling.  Any behavioral divergence from the pure kernel is a bug.
"""

from fractions import Fraction
from math import gcd

OPTIMAL = 0
UNBOUNDED = 1


cdef class Tableau:
    cdef public Py_ssize_t m, ncols
    cdef public list nums, dens, basis

    def __init__(self, matrix, basis, ncols):
        cdef Py_ssize_t i
        self.m = len(matrix)
        self.ncols = ncols
        self.nums = [[c.numerator for c in row] for row in matrix]
        self.dens = [[c.denominator for c in row] for row in matrix]
        self.nums.append([0] * (ncols + 1))
        self.dens.append([1] * (ncols + 1))
        self.basis = list(basis)

    def set_objective(self, costs):
        cdef Py_ssize_t m = self.m, ncols = self.ncols, i, j
        cdef list nums = self.nums, dens = self.dens
        cdef list cbn = [], cbd = []
        cdef list onums, odens, row_n, row_d
        for i in range(m):
            c = costs[self.basis[i]]
            cbn.append(c.numerator)
            cbd.append(c.denominator)
        onums = <list>nums[m]
        odens = <list>dens[m]
        for j in range(ncols + 1):
            if j < ncols:
                c = costs[j]
                an = c.numerator
                ad = c.denominator
            else:
                an = 0
                ad = 1
            for i in range(m):
                fn = cbn[i]
                if fn == 0:
                    continue
                row_n = <list>nums[i]
                pn = row_n[j]
                if pn == 0:
                    continue
                fd = cbd[i]
                row_d = <list>dens[i]
                pd = row_d[j]
                n = an * fd * pd - fn * pn * ad
                d = ad * fd * pd
                if n == 0:
                    an = 0
                    ad = 1
                else:
                    g = gcd(n, d)
                    an = n // g
                    ad = d // g
            onums[j] = an
            odens[j] = ad

    def run(self, allowed):
        cdef Py_ssize_t m = self.m, ncols = self.ncols
        cdef Py_ssize_t enter, i, j, row
        cdef list nums = self.nums, dens = self.dens, basis = self.basis
        cdef list onums = <list>nums[m], row_n, row_d
        while True:
            enter = -1
            for j in range(ncols):
                if allowed[j] and (<object>onums[j]) > 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL, -1
            row = -1
            bn = 0
            bd = 0
            for i in range(m):
                row_n = <list>nums[i]
                an = row_n[enter]
                if an > 0:
                    row_d = <list>dens[i]
                    rn = (<object>row_n[ncols]) * row_d[enter]
                    rd = (<object>row_d[ncols]) * an
                    if row < 0:
                        row = i
                        bn = rn
                        bd = rd
                    else:
                        cmpv = rn * bd - bn * rd
                        if cmpv < 0 or (cmpv == 0 and basis[i] < basis[row]):
                            row = i
                            bn = rn
                            bd = rd
            if row < 0:
                return UNBOUNDED, enter
            self.pivot(row, enter)

    def pivot(self, Py_ssize_t r, Py_ssize_t c):
        cdef Py_ssize_t m = self.m, ncols = self.ncols, i, k
        cdef list nums = self.nums, dens = self.dens
        cdef list rn_row = <list>nums[r], rd_row = <list>dens[r]
        cdef list in_row, id_row
        pn = rn_row[c]
        pd = rd_row[c]
        if pn == 0:
            raise ZeroDivisionError("pivot on a zero cell")
        if pn < 0:
            mn = -pd
            md = -pn
        else:
            mn = pd
            md = pn
        for k in range(ncols + 1):
            xn = rn_row[k]
            if xn != 0:
                n = xn * mn
                d = (<object>rd_row[k]) * md
                if d < 0:
                    n = -n
                    d = -d
                g = gcd(n, d)
                rn_row[k] = n // g
                rd_row[k] = d // g
        rn_row[c] = 1
        rd_row[c] = 1
        for i in range(m + 1):
            if i == r:
                continue
            in_row = <list>nums[i]
            fn = in_row[c]
            if fn == 0:
                continue
            id_row = <list>dens[i]
            fd = id_row[c]
            for k in range(ncols + 1):
                pn2 = rn_row[k]
                if pn2 == 0:
                    continue
                pd2 = rd_row[k]
                xn = in_row[k]
                xd = id_row[k]
                n = xn * fd * pd2 - fn * pn2 * xd
                if n == 0:
                    in_row[k] = 0
                    id_row[k] = 1
                else:
                    d = xd * fd * pd2
                    g = gcd(n, d)
                    in_row[k] = n // g
                    id_row[k] = d // g
        self.basis[r] = c

    def value(self):
        cdef Py_ssize_t m = self.m, ncols = self.ncols
        return -Fraction((<list>self.nums[m])[ncols], (<list>self.dens[m])[ncols])

    def solution(self):
        cdef Py_ssize_t i, ncols = self.ncols
        x = [Fraction(0)] * ncols
        for i in range(self.m):
            x[self.basis[i]] = Fraction((<list>self.nums[i])[ncols],
                                        (<list>self.dens[i])[ncols])
        return x

    def reduced_costs(self):
        cdef Py_ssize_t j, m = self.m
        cdef list on = <list>self.nums[m], od = <list>self.dens[m]
        return [Fraction(on[j], od[j]) for j in range(self.ncols)]

    def column(self, Py_ssize_t j):
        cdef Py_ssize_t i
        return [Fraction((<list>self.nums[i])[j], (<list>self.dens[i])[j])
                for i in range(self.m)]

    def cell(self, Py_ssize_t i, Py_ssize_t j):
        return Fraction((<list>self.nums[i])[j], (<list>self.dens[i])[j])
