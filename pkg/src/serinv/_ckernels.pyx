# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels: polylog direct summation and adaptive Gauss-Kronrod.

Same algorithms and signatures as ``_pykernels``.
"""
from libc.math cimport exp, fabs, pow
from libc.stdlib cimport free, malloc

GAUSS_QUARTIC = 0
EXP_RATIONAL = 1

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]
XGK[:] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
WGK[:] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
WG[:] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]


def polylog_sum(double z, double s, long n_terms):
    cdef double total = 0.0, comp = 0.0, zn = 1.0, term, t
    cdef long n
    for n in range(1, n_terms + 1):
        zn *= z
        term = zn / pow(<double>n, s)
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


cdef inline double _integrand(int kind, double p, double x) nogil:
    cdef double x2
    if kind == 0:
        x2 = x * x
        return exp(-x2 - p * x2 * x2)
    return exp(-x) / (1.0 + p * x)


cdef void _gk15(int kind, double p, double a, double b, double* val, double* err) nogil:
    cdef double c = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double fc = _integrand(kind, p, c)
    cdef double resk = fc * WGK[7]
    cdef double resg = fc * WG[3]
    cdef double dx, f
    cdef int j
    for j in range(7):
        dx = h * XGK[j]
        f = _integrand(kind, p, c - dx) + _integrand(kind, p, c + dx)
        resk += WGK[j] * f
        if j % 2 == 1:
            resg += WG[j // 2] * f
    val[0] = resk * h
    err[0] = fabs(resk - resg) * h


def gk15_adaptive(int kind, double p, double a, double b, double tol,
                  int max_intervals=2000, int n_init=8):
    if max_intervals < n_init:
        max_intervals = n_init
    cdef double* lo = <double*>malloc(max_intervals * sizeof(double))
    cdef double* hi = <double*>malloc(max_intervals * sizeof(double))
    cdef double* v = <double*>malloc(max_intervals * sizeof(double))
    cdef double* e = <double*>malloc(max_intervals * sizeof(double))
    cdef int n = 0, i, k
    cdef double width = (b - a) / n_init, err, emax, mid, total, comp, t
    if lo == NULL or hi == NULL or v == NULL or e == NULL:
        free(lo); free(hi); free(v); free(e)
        raise MemoryError()
    try:
        for i in range(n_init):
            lo[i] = a + i * width
            hi[i] = b if i == n_init - 1 else lo[i] + width
            _gk15(kind, p, lo[i], hi[i], &v[i], &e[i])
        n = n_init
        while True:
            err = 0.0
            k = 0
            emax = -1.0
            for i in range(n):
                err += e[i]
                if e[i] > emax:
                    emax = e[i]
                    k = i
            if err <= tol or n >= max_intervals:
                # compensated sum of the panel values
                total = 0.0
                comp = 0.0
                for i in range(n):
                    t = total + v[i]
                    if fabs(total) >= fabs(v[i]):
                        comp += (total - t) + v[i]
                    else:
                        comp += (v[i] - t) + total
                    total = t
                return total + comp, err, (n if err <= tol else -n)
            mid = 0.5 * (lo[k] + hi[k])
            lo[n] = mid
            hi[n] = hi[k]
            hi[k] = mid
            _gk15(kind, p, lo[k], hi[k], &v[k], &e[k])
            _gk15(kind, p, lo[n], hi[n], &v[n], &e[n])
            n += 1
    finally:
        free(lo); free(hi); free(v); free(e)
