"""Slow definitional implementations used as ground truth in the tests.

Nothing here calls the closed-form code of the other modules: lattices
are evaluated from the offsets directly, duals are found by scanning
exponents against the definition M# = {x : h(x, M) ⊆ p_D}, filtration
entries by probing elementary matrices, and rank by scanning a grid.
Only the plain data classes are shared.
"""

from fractions import Fraction
from itertools import product
from math import ceil, lcm

from .latticefn import AmbientFrame, SplitLattice, SplitLatticeFunction

_SCAN = 64


def _lattice_at(offsets, d, t):
    return tuple(ceil(d * (t - a)) for a in offsets)


def _den(values):
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def _grid(d, values, extra=2):
    """A period [0, 1/d) cut into steps fine enough to hit every jump and the gaps between."""
    n = d * _den(values) * extra
    return [Fraction(k, n) for k in range(n // d)]


def dual_exponents(k, tau, dnu):
    """Exponents of M# for M = (+) v_i p_D^k_i, by scanning candidates per coordinate.

    x = v_j pi_D^e lies in M# iff h(x, v_i pi_D^k_i), whose exponent is
    e + k_i + d nu(c_j) when i = tau(j) and which vanishes otherwise, lies
    in p_D for every generator.  M# is split because the Gram matrix is
    monomial, so scanning each coordinate separately is exhaustive.
    `dnu` holds the integers d nu(c_j).
    """
    m = len(k)
    top = max([abs(x) for x in k] + [abs(x) for x in dnu]) + 2
    out = []
    for j in range(m):
        # h(v_j, v_i) = 0 for i != tau(j), so only the paired generator can fail
        i = tau[j]
        for e in range(-top, top + 1):
            if e + k[i] + dnu[j] >= 1:
                out.append(e)
                break
        else:
            raise RuntimeError("scan window too small")
    return tuple(out)


def _dnu(H):
    return [int(H.ambient.d * v) for v in H.gram_val]


def brute_dual_lattice(L, H):
    """M# = {x : h(x, M) ⊆ p_D}, computed by `dual_exponents`."""
    return SplitLattice(L.frame, dual_exponents(L.exponents, H.tau, _dnu(H)))


def brute_dual_function_at(lam, H, r):
    """Lambda#(r) = [Lambda((-r)+)]#, with (-r)+ taken just right of -r."""
    r = Fraction(r)
    d = lam.frame.d
    eps = Fraction(1, 2 * d * _den(list(lam.offsets) + [r] + list(H.gram_val)))
    right = SplitLattice(lam.frame, _lattice_at(lam.offsets, d, -r + eps))
    return brute_dual_lattice(right, H)


def scaled_dual_check_points(scaled_offsets, period):
    """Integer points of [0, period) where r -> Lambda((-r)+) may jump, and midpoints.

    Offsets and points are integers in units of 1/Q with period = Q/d.
    """
    pts = sorted({(-a) % period for a in scaled_offsets} | {0})
    ends = pts[1:] + [period]
    return pts + [(p + q) // 2 for p, q in zip(pts, ends)]


def brute_dual_scaled(scaled_offsets, Q, d, T, tau, dnu):
    """Exponents of Lambda#(T/Q) from the definition, in integer units.

    (-r)+ is realized as -r + 1/Q, which lies strictly before the next
    jump when all jumps and check points sit on a grid coarser than 2/Q.
    """
    right = [-((-(d * (-T + 1 - a))) // Q) for a in scaled_offsets]
    return dual_exponents(right, tau, dnu)


def brute_square_membership(lam, i, j, e, t):
    """Whether v_j -> v_i pi_D^e maps Lambda(s) into Lambda(s + t) for every s."""
    d = lam.frame.d
    t = Fraction(t)
    for s in _grid(d, list(lam.offsets) + [t]):
        src = _lattice_at(lam.offsets, d, s)
        dst = _lattice_at(lam.offsets, d, s + t)
        if e + src[j] < dst[i]:
            return False
    return True


def brute_entry_exponent(lam, i, j, t):
    """Least e with pi_D^e E_ij in End(Lambda)(t), by scanning upwards."""
    d = lam.frame.d
    lo = ceil(d * Fraction(t)) - d * 4 - _SCAN
    for e in range(lo, lo + 4 * _SCAN + 8 * d):
        if brute_square_membership(lam, i, j, e, t):
            return e
    raise RuntimeError("scan window too small")


def scan_lattices(lam):
    """Distinct lattices over one period, found on a grid, in order of appearance."""
    d = lam.frame.d
    seen = []
    for s in _grid(d, lam.offsets):
        lat = _lattice_at(lam.offsets, d, s)
        if not seen or lat != seen[-1]:
            seen.append(lat)
    if len(seen) > 1 and tuple(x + 1 for x in seen[0]) == seen[-1]:
        seen.pop()
    return [SplitLattice(lam.frame, x) for x in seen]


def scan_rank(lam):
    """Number of lattices in one period, counted modulo multiplication by pi_D."""
    d = lam.frame.d
    classes = set()
    for s in _grid(d, lam.offsets):
        lat = _lattice_at(lam.offsets, d, s)
        classes.add(tuple(x - lat[0] for x in lat))
    return len(classes)


def scan_quotient_dimensions(lam):
    lats = [x.exponents for x in scan_lattices(lam)]
    lats.append(tuple(x + 1 for x in lats[0]))
    return [sum(b - a for a, b in zip(u, v)) for u, v in zip(lats, lats[1:])]


def enumerate_grid_points(m, d, N, mod_translation=False):
    """All offset vectors in (1/N)Z^m ∩ [0, 1)^m, optionally with alpha_1 = 0."""
    vals = [Fraction(k, N) for k in range(N)]
    frame = AmbientFrame(m, d)
    if mod_translation:
        for rest in product(vals, repeat=m - 1):
            yield SplitLatticeFunction(frame, (Fraction(0),) + rest)
    else:
        for alpha in product(vals, repeat=m):
            yield SplitLatticeFunction(frame, alpha)


def brute_generated_lattice(theta, f, s):
    """Exponents of (+)_{k<f} Theta(s - k/d) pi_D^k over D, coordinatewise.

    Theta lives over Delta with uniformizer pi_D^f; a coordinate of
    (+)_k Theta(s - k/d) pi_D^k contains pi_D^n exactly when some k
    has n >= f * (Delta-exponent of Theta(s - k/d)) + k.
    """
    d = theta.frame.d * f
    s = Fraction(s)
    out = []
    for a in theta.offsets:
        best = None
        for k in range(f):
            n = f * ceil(theta.frame.d * (s - Fraction(k, d) - a)) + k
            best = n if best is None else min(best, n)
        out.append(best)
    return tuple(out)


def brute_centre_exponent(n, f):
    """Least e with pi_D^(f e) in p_D^n, i.e. p_D^n ∩ Delta = p_Delta^e."""
    e = -abs(n) - 1
    while f * e < n:
        e += 1
    return e
