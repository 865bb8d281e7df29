"""Independent oracles used by several test modules.

Everything here is written against the *definitions*, not against the
library's algorithms: determinants by cofactor expansion, determinantal
divisors by gcd over all k-by-k minors.  Slow on purpose; only run at desk
scale.
"""

from itertools import combinations

from jml.poly import Poly, polyGcd


def polyDetExpansion(ring, a):
    """Determinant of a square Poly matrix by memoized cofactor expansion."""
    assert a.m == a.n
    memo = {}

    def minor(rows, cols):
        if not rows:
            return ring.one
        key = (rows, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = ring.zero
        r0, rest = rows[0], rows[1:]
        for idx, c in enumerate(cols):
            e = a.rows[r0][c]
            if e:
                term = e * minor(rest, cols[:idx] + cols[idx + 1:])
                acc = acc + term if idx % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(tuple(range(a.m)), tuple(range(a.n)))


def determinantalDivisors(ring, a):
    """[Delta_1, ..., Delta_r]: monic gcd of all k-by-k minors, stopping at
    the rank (first k where every minor vanishes)."""
    memo = {}

    def minor(rows, cols):
        if not rows:
            return ring.one
        key = (rows, cols)
        got = memo.get(key)
        if got is not None:
            return got
        acc = ring.zero
        r0, rest = rows[0], rows[1:]
        for idx, c in enumerate(cols):
            e = a.rows[r0][c]
            if e:
                term = e * minor(rest, cols[:idx] + cols[idx + 1:])
                acc = acc + term if idx % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    out = []
    for k in range(1, min(a.m, a.n) + 1):
        g = ring.zero
        for rows in combinations(range(a.m), k):
            for cols in combinations(range(a.n), k):
                g = polyGcd(g, minor(rows, cols))
                if g.degree() == 0:
                    break
            if g.degree() == 0:
                break
        if g.isZero():
            break
        out.append(g.monic())
    return out


def invariantFactorsFromMinors(ring, a):
    """d_k = Delta_k / Delta_{k-1}, the textbook definition."""
    deltas = determinantalDivisors(ring, a)
    out = []
    prev = ring.one
    for d in deltas:
        out.append(d.exactDiv(prev).monic())
        prev = d
    return out


def jordanMaxBlockByRanks(field, a, lam):
    """Largest Jordan block of eigenvalue lam via kernel ranks of powers:
    the least j with rank((a-lam)^j) = rank((a-lam)^(j+1)); 0 if lam absent."""
    from jml.linalg import Mat, matMul, matSub, matScale, rank
    n = a.m
    m = matSub(a, matScale(lam, Mat.identity(field, n)))
    prevRank = n
    power = Mat.identity(field, n)
    j = 0
    while True:
        power = matMul(field, m, power)
        r = rank(power)
        if r == prevRank:
            return j
        prevRank = r
        j += 1
