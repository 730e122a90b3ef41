"""Independent reference computations shared by the test modules."""
import itertools
import math


def enumerate_pmf(q):
    """Poisson-binomial PMF by brute force over all 2^n outcome vectors."""
    n = len(q)
    pmf = [0.0] * (n + 1)
    for outcome in itertools.product((0, 1), repeat=n):
        prob = math.prod(qi if t else 1.0 - qi for qi, t in zip(q, outcome))
        pmf[sum(outcome)] += prob
    return pmf


def bisect_root(func, target, lo=0.0, hi=1.0, iters=200):
    """Root of an increasing ``func(x) = target`` by plain bisection."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if func(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
