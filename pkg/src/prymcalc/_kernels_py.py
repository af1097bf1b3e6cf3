"""Pure-Python short-vector enumeration (reference and fallback backend)."""


def norm_vectors(lo, hi, weights, target, masks, parities):
    """Integer vectors ``x`` with ``lo <= x <= hi`` and ``sum(w*x*x) == target``.

    ``masks``/``parities`` are parallel lists: for every bitmask ``m`` the sum
    of the coordinates selected by ``m`` must be congruent to the paired
    parity mod 2.  Results come out in lexicographic order.
    """
    n = len(lo)
    # largest weighted square each coordinate can still contribute
    cap = [w * max(a * a, b * b) for a, b, w in zip(lo, hi, weights)]
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + cap[k]
    out = []
    x = [0] * n

    def rec(k, budget, odd):
        if k == n:
            if budget:
                return
            for m, p in zip(masks, parities):
                if bin(odd & m).count("1") & 1 != p:
                    return
            out.append(tuple(x))
            return
        if budget > suffix[k]:
            return
        w = weights[k]
        bit = 1 << k
        for v in range(lo[k], hi[k] + 1):
            rest = budget - w * v * v
            if rest < 0:
                continue
            x[k] = v
            rec(k + 1, rest, odd | bit if v & 1 else odd)
        x[k] = 0

    if target >= 0:
        rec(0, target, 0)
    return out
