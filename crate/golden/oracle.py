#!/usr/bin/env python3
"""Independent brute-force oracle for the golden values used by the test suite.

Everything here is computed directly from first principles (row rewriting,
breadth-first search, union-find over segment endpoints, GF(2) elimination)
with no shared code with the Rust crate.  Run from the repository root:

    python3 golden/oracle.py > golden/oracle_counts.json
"""

import json
from fractions import Fraction
from itertools import permutations


# ---------------------------------------------------------------------------
# true permutations, one-line form: t[k] = letter at position k+1 of the
# bottom row once the top row is relabeled 1..d
# ---------------------------------------------------------------------------

def is_irreducible(t):
    seen = set()
    for k, x in enumerate(t[:-1], start=1):
        seen.add(x)
        if max(seen) == k:
            return False
    return True


def rauzy_move(t, kind):
    """Row rewriting per the induction diagrams, then recanonicalize."""
    d = len(t)
    top = list(range(1, d + 1))
    bot = list(t)
    if kind == 0:
        a0 = top[-1]
        last = bot.pop()
        bot.insert(bot.index(a0) + 1, last)
    else:
        a1 = bot[-1]
        last = top.pop()
        top.insert(top.index(a1) + 1, last)
    relabel = {x: i + 1 for i, x in enumerate(top)}
    return tuple(relabel[x] for x in bot)


def rauzy_class(t, cap=10**7):
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for p in frontier:
            for kind in (0, 1):
                q = rauzy_move(p, kind)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
        if len(seen) > cap:
            raise RuntimeError("cap exceeded")
    return seen


class UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


def signature(t):
    """Union-find over 4d endpoint tokens (letter, row, side)."""
    d = len(t)
    pos0 = {x: x for x in range(1, d + 1)}          # top row is 1..d
    pos1 = {x: i + 1 for i, x in enumerate(t)}      # bottom row is t
    inv0 = {v: k for k, v in pos0.items()}
    inv1 = {v: k for k, v in pos1.items()}

    def tok(letter, row, side):                     # side: 0 = L, 1 = R
        return ((letter - 1) * 2 + row) * 2 + side

    uf = UF(4 * d)
    for i in range(1, d):
        uf.union(tok(inv0[i], 0, 1), tok(inv0[i + 1], 0, 0))
        uf.union(tok(inv1[i], 1, 1), tok(inv1[i + 1], 1, 0))
    uf.union(tok(inv0[1], 0, 0), tok(inv1[1], 1, 0))
    uf.union(tok(inv0[d], 0, 1), tok(inv1[d], 1, 1))
    for x in range(1, d + 1):
        uf.union(tok(x, 0, 0), tok(x, 1, 0))
        uf.union(tok(x, 0, 1), tok(x, 1, 1))

    counts = {}
    for x in range(1, d + 1):
        if x == inv0[1]:
            continue                                # leftmost vertex not counted
        r = uf.find(tok(x, 0, 0))
        counts[r] = counts.get(r, 0) + 1
    marked_root = uf.find(tok(inv0[1], 0, 0))
    marked = counts.get(marked_root, 1) - 1 if marked_root in counts else None
    if marked_root not in counts:
        raise RuntimeError("marked class has no counted vertex")
    rest = sorted((n - 1 for r, n in counts.items() if r != marked_root),
                  reverse=True)
    return (marked, tuple(rest))


def omega(t):
    d = len(t)
    pos = {x: i + 1 for i, x in enumerate(t)}   # bottom position of letter
    m = [[0] * d for _ in range(d)]
    for a in range(1, d + 1):
        for b in range(1, d + 1):
            if a < b and pos[a] > pos[b]:
                m[a - 1][b - 1] = 1
            elif a > b and pos[a] < pos[b]:
                m[a - 1][b - 1] = -1
    return m


def spin(t):
    sig = signature(t)
    degs = [sig[0]] + list(sig[1])
    if any(x % 2 for x in degs):
        return None
    d = len(t)
    m = [[abs(v) % 2 for v in row] for row in omega(t)]
    phi = [1] * d
    alive = list(range(d))
    total = 0
    pairs = 0
    while True:
        pick = None
        for ii in range(len(alive)):
            for jj in range(ii + 1, len(alive)):
                if m[alive[ii]][alive[jj]]:
                    pick = (alive[ii], alive[jj])
                    break
            if pick:
                break
        if pick is None:
            break
        a, b = pick
        total ^= phi[a] & phi[b]
        pairs += 1
        rest = [k for k in alive if k != a and k != b]
        newphi = dict()
        newm = dict()
        for k in rest:
            newphi[k] = (phi[k] ^ (m[k][b] & phi[a]) ^ (m[k][a] & phi[b])
                         ^ (m[k][a] & m[k][b]))
        for k in rest:
            for l in rest:
                newm[(k, l)] = m[k][l] ^ (m[k][a] & m[l][b]) ^ (m[k][b] & m[l][a])
        for k in rest:
            phi[k] = newphi[k]
        for k in rest:
            for l in rest:
                m[k][l] = newm[(k, l)]
        alive = rest
    genus = 1 + (degs[0] + sum(degs[1:])) // 2 - len(degs) // 2 \
        if False else 1 + sum(degs) // 2
    assert pairs == genus, (t, pairs, genus)
    return total


# ---------------------------------------------------------------------------
# generalized permutations: sequence of letters with a row split
# ---------------------------------------------------------------------------

def gp_canon(seq, d0):
    relabel = {}
    out = []
    for x in seq:
        if x not in relabel:
            relabel[x] = len(relabel) + 1
        out.append(relabel[x])
    return (tuple(out), d0)


def gp_proper(seq, d0):
    top, bot = seq[:d0], seq[d0:]
    both_top = any(top.count(x) == 2 for x in set(top))
    both_bot = any(bot.count(x) == 2 for x in set(bot))
    return both_top == both_bot


def gp_irreducible(seq, d0):
    n = len(seq)
    d1 = n - d0
    letters = set(seq)
    twin = {}
    occ = {}
    for i, x in enumerate(seq):
        occ.setdefault(x, []).append(i)
    for x, (i, j) in occ.items():
        twin[i], twin[j] = j, i
    for n1 in range(0, d0 + 1):
        for n2 in range(0, d0 - n1 + 1):
            for n3 in range(0, d1 + 1):
                for n4 in range(0, d1 - n3 + 1):
                    ns = (n1, n2, n3, n4)
                    if sum(ns) == 0:
                        continue
                    zeros = [k for k in range(4) if ns[k] == 0]
                    if len(zeros) == 1 and zeros[0] not in (0, 2):
                        continue
                    if len(zeros) == 2 and set(zeros) not in ({0, 2}, {1, 3}):
                        continue
                    if len(zeros) >= 3:
                        continue
                    p0 = list(range(0, n1))
                    s0 = list(range(d0 - n2, d0))
                    p1 = list(range(d0, d0 + n3))
                    s1 = list(range(n - n4, n))
                    corner = p0 + s0 + p1 + s1
                    cs = set(corner)
                    if len(cs) != len(corner):
                        continue
                    ok = True
                    abcd = [set(), set(), set(), set()]   # A, B, C, D
                    for i in corner:
                        j = twin[i]
                        if j not in cs:
                            ok = False
                            break
                        ri = (i in p0, i in s0, i in p1, i in s1).index(True)
                        rj = (j in p0, j in s0, j in p1, j in s1).index(True)
                        pair = {ri, rj}
                        if pair == {0, 1}:
                            abcd[0].add(seq[i])
                        elif pair == {0, 2}:
                            abcd[1].add(seq[i])
                        elif pair == {1, 3}:
                            abcd[2].add(seq[i])
                        elif pair == {2, 3}:
                            abcd[3].add(seq[i])
                        else:
                            ok = False
                            break
                    if not ok:
                        continue
                    # A, B, C, D must each be a proper subset of the alphabet
                    if any(len(s) == len(letters) for s in abcd):
                        continue
                    # each corner's letters must be distinct
                    if len(set(seq[i] for i in p0)) != n1:
                        continue
                    if len(set(seq[i] for i in s0)) != n2:
                        continue
                    if len(set(seq[i] for i in p1)) != n3:
                        continue
                    if len(set(seq[i] for i in s1)) != n4:
                        continue
                    return False
    return True


def gp_move(seq, d0, kind):
    """Typed induction; returns None when the move lands on an improper shape."""
    seq = list(seq)
    n = len(seq)
    occ = {}
    for i, x in enumerate(seq):
        occ.setdefault(x, []).append(i)

    def twin_of(i):
        a, b = occ[seq[i]]
        return b if a == i else a

    if kind == 0:
        t = twin_of(d0 - 1)                     # twin of last top letter
        x = seq[n - 1]
        if t > d0 - 1:
            out = seq[:t + 1] + [x] + seq[t + 1:n - 1]
            nd0 = d0
        else:
            out = seq[:t] + [x] + seq[t:n - 1]
            nd0 = d0 + 1
    else:
        t = twin_of(n - 1)                      # twin of last bottom letter
        x = seq[d0 - 1]
        if t < d0 - 1:
            out = (seq[:t + 1] + [x] + seq[t + 1:d0 - 1] + seq[d0:])
            nd0 = d0
        else:
            out = seq[:d0 - 1] + seq[d0:t] + [x] + seq[t:]
            nd0 = d0 - 1
    if not gp_proper(tuple(out), nd0):
        return None
    return gp_canon(out, nd0)


def gp_class(seq, d0, cap=10**6):
    start = gp_canon(seq, d0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s, sd0 in frontier:
            for kind in (0, 1):
                r = gp_move(s, sd0, kind)
                if r is not None and r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        if len(seen) > cap:
            raise RuntimeError("cap")
    return seen


def gp_signature(seq, d0):
    """Union-find over 2*(2d) endpoint tokens (position, side)."""
    n = len(seq)
    occ = {}
    for i, x in enumerate(seq):
        occ.setdefault(x, []).append(i)

    def tok(i, side):
        return i * 2 + side

    uf = UF(2 * n)
    for i in list(range(0, d0 - 1)) + list(range(d0, n - 1)):
        uf.union(tok(i, 1), tok(i + 1, 0))
    uf.union(tok(0, 0), tok(d0, 0))
    uf.union(tok(d0 - 1, 1), tok(n - 1, 1))
    for x, (i, j) in occ.items():
        same_row = (i < d0) == (j < d0)
        if same_row:
            uf.union(tok(i, 0), tok(j, 1))
            uf.union(tok(i, 1), tok(j, 0))
        else:
            uf.union(tok(i, 0), tok(j, 0))
            uf.union(tok(i, 1), tok(j, 1))

    counts = {}
    for i in list(range(0, d0 - 1)) + list(range(d0, n - 1)):
        r = uf.find(tok(i, 1))                  # interior vertex after edge i
        counts[r] = counts.get(r, 0) + 1
    marked_root = uf.find(tok(0, 0))
    classes = set(uf.find(t) for t in range(2 * n))
    orders = {}
    for c in classes:
        orders[c] = counts.get(c, 0) - 2
    marked = orders[marked_root]
    rest = sorted((v for c, v in orders.items() if c != marked_root),
                  reverse=True)
    return (marked, tuple(rest))


def all_gen_perms(nletters):
    """All canonical proper irreducible generalized permutations on a given
    number of letters (every letter twice), over all row splits."""
    out = set()
    n = 2 * nletters
    base = []
    for x in range(1, nletters + 1):
        base += [x, x]
    for perm in set(permutations(base)):
        for d0 in range(1, n):
            c = gp_canon(perm, d0)
            if c in out:
                continue
            if not gp_proper(c[0], d0):
                continue
            if not gp_irreducible(c[0], d0):
                continue
            out.add(c)
    return out


def main():
    res = {}

    # paper cross-checks (fail loudly if the oracle itself is wrong)
    assert rauzy_move((3, 2, 1), 0) == (3, 1, 2)
    assert rauzy_move((3, 2, 1), 1) == (2, 3, 1)
    assert rauzy_move((2, 3, 1), 0) == (2, 3, 1)
    assert sorted(rauzy_class((3, 2, 1))) == [(2, 3, 1), (3, 1, 2), (3, 2, 1)]
    assert signature((4, 3, 2, 1)) == (2, ())
    assert signature((3, 2, 1)) == (0, (0,))
    assert signature((8, 3, 2, 4, 7, 6, 5, 1)) == (1, (2, 1))
    assert signature((7, 4, 5, 2, 6, 3, 1)) == (4, (0,))
    assert spin((4, 3, 6, 1, 5, 2)) == 1
    assert spin((6, 3, 2, 5, 4, 1)) == 1
    assert spin((7, 3, 2, 4, 6, 5, 1)) == 1
    assert spin((7, 4, 5, 2, 6, 3, 1)) == 1

    res["class_size_4321"] = len(rauzy_class((4, 3, 2, 1)))

    atlas = {}
    for d in range(2, 7):
        perms = [p for p in permutations(range(1, d + 1)) if is_irreducible(p)]
        rem = set(perms)
        sizes = []
        while rem:
            seed = min(rem)
            cls = rauzy_class(seed)
            sizes.append(len(cls))
            rem -= cls
        atlas[str(d)] = {"irreducible": len(perms),
                         "classes": len(sizes),
                         "sizes": sorted(sizes)}
    res["atlas"] = atlas

    g = gp_class((1, 2, 2, 3, 3, 1), 3)
    res["gen_class_122_331"] = len(g)

    g2 = gp_class((1, 1, 2, 2, 3, 4, 3, 4), 4)
    res["gen_class_aabb_cdcd"] = len(g2)

    assert gp_signature((1, 2, 2, 3, 1, 3, 4, 4), 3) == (2, (-1, -1))
    res["gen_sig_abb_cacdd"] = [2, [-1, -1]]

    q12 = (1, 2, 1, 2, 3, 4, 3, 4, 5, 6, 5, 6, 7, 8, 7, 8)
    assert gp_signature(q12, 8) == (12, ())
    res["gen_total_2d_le_8"] = {str(k): len(all_gen_perms(k)) for k in (2, 3, 4)}

    print(json.dumps(res, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
