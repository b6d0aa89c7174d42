#!/usr/bin/env python3
# Copyright 2026 The sido Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force oracle for the frozen values used by the C++ tests.

Shares no code with the library: homomorphisms are found by enumerating all
maps, the path walk weights come from the closed-form degree product, and the
C4 coupling is evaluated directly from its defining formula.
"""
import itertools
import math
import sys
from fractions import Fraction


def homs(n_h, edges_h, n_g, edges_g):
    adj = set()
    for u, v in edges_g:
        adj.add((u, v))
        adj.add((v, u))
    out = []
    for m in itertools.product(range(n_g), repeat=n_h):
        if all((m[u], m[v]) in adj for u, v in edges_h):
            out.append(m)
    return out


def tree_walk_weight(n_t, edges_t, edges_g, n_g, m):
    # weight(h) = 1/(2e) * prod_v deg_G(h(v))^(1 - deg_T(v))
    deg_g = [0] * n_g
    for u, v in edges_g:
        deg_g[u] += 1
        deg_g[v] += 1
    deg_t = [0] * n_t
    for u, v in edges_t:
        deg_t[u] += 1
        deg_t[v] += 1
    w = Fraction(1, 2 * len(edges_g))
    for v in range(n_t):
        w *= Fraction(deg_g[m[v]]) ** (1 - deg_t[v])
    return w


def entropy(ps):
    return -sum(float(p) * math.log2(p) for p in ps)


def main():
    k3 = [(0, 1), (0, 2), (1, 2)]
    c4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
    book = [(0, 1), (0, 3), (0, 5), (1, 2), (1, 4), (2, 3), (4, 5)]
    p3 = [(0, 1), (1, 2)]

    checks = []
    checks.append(("hom(K2,K3)", len(homs(2, [(0, 1)], 3, k3)), 6))
    checks.append(("hom(C4,K3)", len(homs(4, c4, 3, k3)), 18))
    checks.append(("hom(P3,K2)", len(homs(3, p3, 2, [(0, 1)])), 2))
    checks.append(("hom(book,K3)", len(homs(6, book, 3, k3)), 54))

    # C4 coupling: bags X={0,1,2}, Y={0,2,3}, each the path walk law.
    pX = {m: tree_walk_weight(3, p3, k3, 3, m) for m in homs(3, p3, 3, k3)}
    overlap = {}
    for m, w in pX.items():
        overlap[(m[0], m[2])] = overlap.get((m[0], m[2]), 0) + w
    joint = {}
    for m in itertools.product(range(3), repeat=4):
        a = (m[0], m[1], m[2])
        b = (m[0], m[3], m[2])  # path 0-3-2 has the same law as 0-1-2
        if a in pX and b in pX:
            joint[m] = pX[a] * pX[b] / overlap[(m[0], m[2])]
    masses = sorted(joint.values())
    checks.append(("C4 atoms", len(joint), 18))
    checks.append(("C4 atoms of 1/24", masses.count(Fraction(1, 24)), 12))
    checks.append(("C4 atoms of 1/12", masses.count(Fraction(1, 12)), 6))
    checks.append(("C4 total mass", sum(masses), 1))
    checks.append(("C4 entropy", round(entropy(masses), 10), 4.0849625007))
    checks.append(("log2 hom(C4,K3)", round(math.log2(18), 10), 4.1699250014))
    rhs = Fraction(3) ** 4 * Fraction(2 * 3, 9) ** 4
    checks.append(("rhs exact", rhs, 16))
    gap = Fraction(18, 3 ** 4) - Fraction(6, 9) ** 4
    checks.append(("gap(C4,K3)", gap, Fraction(2, 81)))

    # Path 0-1-2 walk on path a-b-c (a=0,b=1,c=2).
    pp = {m: tree_walk_weight(3, p3, p3, 3, m) for m in homs(3, p3, 3, p3)}
    checks.append(("P3 on P3 table", sorted(pp.items()), [
        ((0, 1, 0), Fraction(1, 8)), ((0, 1, 2), Fraction(1, 8)),
        ((1, 0, 1), Fraction(1, 4)), ((1, 2, 1), Fraction(1, 4)),
        ((2, 1, 0), Fraction(1, 8)), ((2, 1, 2), Fraction(1, 8))]))

    ok = True
    for name, got, want in checks:
        good = got == want
        ok &= good
        print(f"{'PASS' if good else 'FAIL'} {name}: {got}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
