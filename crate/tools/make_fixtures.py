#!/usr/bin/env python3
"""Writes the two hand-built fixture groups into corpus/.

  corpus/108/he3_z4.cay      Heisenberg group of order 27 extended by Z4,
                             as a 1-based Cayley table
  corpus/1176/z7sq_sl23.grp  F7^2 extended by SL(2,3), as affine maps on
                             the 49 points of F7^2

Both are built from explicit models, not exported from a library. The
script also prints the conjugacy class sizes it computes, as a cross-check
against the Rust side.

Usage: python3 tools/make_fixtures.py [corpus-dir]
"""

import itertools
import os
import sys

# --- order 108 -------------------------------------------------------------
#
# H = F3^2 x F3 with (v, c)(w, d) = (v + w, c + d + 2*omega(v, w)), where
# omega is the standard symplectic form and 2 = 1/2 mod 3. Any matrix of
# determinant 1 acting on v and fixing c is an automorphism. J is the
# rotation (a, b) -> (-b, a) of order 4.

P = 3


def omega(v, w):
    return (v[0] * w[1] - v[1] * w[0]) % P


def rot(v, k):
    a, b = v
    for _ in range(k % 4):
        a, b = (-b) % P, a
    return (a, b)


def he_mul(x, y):
    (v, c, k), (w, d, l) = x, y
    w = rot(w, k)
    s = ((v[0] + w[0]) % P, (v[1] + w[1]) % P)
    return (s, (c + d + 2 * omega(v, w)) % P, (k + l) % 4)


def he_elements():
    identity = ((0, 0), 0, 0)
    rest = [
        ((a, b), c, k)
        for k in range(4)
        for a in range(P)
        for b in range(P)
        for c in range(P)
        if ((a, b), c, k) != identity
    ]
    return [identity] + rest


# --- order 1176 ------------------------------------------------------------
#
# SL(2,3) inside SL(2,7): Q8 = <i, j> with i = [[0,-1],[1,0]] and
# j = [[2,3],[3,-2]], plus w = -(1 + i + j + k)/2 of order 3 normalizing it.
# Points of F7^2 are numbered 7a + b.

Q = 7


def mat_mul(m, n):
    return tuple(
        tuple(sum(m[r][t] * n[t][c] for t in range(2)) % Q for c in range(2))
        for r in range(2)
    )


def mat_add(*ms):
    return tuple(
        tuple(sum(m[r][c] for m in ms) % Q for c in range(2)) for r in range(2)
    )


def mat_scale(s, m):
    return tuple(tuple((s * x) % Q for x in row) for row in m)


def sl23_generators():
    one = ((1, 0), (0, 1))
    i = ((0, Q - 1), (1, 0))
    j = ((2, 3), (3, Q - 2))
    k = mat_mul(i, j)
    half = pow(2, -1, Q)
    w = mat_scale((-half) % Q, mat_add(one, i, j, k))
    return [i, j, w]


def affine_perm(m, t):
    """Image list of v -> m v + t on points 7a + b (0-based)."""
    images = []
    for a in range(Q):
        for b in range(Q):
            x = (m[0][0] * a + m[0][1] * b + t[0]) % Q
            y = (m[1][0] * a + m[1][1] * b + t[1]) % Q
            images.append(Q * x + y)
    return images


def cycles(images):
    seen = [False] * len(images)
    out = []
    for s in range(len(images)):
        if seen[s] or images[s] == s:
            seen[s] = True
            continue
        cyc = []
        p = s
        while not seen[p]:
            seen[p] = True
            cyc.append(str(p + 1))
            p = images[p]
        out.append("(" + " ".join(cyc) + ")")
    return "".join(out) or "()"


# --- cross-checks ----------------------------------------------------------


def class_sizes(elements, mul, inv):
    todo = set(elements)
    sizes = []
    while todo:
        x = next(iter(todo))
        cls = {mul(mul(inv(g), x), g) for g in elements}
        todo -= cls
        sizes.append(len(cls))
    return sorted(sizes)


def perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else "corpus"

    elems = he_elements()
    index = {e: n for n, e in enumerate(elems)}
    assert len(elems) == 108
    for x, y, z in itertools.product(elems[:12], elems, elems[::7]):
        assert he_mul(he_mul(x, y), z) == he_mul(x, he_mul(y, z))
    table = [[index[he_mul(x, y)] + 1 for y in elems] for x in elems]
    inv = {x: y for x in elems for y in elems if he_mul(x, y) == elems[0]}
    print("he3_z4 class sizes:", class_sizes(elems, he_mul, inv.__getitem__))

    os.makedirs(os.path.join(root, "108"), exist_ok=True)
    with open(os.path.join(root, "108", "he3_z4.cay"), "w") as f:
        f.write("# name: he3_z4\n")
        f.write(
            "# provenance: candidate for Id(108,15), built by tools/make_fixtures.py"
            " as Heis(3) extended by a symplectic rotation of order 4;"
            " standard is reproducing the quoted class properties\n"
        )
        for row in table:
            f.write(",".join(map(str, row)) + "\n")

    mats = sl23_generators()
    gens = [affine_perm(((1, 0), (0, 1)), (1, 0))] + [affine_perm(m, (0, 0)) for m in mats]
    group = perm_closure(gens)
    print("z7sq_sl23 order:", len(group))
    assert len(group) == 1176

    os.makedirs(os.path.join(root, "1176"), exist_ok=True)
    with open(os.path.join(root, "1176", "z7sq_sl23.grp"), "w") as f:
        f.write("name: z7sq_sl23\n")
        f.write("degree: 49\n")
        f.write(
            "provenance: candidate for Id(1176,213), built by tools/make_fixtures.py"
            " as F7^2 extended by SL(2,3) inside SL(2,7), point 7a+b+1 is (a,b);"
            " standard is reproducing the quoted class properties\n"
        )
        for g in gens:
            f.write("gen: " + cycles(g) + "\n")


if __name__ == "__main__":
    main()
