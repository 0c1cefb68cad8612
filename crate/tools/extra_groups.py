#!/usr/bin/env python3
"""Writes a handful of groups outside the constructor families into corpus/.

  q8         quaternion group, regular action on 8 points
  sl2_3      SL(2,3) on the 8 nonzero vectors of F3^2
  gl2_3      GL(2,3) on the same 8 points
  psl2_7     PSL(2,7) on the 8 points of the projective line over F7
  heis27     {(x, y) -> (x + a, y + b x + c)} on the 9 points of F3^2

Usage: python3 tools/extra_groups.py [corpus-dir]
"""

import os
import sys


def closure_order(gens):
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
    return len(seen)


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


def q8():
    # elements +-1, +-i, +-j, +-k as (sign, unit), unit in 1, i, j, k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {e: n for n, e in enumerate(elems)}

    def right(g):
        out = []
        for s, u in elems:
            t, v = table[(u, g[1])]
            out.append(index[(s * g[0] * t, v)])
        return out

    return 8, [right((1, "i")), right((1, "j"))]


def f3_vectors():
    return [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]


def linear_on_vectors(m, q, vectors):
    index = {v: n for n, v in enumerate(vectors)}
    out = []
    for a, b in vectors:
        w = ((m[0][0] * a + m[0][1] * b) % q, (m[1][0] * a + m[1][1] * b) % q)
        out.append(index[w])
    return out


def sl2_3():
    vs = f3_vectors()
    return 8, [linear_on_vectors(((1, 1), (0, 1)), 3, vs), linear_on_vectors(((1, 0), (1, 1)), 3, vs)]


def gl2_3():
    deg, gens = sl2_3()
    return deg, gens + [linear_on_vectors(((2, 0), (0, 1)), 3, f3_vectors())]


def psl2_7():
    # projective line: 0..6 and infinity = 7
    inf = 7

    def mobius(a, b, c, d):
        out = []
        for x in range(8):
            if x == inf:
                out.append(inf if c == 0 else (a * pow(c, -1, 7)) % 7)
                continue
            num = (a * x + b) % 7
            den = (c * x + d) % 7
            out.append(inf if den == 0 else (num * pow(den, -1, 7)) % 7)
        return out

    return 8, [mobius(1, 1, 0, 1), mobius(0, 6, 1, 0)]


def heis27():
    pts = [(x, y) for x in range(3) for y in range(3)]
    index = {p: n for n, p in enumerate(pts)}
    shift = [index[((x + 1) % 3, y)] for x, y in pts]
    shear = [index[(x, (y + x) % 3)] for x, y in pts]
    lift = [index[(x, (y + 1) % 3)] for x, y in pts]
    return 9, [shift, shear, lift]


GROUPS = [
    ("q8", q8, 8, "quaternion group, regular action"),
    ("sl2_3", sl2_3, 24, "SL(2,3) on the nonzero vectors of F3^2"),
    ("gl2_3", gl2_3, 48, "GL(2,3) on the nonzero vectors of F3^2"),
    ("psl2_7", psl2_7, 168, "PSL(2,7) on the projective line over F7"),
    ("heis27", heis27, 27, "Heisenberg group mod 3 as affine shears of F3^2"),
]


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    for name, build, order, what in GROUPS:
        degree, gens = build()
        got = closure_order(gens)
        assert got == order, (name, got)
        d = os.path.join(root, str(order))
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, name + ".grp"), "w") as f:
            f.write(f"name: {name}\n")
            f.write(f"degree: {degree}\n")
            f.write(f"provenance: tools/extra_groups.py, {what}\n")
            for g in gens:
                f.write("gen: " + cycles(g) + "\n")
        print(f"{name}: order {order}")


if __name__ == "__main__":
    main()
