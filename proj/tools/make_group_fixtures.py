#!/usr/bin/env python3
"""Writes the primitive-group fixture files used by the search tests."""

import itertools
import pathlib
import sys


def cycles(images):
    seen, out = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = images[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def from_map(points, f):
    index = {p: k for k, p in enumerate(points)}
    return [index[f(p)] for p in points]


# Finite fields as (add, mul, elements).
def prime_field(p):
    return (lambda a, b: (a + b) % p, lambda a, b: (a * b) % p, list(range(p)))


def extension_field(p, modulus):
    """F_p[t] modulo t^d + c_{d-1} t^{d-1} + ... + c_0, with modulus = (c_0, ..., c_{d-1});
    elements are coefficient tuples, constant term first."""
    deg = len(modulus)

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(a, b):
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, deg - 1, -1):
            c = prod[k]
            prod[k] = 0
            for m, coeff in enumerate(modulus):
                prod[k - deg + m] = (prod[k - deg + m] - c * coeff) % p
        return tuple(prod[:deg])

    return add, mul, list(itertools.product(range(p), repeat=deg))


INF = "inf"


def mobius(field, a, b, c, d):
    add, mul, elems = field
    zero = elems[0]

    def inv(x):
        return next(y for y in elems if mul(x, y) == one)

    one = next(e for e in elems if all(mul(e, y) == y for y in elems))

    def f(x):
        if x == INF:
            return INF if c == zero else mul(a, inv(c))
        num, den = add(mul(a, x), b), add(mul(c, x), d)
        return INF if den == zero else mul(num, inv(den))

    return f


def projective_line(field):
    return field[2] + [INF]


def group_text(name, degree, gens):
    lines = [f"# {name}", f"group {degree} {len(gens)}"]
    lines += [cycles(g) for g in gens]
    return "\n".join(lines) + "\n"


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {}

    for n in (5, 7):
        rot = [(x + 1) % n for x in range(n)]
        ref = [(-x) % n for x in range(n)]
        files[f"d{n}.group"] = group_text(f"dihedral group of order {2 * n}", n, [rot, ref])

    f5 = prime_field(5)
    pts = projective_line(f5)
    translate = from_map(pts, mobius(f5, 1, 1, 0, 1))
    invert = from_map(pts, mobius(f5, 0, 4, 1, 0))
    square = from_map(pts, mobius(f5, 4, 0, 0, 1))
    scale = from_map(pts, mobius(f5, 2, 0, 0, 1))
    files["psl2_5.group"] = group_text("PSL(2,5) on the projective line", 6, [translate, invert, square])
    files["pgl2_5.group"] = group_text("PGL(2,5) on the projective line", 6, [translate, invert, scale])

    f7 = prime_field(7)
    pts = projective_line(f7)
    gens = [from_map(pts, mobius(f7, 1, 1, 0, 1)), from_map(pts, mobius(f7, 3, 0, 0, 1)),
            from_map(pts, mobius(f7, 0, 6, 1, 0))]
    files["pgl2_7.group"] = group_text("PGL(2,7) on the projective line", 8, gens)

    # F_8 = F_2[t]/(t^3 + t + 1).
    f8 = extension_field(2, (1, 1, 0))
    one, t = (1, 0, 0), (0, 1, 0)
    zero = (0, 0, 0)
    pts = projective_line(f8)
    gens = [from_map(pts, mobius(f8, one, one, zero, one)), from_map(pts, mobius(f8, t, zero, zero, one)),
            from_map(pts, mobius(f8, zero, one, one, zero))]
    files["psl2_8.group"] = group_text("PSL(2,8) on the projective line", 9, gens)

    # F_9 = F_3[t]/(t^2 - t - 1); t generates the multiplicative group.
    f9 = extension_field(3, (2, 2))
    one, t, zero = (1, 0), (0, 1), (0, 0)
    mul = f9[1]
    t2 = mul(t, t)
    minus_one = (2, 0)
    pts = projective_line(f9)
    frob = from_map(pts, lambda x: x if x == INF else mul(mul(x, x), x))
    gens = [from_map(pts, mobius(f9, one, one, zero, one)), from_map(pts, mobius(f9, t2, zero, zero, one)),
            from_map(pts, mobius(f9, zero, minus_one, one, zero)), frob]
    files["psigmal2_9.group"] = group_text("PSigmaL(2,9) on the projective line", 10, gens)

    grid = [(a, b) for a in range(3) for b in range(3)]
    gens = [from_map(grid, lambda p: ((p[0] + 1) % 3, p[1])),
            from_map(grid, lambda p: ((1, 0, 2)[p[0]], p[1])),
            from_map(grid, lambda p: (p[1], p[0]))]
    files["s3_wr_s2.group"] = group_text("Sym(3) wr Sym(2) in product action", 9, gens)

    pairs = list(itertools.combinations(range(5), 2))
    on_pairs = lambda s: (lambda p: tuple(sorted((s[p[0]], s[p[1]]))))
    gens = [from_map(pairs, on_pairs([1, 0, 2, 3, 4])), from_map(pairs, on_pairs([1, 2, 3, 4, 0]))]
    files["s5_pairs.group"] = group_text("Sym(5) on 2-subsets", 10, gens)

    for name, body in files.items():
        (out / name).write_text(body)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/groups")
