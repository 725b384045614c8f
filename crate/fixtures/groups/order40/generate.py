#!/usr/bin/env python3
"""Writes multiplication tables for the 14 groups of order 40.

Every group of order 40 is C5 ⋊ P with P of order 8 acting on C5 through
a homomorphism P -> Aut(C5) = <2> (mod 5). Each entry below names P and the
multiplier each element of P acts by. Run from this directory.
"""

from itertools import product


def cyclic(m):
    return list(range(m)), lambda a, b: (a + b) % m


def c4xc2():
    els = list(product(range(4), range(2)))
    return els, lambda a, b: ((a[0] + b[0]) % 4, (a[1] + b[1]) % 2)


def c2cubed():
    els = list(product(range(2), repeat=3))
    return els, lambda a, b: tuple((x + y) % 2 for x, y in zip(a, b))


def dihedral8():
    # (i, j) = r^i s^j, with s r = r^-1 s.
    els = list(product(range(4), range(2)))
    return els, lambda a, b: ((a[0] + (-1) ** a[1] * b[0]) % 4, (a[1] + b[1]) % 2)


def quaternion8():
    # (i, j) = a^i x^j with a^4 = 1, x^2 = a^2, x a = a^-1 x.
    els = list(product(range(4), range(2)))

    def mul(a, b):
        i = (a[0] + (-1) ** a[1] * b[0]) % 4
        if a[1] and b[1]:
            return ((i + 2) % 4, 0)
        return (i, (a[1] + b[1]) % 2)

    return els, mul


GROUPS = [
    ("C40", cyclic(8), lambda p: 1),
    ("C5_C8_inv", cyclic(8), lambda p: 4 ** p % 5),
    ("C5_C8_faithful", cyclic(8), lambda p: 2 ** p % 5),
    ("C20xC2", c4xc2(), lambda p: 1),
    ("C2xDic20", c4xc2(), lambda p: 4 ** p[0] % 5),
    ("C4xD10", c4xc2(), lambda p: 4 ** p[1] % 5),
    ("C2xF20", c4xc2(), lambda p: 2 ** p[0] % 5),
    ("C10xC2xC2", c2cubed(), lambda p: 1),
    ("C2xC2xD10", c2cubed(), lambda p: 4 ** p[0] % 5),
    ("C5xD8", dihedral8(), lambda p: 1),
    ("D40", dihedral8(), lambda p: 4 ** p[1] % 5),
    ("C5_D8", dihedral8(), lambda p: 4 ** p[0] % 5),
    ("C5xQ8", quaternion8(), lambda p: 1),
    ("Dic40", quaternion8(), lambda p: 4 ** p[1] % 5),
]


def table(p_group, action):
    p_els, p_mul = p_group
    identity = next(e for e in p_els if all(p_mul(e, x) == x for x in p_els))
    # Identity first: (0, identity).
    p_els = [identity] + [e for e in p_els if e != identity]
    els = [(a, p) for p in p_els for a in range(5)]
    els.sort(key=lambda e: (e[1] != identity, p_els.index(e[1]), e[0]))
    index = {e: i for i, e in enumerate(els)}
    for p in p_els:
        for q in p_els:
            assert action(p_mul(p, q)) == action(p) * action(q) % 5, "not a homomorphism"
    rows = []
    for a, p in els:
        rows.append([index[((a + action(p) * b) % 5, p_mul(p, q))] for b, q in els])
    return rows


def main():
    for name, p_group, action in GROUPS:
        rows = table(p_group, action)
        with open(f"{name}.gtab", "w") as f:
            f.write(f"# {name}\n{len(rows)}\n")
            for row in rows:
                f.write(" ".join(map(str, row)) + "\n")
    with open("counts.txt", "w") as f:
        f.write("# order count\n40 14\n")


if __name__ == "__main__":
    main()
