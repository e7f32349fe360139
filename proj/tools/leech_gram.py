#!/usr/bin/env python3
"""Regenerate the integer Gram matrix of the Leech lattice shipped in
src/lattice/catalog.cpp.

The lattice is built in sqrt(8)-scaled coordinates from the extended binary
Golay code (vectors 2c for codewords c, 4e_i +- 4e_j, and (-3, 1^23)),
reduced to a Z-basis, LLL-reduced, and the Gram matrix B B^T / 8 printed as
a C++ initializer.
"""
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import hermite_normal_form
from sympy.polys.matrices import DomainMatrix

N = 23
QR = sorted({(i * i) % N for i in range(1, N)})


def golay_basis():
    rows = []
    for s in range(N):
        v = [0] * N
        for q in QR:
            v[(q + s) % N] = 1
        rows.append(v)
    rows.append([1] * N)
    # extend by overall parity
    rows = [r + [sum(r) % 2] for r in rows]
    # GF(2) row reduction
    basis = []
    for r in rows:
        r = r[:]
        for b in basis:
            p = b.index(1)
            if r[p]:
                r = [(x ^ y) for x, y in zip(r, b)]
        if any(r):
            basis.append(r)
    assert len(basis) == 12, len(basis)
    return basis


def main():
    gens = [[2 * x for x in c] for c in golay_basis()]
    for j in range(1, 24):
        v = [0] * 24
        v[0], v[j] = 4, 4
        gens.append(v)
        w = [0] * 24
        w[0], w[j] = 4, -4
        gens.append(w)
    gens.append([-3] + [1] * 23)

    hnf = hermite_normal_form(Matrix(gens).T).T
    rows = [list(hnf.row(i)) for i in range(hnf.rows) if any(hnf.row(i))]
    assert len(rows) == 24
    red = DomainMatrix([[ZZ(x) for x in r] for r in rows], (24, 24), ZZ).lll()
    b = red.to_Matrix()
    gram = b * b.T
    assert all(x % 8 == 0 for x in gram)
    gram = gram / 8
    assert gram.det() == 1
    assert all(gram[i, i] % 2 == 0 for i in range(24))
    for i in range(24):
        print("    {" + ", ".join(f"{int(gram[i, j])}" for j in range(24)) + "},")


if __name__ == "__main__":
    main()
