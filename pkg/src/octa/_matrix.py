# Dense exact matrices as lists of lists of Fraction; sizes here stay below 100.
from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(len(a) * rb, (len(a[0]) if a else 0) * cb)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x:
                for p in range(rb):
                    for q in range(cb):
                        out[i * rb + p][j * cb + q] = x * b[p][q]
    return out


def scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))
