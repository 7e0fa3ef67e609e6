"""Independent recomputation of exceptional weighted Dynkin diagrams.

Used only by the tests to audit the shipped F4/E8 tables.  An orbit is
described by its Bala-Carter data: a set of simple roots spanning a Levi
subsystem and, on each component, either the regular orbit or a
distinguished one (picked by position among the distinguished even
gradings of that component, ordered by decreasing dimension).  The
neutral element h is assembled in the Levi, then conjugated to the
dominant chamber.
"""
from fractions import Fraction
from itertools import product

import sympy

# Gram matrices of simple roots, Bourbaki numbering, indices 0-based.
def _gram(n, diag, edges):
    g = [[Fraction(0)] * n for _ in range(n)]
    for i, d in enumerate(diag):
        g[i][i] = Fraction(d)
    for (i, j), v in edges.items():
        g[i - 1][j - 1] = g[j - 1][i - 1] = Fraction(v)
    return g


GRAM = {
    "F4": _gram(4, [2, 2, 1, 1], {(1, 2): -1, (2, 3): -1, (3, 4): Fraction(-1, 2)}),
    "E8": _gram(8, [2] * 8, {(1, 3): -1, (3, 4): -1, (4, 5): -1, (5, 6): -1,
                             (6, 7): -1, (7, 8): -1, (2, 4): -1}),
}


def _ip(g, u, v):
    n = len(g)
    return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])


def positive_roots(group):
    """Positive roots as coefficient tuples over the simple roots."""
    g = GRAM[group]
    n = len(g)
    simple = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i, a in enumerate(simple):
                c = 2 * _ip(g, beta, a) / g[i][i]
                img = tuple(b - c * x for b, x in zip(beta, a))
                if img not in seen and all(x >= 0 for x in img):
                    seen.add(img)
                    new.append(img)
        frontier = new
    return sorted(seen)


def _coroot(g, beta):
    length = _ip(g, beta, beta)
    return tuple(2 * b / length for b in beta)


def _labels(g, h):
    n = len(g)
    return [_ip(g, tuple(Fraction(int(i == j)) for j in range(n)), h) for i in range(n)]


def _dominant(g, h):
    n = len(g)
    h = list(h)
    while True:
        labels = _labels(g, h)
        neg = [i for i in range(n) if labels[i] < 0]
        if not neg:
            return [int(x) for x in labels]
        i = neg[0]
        c = 2 * labels[i] / g[i][i]
        h[i] -= c


def _support(beta):
    return {i + 1 for i, x in enumerate(beta) if x}


def _distinguished_gradings(group, nodes):
    """0/2 labelings of ``nodes`` that are distinguished, largest orbit first."""
    roots = [b for b in positive_roots(group) if _support(b) <= set(nodes)]
    nodes = sorted(nodes)
    found = []
    for labels in product((0, 2), repeat=len(nodes)):
        lab = dict(zip(nodes, labels))
        grades = [sum(int(b[i - 1]) * lab[i] for i in nodes) for b in roots]
        dim0 = len(nodes) + 2 * grades.count(0)
        dim2 = grades.count(2)
        if dim0 == dim2:
            found.append((dim0, lab))
    found.sort(key=lambda t: t[0])
    return [lab for _, lab in found]


def _h_on_levi(group, nodes, labels):
    """h in the span of the coroots of ``nodes`` with prescribed simple labels."""
    g = GRAM[group]
    n = len(g)
    nodes = sorted(nodes)
    cor = {j: _coroot(g, tuple(Fraction(int(k == j - 1)) for k in range(n))) for j in nodes}
    mat = sympy.Matrix([[sympy.Rational(_ip(g, tuple(Fraction(int(k == i - 1)) for k in range(n)), cor[j]))
                         for j in nodes] for i in nodes])
    rhs = sympy.Matrix([labels[i] for i in nodes])
    coeffs = mat.LUsolve(rhs)
    h = [Fraction(0)] * n
    for c, j in zip(coeffs, nodes):
        for k in range(n):
            h[k] += Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) * cor[j][k]
    return h


def weighted_diagram(group, components):
    """``components``: list of (nodes, which) with which = "reg" or an int
    index into the distinguished gradings (0 = regular, -1 = smallest)."""
    g = GRAM[group]
    n = len(g)
    h = [Fraction(0)] * n
    for nodes, which in components:
        if which == "reg":
            lab = {i: 2 for i in nodes}
        else:
            lab = _distinguished_gradings(group, nodes)[which]
        part = _h_on_levi(group, nodes, lab)
        h = [a + b for a, b in zip(h, part)]
    return "".join(str(x) for x in _dominant(g, h))


F4_BALA_CARTER = {
    "0": [],
    "A1": [({1}, "reg")],
    "Ã1": [({4}, "reg")],
    "A1+Ã1": [({1}, "reg"), ({4}, "reg")],
    "A2": [({1, 2}, "reg")],
    "Ã2": [({3, 4}, "reg")],
    "A2+Ã1": [({1, 2}, "reg"), ({4}, "reg")],
    "B2": [({2, 3}, "reg")],
    "Ã2+A1": [({3, 4}, "reg"), ({1}, "reg")],
    "C3(a1)": [({2, 3, 4}, -1)],
    "F4(a3)": [({1, 2, 3, 4}, -1)],
    "B3": [({1, 2, 3}, "reg")],
    "C3": [({2, 3, 4}, "reg")],
    "F4(a2)": [({1, 2, 3, 4}, 2)],
    "F4(a1)": [({1, 2, 3, 4}, 1)],
    "F4": [({1, 2, 3, 4}, "reg")],
}

E8_BALA_CARTER = {
    "0": [],
    "E8(a7)": [(set(range(1, 9)), -1)],
    "E7(a5)": [(set(range(1, 8)), -1)],
    "E6(a3)+A1": [({1, 2, 3, 4, 5, 6}, -1), ({8}, "reg")],
    "D6(a2)": [({2, 3, 4, 5, 6, 7}, -1)],
    "D5(a1)+A2": [({1, 2, 3, 4, 5}, -1), ({7, 8}, "reg")],
    "A5+A1": [({1, 3, 4, 5, 6}, "reg"), ({8}, "reg")],
    "A4+A3": [({1, 2, 3, 4}, "reg"), ({6, 7, 8}, "reg")],
    "E8": [(set(range(1, 9)), "reg")],
}

# Second Levi embeddings of the same type, to confirm the label is well defined.
E8_ALTERNATES = {
    "A5+A1": [({2, 4, 5, 6, 7}, "reg"), ({1}, "reg")],
}


if __name__ == "__main__":
    for name, table in (("F4", F4_BALA_CARTER), ("E8", E8_BALA_CARTER)):
        for label, comps in table.items():
            print(name, label, weighted_diagram(name, comps))
    for label, comps in E8_ALTERNATES.items():
        print("E8 alt", label, weighted_diagram("E8", comps))
    print(len(positive_roots("F4")), len(positive_roots("E8")))
