"""Regenerates tests/fixtures/*.json from independent Python constructions.

Groups are built here from permutations, affine maps, matrices over GF(3)
and metacyclic multiplication rules, with no code shared with the C++
library. Spectra come from numpy, characteristic polynomials from sympy.

    python3 tests/oracle/gen_fixtures.py
"""

import itertools
import json
import math
import pathlib
import random

import networkx as nx
import numpy as np
import sympy
from sympy.combinatorics import AlternatingGroup, DihedralGroup, SymmetricGroup

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
CHARPOLY_CAP = 24


def metacyclic(m, k, t, u):
    """Z_m : Z_k, elements a^i b^j with b a b^-1 = a^u and b^k = a^t."""
    els = [(i, j) for i in range(m) for j in range(k)]

    def mul(x, y):
        i, j = x
        a, l = y
        e = (i + a * pow(u, j, m)) % m
        s = j + l
        if s >= k:
            s -= k
            e = (e + t) % m
        return (e, s)

    return els, mul


def permutation_group(g):
    return list(g.elements), lambda x, y: x * y


def affine(p, q):
    """x -> ax + b over Z_p with a in the order-q subgroup of units."""
    gen = next(g for g in range(2, p) if sympy.n_order(g, p) == p - 1) if p > 2 else 1
    u = pow(gen, (p - 1) // q, p)
    units = [pow(u, j, p) for j in range(q)]
    els = [(a, b) for a in units for b in range(p)]
    return els, lambda x, y: ((x[0] * y[0]) % p, (x[0] * y[1] + x[1]) % p)


def sl23():
    mats = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 == 1:
            mats.append((a, b, c, d))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    return mats, mul


def product(g1, g2):
    e1, m1 = g1
    e2, m2 = g2
    return [(x, y) for x in e1 for y in e2], lambda a, b: (m1(a[0], b[0]), m2(a[1], b[1]))


def cyclic(k):
    return list(range(k)), lambda x, y: (x + y) % k


def noncommuting_graph(group):
    els, mul = group
    comm = {(x, y): mul(x, y) == mul(y, x) for x in els for y in els}
    center = [x for x in els if all(comm[(x, y)] for y in els)]
    verts = [x for x in els if x not in center]
    g = nx.Graph()
    g.add_nodes_from(range(len(verts)))
    for i, j in itertools.combinations(range(len(verts)), 2):
        if not comm[(verts[i], verts[j])]:
            g.add_edge(i, j)
    return len(els), len(center), g


def charpoly(mat):
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(mat).charpoly(x).all_coeffs()
    return [str(int(c)) for c in reversed(coeffs)]  # ascending, as strings to keep big values exact


def energies(a):
    n = len(a)
    deg = a.sum(axis=1)
    mu = deg.sum() / n
    ev_a = np.linalg.eigvalsh(a)
    ev_l = np.linalg.eigvalsh(np.diag(deg) - a)
    ev_q = np.linalg.eigvalsh(np.diag(deg) + a)
    return (
        sorted(ev_a.tolist(), reverse=True),
        sorted(ev_l.tolist(), reverse=True),
        sorted(ev_q.tolist(), reverse=True),
        float(np.abs(ev_a).sum()),
        float(np.abs(ev_l - mu).sum()),
        float(np.abs(ev_q - mu).sum()),
    )


def q_integral(q_poly):
    x = sympy.Symbol("x")
    poly = sympy.Poly([int(c) for c in reversed(q_poly)], x)
    return all(f.degree() == 1 for f, _ in sympy.factor_list(poly)[1])


def clique_sizes(g):
    comp = nx.complement(g)
    sizes = []
    for c in nx.connected_components(comp):
        k = len(c)
        if comp.subgraph(c).number_of_edges() != k * (k - 1) // 2:
            return None
        sizes.append(k)
    return sorted(sizes)


def group_record(spec, group):
    order, zc, g = noncommuting_graph(group)
    a = nx.to_numpy_array(g, nodelist=range(g.number_of_nodes()))
    ev_a, ev_l, ev_q, e, le, lep = energies(a)
    rec = {
        "spec": spec,
        "order": order,
        "center": zc,
        "n": g.number_of_nodes(),
        "m": g.number_of_edges(),
        "degrees": sorted(int(d) for _, d in g.degree()),
        "cliques": clique_sizes(g),
        "a_eigs": ev_a,
        "l_eigs": ev_l,
        "q_eigs": ev_q,
        "E": e,
        "LE": le,
        "LEplus": lep,
    }
    if g.number_of_nodes() <= CHARPOLY_CAP:
        ai = a.astype(int)
        d = np.diag(ai.sum(axis=1))
        rec["a_charpoly"] = charpoly(ai.tolist())
        rec["q_charpoly"] = charpoly((d + ai).tolist())
        rec["q_integral"] = q_integral(rec["q_charpoly"])
    return rec


def groups():
    out = []
    for m in range(3, 11):
        out.append(group_record(f"D:2m={2 * m}", permutation_group(DihedralGroup(m))))
    out.append(group_record("A4", permutation_group(AlternatingGroup(4))))
    out.append(group_record("S4", permutation_group(SymmetricGroup(4))))
    out.append(group_record("A5", permutation_group(AlternatingGroup(5))))
    out.append(group_record("SL23", sl23()))
    for p, q in [(7, 3), (5, 4), (13, 3), (11, 5)]:
        out.append(group_record(f"F:p={p},q={q}", affine(p, q)))
    for n in [2, 3, 4, 5]:
        out.append(group_record(f"Q:4n={4 * n}", metacyclic(2 * n, 2, n, 2 * n - 1)))
    for n in [4, 5]:
        half = 2 ** (n - 1)
        out.append(group_record(f"QD:2^{n}", metacyclic(half, 2, 0, half // 2 - 1)))
    for r, s in [(3, 1), (4, 2), (5, 2), (6, 2)]:
        out.append(group_record(f"M:r={r},s={s}", metacyclic(r, 2 * s, 0, r - 1)))
    for n in [1, 2, 3]:
        out.append(group_record(f"U:6n={6 * n}", metacyclic(3, 2 * n, 0, 2)))
    for n in [2, 3]:
        out.append(group_record(f"SD:8n={8 * n}", metacyclic(4 * n, 2, 0, 2 * n - 1)))
    out.append(group_record("prod(Z:2,D:2m=8)", product(cyclic(2), permutation_group(DihedralGroup(4)))))
    out.append(group_record("prod(D:2m=6,Z:3)", product(permutation_group(DihedralGroup(3)), cyclic(3))))
    out.append(group_record("prod(A4,Z:2)", product(permutation_group(AlternatingGroup(4)), cyclic(2))))
    return out


def multipartite():
    rng = random.Random(20240611)
    out = []
    while len(out) < 12:
        parts = [rng.randint(1, 4) for _ in range(rng.randint(2, 5))]
        if sum(parts) > 12:
            continue
        g = nx.complete_multipartite_graph(*parts)
        a = nx.to_numpy_array(g, dtype=int)
        d = np.diag(a.sum(axis=1))
        out.append(
            {
                "parts": sorted(parts),
                "a_charpoly": charpoly(a.tolist()),
                "q_charpoly": charpoly((d + a).tolist()),
                "l_charpoly": charpoly((d - a).tolist()),
            }
        )
    return out


def squares():
    def value(kind, n):
        return {
            "K1": 8 * n * n - 16 * n + 9,
            "K2": 2 * n * n - 8 * n + 9,
            "K3": 32 * n * n - 32 * n + 9,
            "K4": 2 ** (2 * n - 1) - 2 ** (n + 2) + 9,
        }[kind]

    out = {}
    for kind, bound in [("K1", 10000), ("K2", 10000), ("K3", 10000), ("K4", 64)]:
        hits = []
        for n in range(1, bound + 1):
            v = value(kind, n)
            r = math.isqrt(v)
            if r * r == v:
                hits.append([n, str(r)])
        out[kind] = {"bound": bound, "hits": hits}
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, data in [("groups", groups()), ("multipartite", multipartite()), ("squares", squares())]:
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")
        print("wrote", OUT / f"{name}.json")


if __name__ == "__main__":
    main()
