#!/usr/bin/env python3
"""Brute-force reference computations, written independently of the C++ code.

Exponent vectors are tuples; rationals are fractions.Fraction. Every linear
algebra question is split by weight (uv/Z for an unknown C^Z_{u,v}), which the
bracket and the action preserve, and each block is row-reduced densely.

Usage: oracle.py [name ...]   prints a JSON object with the requested values
(all values except the SLOW ones when no name is given).
"""

import itertools
import json
import sys
from collections import defaultdict
from fractions import Fraction


def box(g, r):
    return [tuple(e) for e in itertools.product(range(-r, r + 1), repeat=2 * g)]


def mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def inv(a):
    return tuple(-x for x in a)


def norm(a):
    return max((abs(x) for x in a), default=0)


def iform(a, b):
    return sum(a[2 * j] * b[2 * j + 1] - b[2 * j] * a[2 * j + 1] for j in range(len(a) // 2))


def unit(g):
    return (0,) * (2 * g)


def canon(flavor, a, b):
    """(sign, key) for a pair; sign 0 when the wedge vanishes."""
    if flavor == "tensor":
        return 1, (a, b)
    if a == b:
        return 0, None
    return (1, (a, b)) if a > b else (-1, (b, a))


def act(flavor, z, elem):
    """z . elem for a dict {(u, v): coef}."""
    out = defaultdict(Fraction)
    for (u, v), c in elem.items():
        for coef, a, b in ((iform(z, u), mul(z, u), v), (iform(z, v), u, mul(z, v))):
            if coef == 0:
                continue
            s, k = canon(flavor, a, b)
            if s:
                out[k] += s * coef * c
    return {k: c for k, c in out.items() if c != 0}


def component(g, a, b):
    one = unit(g)
    return ("unit" if a == one else "prime") + "_" + ("unit" if b == one else "prime")


def wedge_component(g, a, b):
    one = unit(g)
    return "prime_unit" if one in (a, b) else "prime_prime"


def in_component(flavor, comp, g, a, b):
    if comp == "all":
        return True
    return (component(g, a, b) if flavor == "tensor" else wedge_component(g, a, b)) == comp


# ---------------------------------------------------------------------------
# Exact row reduction.

def rref(rows, ncols_order):
    """rows: list of (dict col->Fraction, rhs Fraction). Returns (pivots, consistent)
    where pivots maps pivot col -> (row dict, rhs) in fully reduced form."""
    pivots = {}
    consistent = True
    for row, rhs in rows:
        row = dict(row)
        for c in sorted(row, key=ncols_order):
            if c in pivots and c in row:
                prow, prhs = pivots[c]
                f = row[c]
                for k, v in prow.items():
                    row[k] = row.get(k, 0) - f * v
                    if row[k] == 0:
                        del row[k]
                rhs -= f * prhs
        if not row:
            if rhs != 0:
                consistent = False
            continue
        p = min(row, key=ncols_order)
        f = row[p]
        row = {k: v / f for k, v in row.items()}
        rhs /= f
        for q, (qrow, qrhs) in list(pivots.items()):
            if p in qrow:
                h = qrow[p]
                for k, v in row.items():
                    qrow[k] = qrow.get(k, 0) - h * v
                    if qrow[k] == 0:
                        del qrow[k]
                pivots[q] = (qrow, qrhs - h * rhs)
        pivots[p] = (row, rhs)
    return pivots, consistent


def rank_by_blocks(vectors, weight_of):
    blocks = defaultdict(list)
    for v in vectors:
        if v:
            blocks[weight_of(next(iter(v)))].append((v, Fraction(0)))
    total = 0
    for rows in blocks.values():
        piv, _ = rref(rows, lambda c: c)
        total += len(piv)
    return total


# ---------------------------------------------------------------------------
# Cocycle systems.

def cocycle_system(g, R, S, flavor, comp="all", mode="finite-support", pinned=None):
    """Returns (unknowns, rows) with rows as (dict, rhs, weight)."""
    pinned = pinned or {}
    dom = box(g, R)
    vals = box(g, S)
    pairs = [(u, v) for u in vals for v in vals
             if (flavor == "tensor" or u > v) and in_component(flavor, comp, g, u, v)]
    pairset = set(pairs)
    unknowns = [(z, u, v) for z in dom if z not in pinned for (u, v) in pairs]
    rows = []
    for z1 in dom:
        for z2 in dom:
            if not z1 > z2 or norm(mul(z1, z2)) > R:
                continue
            z12 = mul(z1, z2)
            if mode == "strict":
                targets = pairs
            else:
                cand = set()
                srcs = list(pairs)
                for z in (z1, z2, z12):
                    srcs += list(pinned.get(z, {}).keys())
                for (a, b) in srcs:
                    for (x, y) in ((a, b), (mul(z1, a), b), (a, mul(z1, b)), (mul(z2, a), b), (a, mul(z2, b))):
                        s, k = canon(flavor, x, y)
                        if s and in_component(flavor, comp, g, *k):
                            cand.add(k)
                targets = sorted(cand)
            for (u, v) in targets:
                terms = [
                    (iform(z1, z2), z12, u, v),
                    (-iform(z1, u), z2, mul(inv(z1), u), v),
                    (-iform(z1, v), z2, u, mul(inv(z1), v)),
                    (iform(z2, u), z1, mul(inv(z2), u), v),
                    (iform(z2, v), z1, u, mul(inv(z2), v)),
                ]
                row = defaultdict(Fraction)
                rhs = Fraction(0)
                keep = True
                for coef, z, a, b in terms:
                    if coef == 0:
                        continue
                    s, k = canon(flavor, a, b)
                    if not s:
                        continue
                    if z in pinned:
                        rhs -= s * coef * pinned[z].get(k, 0)
                        continue
                    if k not in pairset:
                        if mode == "strict" and (norm(k[0]) > S or norm(k[1]) > S):
                            keep = False
                            break
                        if norm(k[0]) > S or norm(k[1]) > S:
                            continue
                        raise AssertionError("equation leaves its component")
                    row[(z,) + k] += s * coef
                row = {c: x for c, x in row.items() if x != 0}
                if keep and (row or rhs != 0):
                    rows.append((row, rhs))
    return unknowns, rows


def weight(col):
    z, u, v = col
    return tuple(a + b - c for a, b, c in zip(u, v, z))


def solve_blocks(unknowns, rows):
    """Kernel dimension, consistency and the set of determined unknowns."""
    blocks = defaultdict(list)
    for row, rhs in rows:
        if not row:
            blocks[None].append((row, rhs))
            continue
        blocks[weight(next(iter(row)))].append((row, rhs))
    consistent = True
    rank = 0
    determined = {}
    for w, brows in blocks.items():
        piv, ok = rref(brows, lambda c: c)
        consistent = consistent and ok
        rank += len(piv)
        for p, (prow, prhs) in piv.items():
            if len(prow) == 1:
                determined[p] = prhs
    return {"rank": rank, "kernel_dim": len(unknowns) - rank, "consistent": consistent,
            "determined": determined}


def system_summary(g, R, S, flavor, comp="all", mode="finite-support"):
    unknowns, rows = cocycle_system(g, R, S, flavor, comp, mode)
    res = solve_blocks(unknowns, rows)
    return {"vars": len(unknowns), "rows": len(rows), "kernel_dim": res["kernel_dim"]}


def propagate_zero(g, R, S, flavor, comp, mode):
    gens = [unit(g)] + [tuple(1 if i == k else 0 for i in range(2 * g)) for k in range(2 * g)]
    pinned = {z: {} for z in gens}
    unknowns, rows = cocycle_system(g, R, S, flavor, comp, mode, pinned)
    res = solve_blocks(unknowns, rows)
    interior = [c for c in unknowns if norm(c[0]) <= R - 1]
    undetermined = [c for c in interior if c not in res["determined"]]
    nonzero = [c for c in interior if res["determined"].get(c, 0) != 0]
    return {"vars": len(unknowns), "interior_vars": len(interior), "undetermined": len(undetermined),
            "consistent": res["consistent"], "nonzero_interior_values": len(nonzero)}


def unit_component_interior(g, R):
    """Interior projection of the 1(x)1 block: unknowns C^Z_{1,1}, equations
    i(Z1,Z2) C^{Z1Z2} = 0. Returns (kernel_dim, interior_dim)."""
    dom = box(g, R)
    forced = set()
    for z1 in dom:
        for z2 in dom:
            if z1 > z2 and norm(mul(z1, z2)) <= R and iform(z1, z2) != 0:
                forced.add(mul(z1, z2))
    free = [z for z in dom if z not in forced]
    return {"kernel_dim": len(free), "interior_dim": len([z for z in free if norm(z) <= R - 1]),
            "free_points": [list(z) for z in free if norm(z) <= R - 1]}


# ---------------------------------------------------------------------------
# Classification of the families modulo coboundaries.

def classification(g, R, Sm, flavor):
    dom = box(g, R)
    one = unit(g)
    fam = []
    for i in range(2 * g):
        k = lambda z, i=i: z[i]
        if flavor == "wedge":
            fam.append({(z, z, one): Fraction(k(z)) for z in dom if k(z) != 0})
        else:
            fam.append({(z, z, one): Fraction(k(z)) for z in dom if k(z) != 0})
            fam.append({(z, one, z): Fraction(k(z)) for z in dom if k(z) != 0})
    if flavor == "tensor":
        fam.append({(one, one, one): Fraction(1)})
    vals = box(g, Sm)
    cob = []
    for u in vals:
        for v in vals:
            if flavor == "wedge" and not u > v:
                continue
            vec = {}
            for z in dom:
                for (a, b), c in act(flavor, z, {(u, v): Fraction(1)}).items():
                    vec[(z, a, b)] = c
            cob.append(vec)
    fam_rank = rank_by_blocks(fam, weight)
    cob_rank = rank_by_blocks(cob, weight)
    joint = rank_by_blocks(cob + fam, weight)
    return {"family_rank": fam_rank, "coboundary_rank": cob_rank, "joint_rank": joint,
            "dimension": joint - cob_rank}


# ---------------------------------------------------------------------------
# Scans.

def turaev(g, S):
    gamma = (1, 0, -1, 0) + (0,) * (2 * g - 4)
    tu, tv = (1, 0, 0, 0) + (0,) * (2 * g - 4), (0, 0, -1, 0) + (0,) * (2 * g - 4)
    s, target = canon("wedge", tu, tv)
    pts = box(g, S)
    checked = nonzero = 0
    for u in pts:
        for v in pts:
            if not u > v:
                continue
            checked += 1
            img = act("wedge", gamma, {(u, v): Fraction(1)})
            if img.get(target, 0) != 0:
                nonzero += 1
    return {"pairs_checked": checked, "nonzero": nonzero, "target": [list(target[0]), list(target[1])]}


def soundness(g, r):
    pts = box(g, r)
    one = unit(g)
    checked = nonzero = 0
    for z in pts:
        if z == one:
            continue
        _, key = canon("wedge", z, one)
        for u in pts:
            for v in pts:
                if not u > v:
                    continue
                checked += 1
                if act("wedge", z, {(u, v): Fraction(1)}).get(key, 0) != 0:
                    nonzero += 1
    return {"triples_checked": checked, "nonzero": nonzero}


def residual_witnesses(g, R, point, value):
    """Residual pairs of Delta_k for k = value * [Z = point] (wedge flavor)."""
    one = unit(g)
    k = lambda z: Fraction(value) if z == point else Fraction(0)
    dom = box(g, R)
    out = []
    for z1 in dom:
        for z2 in dom:
            if not z1 > z2 or norm(mul(z1, z2)) > R:
                continue
            d = lambda z: {canon("wedge", z, one)[1]: canon("wedge", z, one)[0] * k(z)} if z != one and k(z) else {}
            res = defaultdict(Fraction)
            i12 = iform(z1, z2)
            for key, c in d(mul(z1, z2)).items():
                res[key] += i12 * c
            for key, c in act("wedge", z1, d(z2)).items():
                res[key] -= c
            for key, c in act("wedge", z2, d(z1)).items():
                res[key] += c
            res = {kk: c for kk, c in res.items() if c != 0}
            if res:
                out.append([list(z1), list(z2)])
    return out


def extend_mismatch(g, B, k):
    pts = [z for z in box(g, B) if z != unit(g)]
    basis = [k(tuple(1 if i == j else 0 for i in range(2 * g))) for j in range(2 * g)]
    for z in pts:
        h = sum(b * e for b, e in zip(basis, z))
        if k(z) != h:
            return list(z)
    return None


COMPUTATIONS = {
    "system_g1_R1_S1_tensor": lambda: system_summary(1, 1, 1, "tensor"),
    "system_g1_R1_S1_tensor_strict": lambda: system_summary(1, 1, 1, "tensor", mode="strict"),
    "system_g1_R1_S1_wedge": lambda: system_summary(1, 1, 1, "wedge"),
    "system_g1_R2_S2_wedge": lambda: system_summary(1, 2, 2, "wedge"),
    "propagate_g1_R2_S2_pp": lambda: propagate_zero(1, 2, 2, "tensor", "prime_prime", "finite-support"),
    "propagate_g1_R2_S2_pp_strict": lambda: propagate_zero(1, 2, 2, "tensor", "prime_prime", "strict"),
    "unit_component_g1_R2": lambda: unit_component_interior(1, 2),
    "unit_component_g2_R2": lambda: unit_component_interior(2, 2),
    "classify_g1_R2_S5_wedge": lambda: classification(1, 2, 5, "wedge"),
    "classify_g1_R2_S5_tensor": lambda: classification(1, 2, 5, "tensor"),
    "classify_g1_R1_S2_tensor": lambda: classification(1, 1, 2, "tensor"),
    "propagate_g1_R2_S3_pp": lambda: propagate_zero(1, 2, 3, "tensor", "prime_prime", "finite-support"),
    "propagate_g1_R2_S4_pp": lambda: propagate_zero(1, 2, 4, "tensor", "prime_prime", "finite-support"),
    "turaev_g2_S1": lambda: turaev(2, 1),
    "turaev_g2_S2": lambda: turaev(2, 2),
    "soundness_g1_r2": lambda: soundness(1, 2),
    "residual_xy_indicator_R1": lambda: residual_witnesses(1, 1, (1, 1), 1),
    "extend_a1_squared_B2": lambda: extend_mismatch(1, 2, lambda z: Fraction(z[0] * z[0])),
}


# Minutes each; only computed when named explicitly.
SLOW = {"propagate_g1_R2_S3_pp", "propagate_g1_R2_S4_pp"}


def main(argv):
    names = argv[1:] or [n for n in COMPUTATIONS if n not in SLOW]
    out = {}
    for n in names:
        out[n] = COMPUTATIONS[n]()
    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main(sys.argv)
