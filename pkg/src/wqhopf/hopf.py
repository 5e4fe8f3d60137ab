"""Reconstruction of the block matrix algebra of a weak quasi tensor functor.

A natural endotransformation of the functor is a family of matrices, one
D(a) x D(a) block per simple label, so the algebra is H = (+)_a End(K^{D(a)}).
Everything else is transported through the tensorator: the coproduct
conjugates the action on a pair word by (c, c_inv), the associator family
phi and the braiding family R push the categorical structure morphisms into
H tensor powers, the antipode conjugates transposed blocks by the duality
matrices, and alpha / beta are the snake composites mixing the algebra-side
evaluation with the vector-space one.  All identities are verified on the
matrix unit basis, which suffices because they are multilinear.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .category import (associator, associator_inv, braiding, braiding_inv,
                       coev, ev, leaf, pair, trees)
from .functor import (FunctorData, _offsets, functor_on_morphism, tensorator)
from .linalg import (LinalgError, eye, flip_matrix, inverse, kron, matmul,
                     matmul_chain, max_deviation, msub, smul, transpose,
                     zeros)
from .report import Report


class HopfError(ValueError):
    pass


@dataclass(eq=False)
class WQHopf:
    functor: FunctorData
    blocks: tuple        # (label name, D(a)) per simple
    delta_unit: dict     # (a, b) -> projector on K^{D(a)} (x) K^{D(b)}
    phi: dict            # (a, b, c) -> matrix, with quasi-inverse phi_inv
    phi_inv: dict
    R: dict | None       # (a, b) -> matrix, with quasi-inverse R_inv
    R_inv: dict | None
    alpha: dict          # label -> D(a) x D(a)
    beta: dict
    ribbon_v: dict | None

    @property
    def dim(self) -> int:
        return sum(d * d for _, d in self.blocks)


# ---------------------------------------------------------------------------
# elements: label -> D(a) x D(a) block
# ---------------------------------------------------------------------------

def unit_element(H: WQHopf) -> dict:
    one = H.functor.cat.one
    return {a: eye(d, one) for a, (_, d) in enumerate(H.blocks)}


def element_mul(x: dict, y: dict) -> dict:
    return {a: matmul(x[a], y[a]) for a in x}

def element_deviation(x: dict, y: dict) -> float:
    return max(max_deviation(msub(x[a], y[a])) for a in x)


def matrix_units(H: WQHopf):
    """Basis of H: (label, row, col, element) with a single nonzero entry."""
    one = H.functor.cat.one
    out = []
    for a, (_, da) in enumerate(H.blocks):
        for i in range(da):
            for j in range(da):
                h = {b: zeros(d, d, one) for b, (_, d) in enumerate(H.blocks)}
                h[a][i][j] = one
                out.append((a, i, j, h))
    return out


def _on_word(F: FunctorData, h: dict, w):
    """The block action of a natural transformation on F(w)."""
    ring, one = F.cat.ring, F.cat.one
    off, total = _offsets(F, w)
    out = zeros(total, total, one)
    for z in range(ring.rank):
        m = len(trees(ring, z, w))
        if not m:
            continue
        B = kron(eye(m, one), h[z])
        o = off[z]
        for i, row in enumerate(B):
            out[o + i][o:o + len(row)] = row
    return out


# ---------------------------------------------------------------------------
# structure tensors
# ---------------------------------------------------------------------------

def reconstruct(F: FunctorData) -> WQHopf:
    cat = F.cat
    ring, one = cat.ring, cat.one
    D = F.D.values
    rk = ring.rank
    blocks = tuple((ring.labels[a], D[a]) for a in range(rk))

    delta_unit = {(a, b): matmul(F.c_inv[(a, b)], F.c[(a, b)])
                  for a in range(rk) for b in range(rk)}

    phi, phi_inv = {}, {}
    for a, b, c in product(range(rk), repeat=3):
        A, B, C = leaf(a), leaf(b), leaf(c)
        cR, cRi = tensorator(F, A, pair(B, C))
        cL, cLi = tensorator(F, pair(A, B), C)
        uR = matmul(cR, kron(eye(D[a], one), F.c[(b, c)]))
        uRp = matmul(kron(eye(D[a], one), F.c_inv[(b, c)]), cRi)
        uL = matmul(cL, kron(F.c[(a, b)], eye(D[c], one)))
        uLp = matmul(kron(F.c_inv[(a, b)], eye(D[c], one)), cLi)
        phi[(a, b, c)] = matmul_chain(
            uLp, functor_on_morphism(F, associator(cat, A, B, C)), uR)
        phi_inv[(a, b, c)] = matmul_chain(
            uRp, functor_on_morphism(F, associator_inv(cat, A, B, C)), uL)

    Rfam = Rinv = None
    if cat.R is not None:
        Rfam, Rinv = {}, {}
        for a in range(rk):
            for b in range(rk):
                Ps = functor_on_morphism(F, braiding(cat, leaf(a), leaf(b)))
                Pi = functor_on_morphism(F, braiding_inv(cat, leaf(a), leaf(b)))
                Rfam[(a, b)] = matmul_chain(
                    flip_matrix(D[b], D[a], one), F.c_inv[(b, a)], Ps,
                    F.c[(a, b)])
                Rinv[(a, b)] = matmul_chain(
                    F.c_inv[(a, b)], Pi, F.c[(b, a)],
                    flip_matrix(D[a], D[b], one))

    alpha, beta = {}, {}
    for a in range(rk):
        ab = ring.dual[a]
        evrow = matmul_chain(
            functor_on_morphism(F, ev(cat, a)),
            tensorator(F, leaf(ab), leaf(a))[0],
            kron(F.d[a], eye(D[a], one)))
        alpha[a] = [[evrow[0][i * D[a] + j] for j in range(D[a])]
                    for i in range(D[a])]
        colv = matmul_chain(
            kron(eye(D[a], one), inverse(F.d[a])),
            tensorator(F, leaf(a), leaf(ab))[1],
            functor_on_morphism(F, coev(cat, a)))
        beta[a] = [[colv[i * D[a] + j][0] for j in range(D[a])]
                   for i in range(D[a])]

    ribbon_v = None
    if cat.theta is not None:
        ribbon_v = {a: smul(cat.theta[a], eye(D[a], one)) for a in range(rk)}

    return WQHopf(F, blocks, delta_unit, phi, phi_inv, Rfam, Rinv,
                  alpha, beta, ribbon_v)


def coproduct(H: WQHopf, h: dict) -> dict:
    """Delta(h) per pair: conjugate the pair-word action by the tensorator."""
    F = H.functor
    rk = F.cat.ring.rank
    out = {}
    for a in range(rk):
        for b in range(rk):
            hw = _on_word(F, h, pair(leaf(a), leaf(b)))
            out[(a, b)] = matmul_chain(F.c_inv[(a, b)], hw, F.c[(a, b)])
    return out


def counit(H: WQHopf, h: dict):
    return h[0][0][0]


def antipode(H: WQHopf, h: dict) -> dict:
    F = H.functor
    ring = F.cat.ring
    out = {}
    for a in range(ring.rank):
        dt = transpose(F.d[a])
        out[a] = matmul_chain(dt, transpose(h[ring.dual[a]]), inverse(dt))
    return out


def irreducible_representations(H: WQHopf):
    return list(H.blocks)


# ---------------------------------------------------------------------------
# families: dict over label tuples -> matrix on the tensor product of blocks
# ---------------------------------------------------------------------------

def family_mul(x: dict, y: dict) -> dict:
    return {k: matmul(x[k], y[k]) for k in x}


def family_deviation(x: dict, y: dict):
    """(failing keys, worst embedded deviation) for exact-or-tol comparison."""
    bad, worst = [], 0.0
    for k in sorted(x):
        dev = max_deviation(msub(x[k], y[k]))
        if dev:
            bad.append(k)
            worst = max(worst, dev)
    return bad, worst


def element_pair(H: WQHopf, x: dict, y: dict) -> dict:
    rk = len(H.blocks)
    return {(a, b): kron(x[a], y[b]) for a in range(rk) for b in range(rk)}


def pair_flip(H: WQHopf, fam: dict) -> dict:
    """tau conjugation: the same element of H (x) H with the legs swapped."""
    one = H.functor.cat.one
    D = H.functor.D.values
    out = {}
    for a, b in fam:
        Sab = flip_matrix(D[a], D[b], one)
        Sba = flip_matrix(D[b], D[a], one)
        out[(a, b)] = matmul_chain(Sba, fam[(b, a)], Sab)
    return out


def delta_slot(H: WQHopf, fam: dict, i: int) -> dict:
    """Degree n to n+1: slot 0 is 1 (x) fam, slot n+1 is fam (x) 1, and a
    middle slot applies the coproduct to the i-th tensor leg."""
    F = H.functor
    ring, one = F.cat.ring, F.cat.one
    D = F.D.values
    n = len(next(iter(fam)))
    rk = ring.rank
    out = {}
    if i == 0:
        for key, M in fam.items():
            for b in range(rk):
                out[(b,) + key] = kron(eye(D[b], one), M)
        return out
    if i == n + 1:
        for key, M in fam.items():
            for b in range(rk):
                out[key + (b,)] = kron(M, eye(D[b], one))
        return out
    if not 1 <= i <= n:
        raise HopfError(f"slot {i} out of range for degree {n}")
    for key2 in product(range(rk), repeat=n + 1):
        x, y = key2[i - 1], key2[i]
        pre = 1
        for k in key2[:i - 1]:
            pre *= D[k]
        post = 1
        for k in key2[i + 1:]:
            post *= D[k]
        w = pair(leaf(x), leaf(y))
        T = _offsets(F, w)[1]
        M = zeros(pre * T * post, pre * T * post, one)
        ro = 0
        for z in range(rk):
            for _ in trees(ring, z, w):
                inner = fam[key2[:i - 1] + (z,) + key2[i + 1:]]
                for p in range(pre):
                    for k in range(D[z]):
                        for q in range(post):
                            row = inner[(p * D[z] + k) * post + q]
                            tr = (p * T + ro + k) * post + q
                            for p2 in range(pre):
                                for k2 in range(D[z]):
                                    for q2 in range(post):
                                        tc = (p2 * T + ro + k2) * post + q2
                                        M[tr][tc] = row[(p2 * D[z] + k2)
                                                        * post + q2]
                ro += D[z]
        cj = kron(kron(eye(pre, one), F.c[(x, y)]), eye(post, one))
        cji = kron(kron(eye(pre, one), F.c_inv[(x, y)]), eye(post, one))
        out[key2] = matmul_chain(cji, M, cj)
    return out


def eps_slot(H: WQHopf, fam: dict, i: int) -> dict:
    """Contract tensor leg i with the counit; D(1) = 1 keeps shapes intact."""
    return {key[:i - 1] + key[i:]: M
            for key, M in fam.items() if key[i - 1] == 0}


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

def _pt1(W, p, q, one):
    """Partial transpose on the first leg of a matrix acting on K^p (x) K^q."""
    out = zeros(p * q, p * q, one)
    for k in range(p):
        for l in range(p):
            for n in range(q):
                for j in range(q):
                    out[l * q + n][k * q + j] = W[k * q + n][l * q + j]
    return out


def _pt2(W, p, q, one):
    """Partial transpose on the second leg."""
    out = zeros(p * q, p * q, one)
    for k in range(p):
        for l in range(p):
            for n in range(q):
                for j in range(q):
                    out[k * q + j][l * q + n] = W[k * q + n][l * q + j]
    return out


def _sweedler_pair(H: WQHopf, h: dict, x: int, left: bool):
    """Contract the coproduct legs of h around the snake element at block x:
    sum S(h1) alpha h2 when left, sum h1 beta S(h2) otherwise.

    The antipode leg is rewritten as a partial transpose conjugated by the
    duality matrix, so the sum over Sweedler terms never has to be split.
    """
    F = H.functor
    one = F.cat.one
    ring = F.cat.ring
    ab = ring.dual[x]
    da, db = F.D[x], F.D[ab]
    dt = transpose(F.d[x])
    dti = inverse(dt)
    if left:
        W = coproduct(H, h)[(ab, x)]
        V = matmul_chain(kron(dt, eye(da, one)), _pt1(W, db, da, one),
                         kron(dti, eye(da, one)))
        mid = H.alpha[x]
    else:
        W = coproduct(H, h)[(x, ab)]
        V = matmul_chain(kron(eye(da, one), dt), _pt2(W, da, db, one),
                         kron(eye(da, one), dti))
        mid = H.beta[x]
    out = zeros(da, da, one)
    for i in range(da):
        for j in range(da):
            acc = one.rational(0)
            for m in range(da):
                for n in range(da):
                    acc = acc + V[i * da + n][m * da + j] * mid[m][n]
            out[i][j] = acc
    return out


def verify_weak_axioms(H: WQHopf, tol: float = 0.0) -> Report:
    F = H.functor
    ring, one = F.cat.ring, F.cat.one
    rk = ring.rank
    rep = Report()
    basis = matrix_units(H)
    unit = unit_element(H)
    dunit = H.delta_unit

    bad, worst = family_deviation(family_mul(H.phi_inv, H.phi),
                                  delta_slot(H, dunit, 2))
    rep.add("ff1", _ok(bad, worst, tol), worst, bad)
    bad, worst = family_deviation(family_mul(H.phi, H.phi_inv),
                                  delta_slot(H, dunit, 1))
    rep.add("ff2", _ok(bad, worst, tol), worst, bad)
    if H.R is not None:
        bad, worst = family_deviation(family_mul(H.R, H.R_inv),
                                      pair_flip(H, dunit))
        rep.add("ff3", _ok(bad, worst, tol), worst, bad)
        bad, worst = family_deviation(family_mul(H.R_inv, H.R), dunit)
        rep.add("ff4", _ok(bad, worst, tol), worst, bad)
    bad, worst = [], 0.0
    for i in (1, 2, 3):
        b, w = family_deviation(eps_slot(H, H.phi, i), dunit)
        bad += [(i,) + k for k in b]
        worst = max(worst, w)
    rep.add("ff5", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        dh = coproduct(H, h)
        lhs = family_mul(H.phi, delta_slot(H, dh, 2))
        rhs = family_mul(delta_slot(H, dh, 1), H.phi)
        b, w = family_deviation(lhs, rhs)
        bad += [(a, i, j) + k for k in b]
        worst = max(worst, w)
    rep.add("quasi-coassociativity", _ok(bad, worst, tol), worst, bad)

    # cocycle order for an associator mapping right-nested to left-nested:
    # delta_1 then delta_3 against delta_4 delta_2 delta_0
    lhs = family_mul(delta_slot(H, H.phi, 1), delta_slot(H, H.phi, 3))
    rhs = family_mul(family_mul(delta_slot(H, H.phi, 4),
                                delta_slot(H, H.phi, 2)),
                     delta_slot(H, H.phi, 0))
    bad, worst = family_deviation(lhs, rhs)
    rep.add("phi-pentagon", _ok(bad, worst, tol), worst, bad)

    if H.R is not None:
        bad, worst = [], 0.0
        for a, i, j, h in basis:
            dh = coproduct(H, h)
            lhs = family_mul(H.R, dh)
            rhs = family_mul(pair_flip(H, dh), H.R)
            b, w = family_deviation(lhs, rhs)
            bad += [(a, i, j) + k for k in b]
            worst = max(worst, w)
        rep.add("r-intertwine", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        eh = counit(H, h)
        for x in range(rk):
            lhs = smul(eh, H.alpha[x])
            rhs = _sweedler_pair(H, h, x, True)
            dev = max_deviation(msub(lhs, rhs))
            if dev:
                bad.append((a, i, j, x))
                worst = max(worst, dev)
    rep.add("antipode-alpha", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        eh = counit(H, h)
        for x in range(rk):
            lhs = smul(eh, H.beta[x])
            rhs = _sweedler_pair(H, h, x, False)
            dev = max_deviation(msub(lhs, rhs))
            if dev:
                bad.append((a, i, j, x))
                worst = max(worst, dev)
    rep.add("antipode-beta", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        dh = coproduct(H, h)
        for b in range(rk):
            lv = dh[(0, b)]
            rv = dh[(b, 0)]
            d1 = max_deviation(msub(lv, h[b]))
            d2 = max_deviation(msub(rv, h[b]))
            if d1 or d2:
                bad.append((a, i, j, b))
                worst = max(worst, d1, d2)
    rep.add("counit-laws", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        for b, k, l, g in basis:
            lhs = coproduct(H, element_mul(h, g))
            rhs = family_mul(coproduct(H, h), coproduct(H, g))
            bb, w = family_deviation(lhs, rhs)
            if bb:
                bad.append((a, i, j, b, k, l))
                worst = max(worst, w)
    rep.add("coproduct-multiplicative", _ok(bad, worst, tol), worst, bad)

    bad, worst = family_deviation(family_mul(dunit, dunit), dunit)
    rep.add("coproduct-unit-idempotent", _ok(bad, worst, tol), worst, bad)

    bad, worst = [], 0.0
    for a, i, j, h in basis:
        for b, k, l, g in basis:
            lhs = antipode(H, element_mul(h, g))
            rhs = element_mul(antipode(H, g), antipode(H, h))
            dev = element_deviation(lhs, rhs)
            if dev:
                bad.append((a, i, j, b, k, l))
                worst = max(worst, dev)
    rep.add("antipode-antimultiplicative", _ok(bad, worst, tol), worst, bad)

    if H.ribbon_v is not None:
        v = H.ribbon_v
        bad, worst = [], 0.0
        for a, i, j, h in basis:
            dev = element_deviation(element_mul(v, h), element_mul(h, v))
            if dev:
                bad.append((a, i, j))
                worst = max(worst, dev)
        rep.add("ribbon-central", _ok(bad, worst, tol), worst, bad)

        ev_dev = abs((counit(H, v) - one.rational(1)).embed())
        rep.add("ribbon-counit", ev_dev <= tol, ev_dev, ())

        dev = element_deviation(antipode(H, v), v)
        rep.add("ribbon-antipode", dev <= tol, dev, ())

        if H.R is not None:
            r21 = pair_flip(H, H.R)
            r21_inv = pair_flip(H, H.R_inv)
            q_inv = family_mul(H.R_inv, r21_inv)
            rhs = family_mul(q_inv, element_pair(H, v, v))
            bad, worst = family_deviation(coproduct(H, v), rhs)
            rep.add("ribbon-coproduct", _ok(bad, worst, tol), worst, bad)

    bad = []
    for x in range(rk):
        for name, M in (("alpha", H.alpha[x]), ("beta", H.beta[x])):
            try:
                inverse(M)
            except LinalgError:
                bad.append((name, x))
    # invertibility of alpha/beta is informational, never a failure
    rep.add("alpha-beta-invertible", True, float(len(bad)), bad)
    return rep


def _ok(bad, worst, tol):
    return not bad or worst <= tol


# ---------------------------------------------------------------------------
# category <-> Rep structure transport
# ---------------------------------------------------------------------------

def verify_structure_transport(H: WQHopf, tol: float = 0.0) -> Report:
    from .category import elementary_morphisms, rtable
    from .linalg import rank as mat_rank, nullspace, solve

    F = H.functor
    cat = F.cat
    ring, one = cat.ring, cat.one
    D = F.D.values
    rk = ring.rank
    rep = Report()
    basis = matrix_units(H)

    # (i) intertwiner bases from the fusion trees
    bad_int, bad_span, worst = [], [], 0.0
    bases = {}
    for a in range(rk):
        for b in range(rk):
            w = pair(leaf(a), leaf(b))
            dcop = {(x, i, j): coproduct(H, h)[(a, b)]
                    for x, i, j, h in basis}
            for z in range(rk):
                nz = ring.N[a][b][z]
                if not nz:
                    continue
                Ts = []
                for f in elementary_morphisms(ring, w, leaf(z), one):
                    Ts.append(matmul(functor_on_morphism(F, f), F.c[(a, b)]))
                bases[(a, b, z)] = Ts
                for it, T in enumerate(Ts):
                    for x, i, j, h in basis:
                        lhs = matmul(T, dcop[(x, i, j)])
                        rhs = matmul(h[z], T)
                        dev = max_deviation(msub(lhs, rhs))
                        if dev:
                            bad_int.append((a, b, z, it, x))
                            worst = max(worst, dev)
                # independence and spanning: solve the intertwiner system
                flat = [[T[r][cc] for r in range(D[z])
                         for cc in range(D[a] * D[b])] for T in Ts]
                if mat_rank(flat, tol) != nz:
                    bad_span.append((a, b, z, "independence"))
                rows = []
                for x, i, j, h in basis:
                    dm = dcop[(x, i, j)]
                    hz = h[z]
                    # unknown M: M dm - hz M = 0, entries row-major
                    for r in range(D[z]):
                        for cc in range(D[a] * D[b]):
                            row = []
                            for r2 in range(D[z]):
                                for c2 in range(D[a] * D[b]):
                                    val = one.rational(0)
                                    if r2 == r:
                                        val = val + dm[c2][cc]
                                    if c2 == cc:
                                        val = val - hz[r][r2]
                                    row.append(val)
                            rows.append(row)
                if len(nullspace(rows, tol)) != nz:
                    bad_span.append((a, b, z, "span"))
    rep.add("transport-intertwiner", _ok(bad_int, worst, tol), worst, bad_int)
    rep.add("transport-span", not bad_span, float(len(bad_span)), bad_span)

    # (ii) braiding scalars through the Rep-side braiding
    bad, worst = [], 0.0
    if H.R is not None:
        for a in range(rk):
            for b in range(rk):
                rep_braid = matmul(flip_matrix(D[a], D[b], one), H.R[(a, b)])
                for z in range(rk):
                    nz = ring.N[a][b][z]
                    if not nz:
                        continue
                    Ts = bases[(a, b, z)]
                    Bs = bases[(b, a, z)]
                    tbl = rtable(cat, a, b, z)
                    flat = transpose([[T[r][cc] for r in range(D[z])
                                       for cc in range(D[a] * D[b])]
                                      for T in Ts])
                    for nu, B in enumerate(Bs):
                        comp = matmul(B, rep_braid)
                        target = [[comp[r][cc]]
                                  for r in range(D[z])
                                  for cc in range(D[a] * D[b])]
                        coeffs = solve(flat, target, tol)
                        if coeffs is None:
                            bad.append((a, b, z, nu, "unsolvable"))
                            continue
                        for mu in range(nz):
                            dev = max_deviation(
                                msub([[coeffs[mu][0]]], [[tbl[mu][nu]]]))
                            if dev:
                                bad.append((a, b, z, mu, nu))
                                worst = max(worst, dev)
        rep.add("transport-braiding", _ok(bad, worst, tol), worst, bad)

    # (iii) Rep-side rigidity: ev/coev intertwine and the bent snake closes
    bad, worst = [], 0.0
    for a in range(rk):
        ab = ring.dual[a]
        da = D[a]
        evrow = matmul_chain(
            functor_on_morphism(F, ev(cat, a)),
            tensorator(F, leaf(ab), leaf(a))[0],
            kron(F.d[a], eye(da, one)))
        colv = matmul_chain(
            kron(eye(da, one), inverse(F.d[a])),
            tensorator(F, leaf(a), leaf(ab))[1],
            functor_on_morphism(F, coev(cat, a)))
        dinv = inverse(F.d[a])
        for x, i, j, h in basis:
            # ev o (rho* (x) rho)(Delta h): rho*(g) = dinv . g_dual . d
            W = coproduct(H, h)[(ab, a)]
            act = matmul_chain(kron(dinv, eye(da, one)), W,
                               kron(F.d[a], eye(da, one)))
            lhs = matmul(evrow, act)
            rhs = smul(counit(H, h), evrow)
            dev = max_deviation(msub(lhs, rhs))
            if dev:
                bad.append((a, x, i, j))
                worst = max(worst, dev)
        # the dual rep lives on K^{D(a)} through d, so the middle leg of
        # phi_inv (an F(dual a) block leg) is conjugated accordingly
        assoc = matmul_chain(
            kron(kron(eye(da, one), dinv), eye(da, one)),
            H.phi_inv[(a, ab, a)],
            kron(kron(eye(da, one), F.d[a]), eye(da, one)))
        snake = matmul_chain(kron(eye(da, one), evrow), assoc,
                             kron(colv, eye(da, one)))
        dev = max_deviation(msub(snake, eye(da, one)))
        if dev:
            bad.append((a, "snake"))
            worst = max(worst, dev)
    rep.add("transport-rigidity", _ok(bad, worst, tol), worst, bad)

    # (iv) the algebra-side evaluation is the plain pairing twisted by alpha
    bad, worst = [], 0.0
    for a in range(rk):
        ab = ring.dual[a]
        da = D[a]
        evrow = matmul_chain(
            functor_on_morphism(F, ev(cat, a)),
            tensorator(F, leaf(ab), leaf(a))[0],
            kron(F.d[a], eye(da, one)))
        plain = [[one.rational(1) if i == j else one.rational(0)
                  for i in range(da) for j in range(da)]]
        rhs = matmul(plain, kron(eye(da, one), H.alpha[a]))
        dev = max_deviation(msub(evrow, rhs))
        if dev:
            bad.append((a,))
            worst = max(worst, dev)
    rep.add("transport-alpha-pairing", _ok(bad, worst, tol), worst, bad)
    return rep
