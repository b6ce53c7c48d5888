"""Compiled search kernel with the same contract as `_engine_py`.

Everything the inner loop touches lives in one static C struct: the gluing
table, the three signed class structures, and the boundary cycles of the
partial vertex links.  Each structure journals its writes, so undoing a
gluing replays a few integer stores backwards.

Boundary cycles drop the skip-list towers of the pure kernel: every link
edge carries a cycle label, `same_cycle` is one comparison, and the
surgery after a gluing rewires the cycle rings directly.  Rewiring chases
each dangling neighbour through the glued pair until it lands on a
surviving edge, which covers every degeneracy (self-cycles, adjacent
edges, vanishing two-edge cycles) without case analysis; the touched
cycles are then walked once to refresh labels.  The walks cost O(boundary)
instead of O(log boundary), a win at the sizes this search meets since a
cycle never exceeds 12n edges.

Sizes are capped at 16 tetrahedra so all state fits the static arrays;
the pure kernel has no cap and `search.load_backend` picks it when this
extension is absent.
"""

from .perms import (
    EDGE_PAIRS,
    FACE_EDGES,
    FACE_OPPOSITE,
    FACE_VERTICES,
    GLUING_PERMS,
    LINK_ALONG,
    LINK_EDGE_POS,
    PERM4_IMAGES,
    PERM4_INV,
    PERM4_MUL,
    PERM4_SIGN,
)

BACKEND_NAME = "fast"


cdef enum:
    NMAX = 16
    PAIRMAX = 2 * NMAX
    SLOTMAX = 4 * NMAX
    EDGEMAX = 6 * NMAX
    CORNMAX = 4 * NMAX
    LEMAX = 12 * NMAX
    ENDMAX = 2 * LEMAX
    # ring journal bound: per link gluing <= 4 neighbour writes, one label
    # per boundary edge (<= LEMAX), and 3 scalar writes; at most 6n link
    # gluings are live at once, so 6 * NMAX * (LEMAX + 7) < JCAP
    JCAP = 1 << 16

# shared convention tables, copied from `perms` at import
cdef int T_MUL[24][24]
cdef int T_INV[24]
cdef int T_SIGN[24]
cdef int T_IMG[24][4]
cdef int T_GLUE[4][4][6]
cdef int T_FV[4][3]
cdef int T_FE[4][3]
cdef int T_EP[6][2]
cdef int T_EI[4][4]
cdef int T_ALONG[4][4]
cdef int T_LEPOS[4][4]
cdef int T_FOPP[4]

cdef char* DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _load_tables():
    for p in range(24):
        T_INV[p] = PERM4_INV[p]
        T_SIGN[p] = PERM4_SIGN[p]
        for q in range(24):
            T_MUL[p][q] = PERM4_MUL[p][q]
        for v in range(4):
            T_IMG[p][v] = PERM4_IMAGES[p][v]
    for f1 in range(4):
        T_FOPP[f1] = FACE_OPPOSITE[f1]
        for f2 in range(4):
            for k in range(6):
                T_GLUE[f1][f2][k] = GLUING_PERMS[f1][f2][k]
        for k in range(3):
            T_FV[f1][k] = FACE_VERTICES[f1][k]
            T_FE[f1][k] = FACE_EDGES[f1][k]
    for e in range(6):
        T_EP[e][0], T_EP[e][1] = EDGE_PAIRS[e]
        T_EI[EDGE_PAIRS[e][0]][EDGE_PAIRS[e][1]] = e
    for v in range(4):
        for f in range(4):
            T_ALONG[v][f] = LINK_ALONG[v][f]
            T_LEPOS[v][f] = LINK_EDGE_POS[v].get(f, -1)


_load_tables()


cdef struct State:
    int n, total, level, mode
    int pairs_lo[PAIRMAX]
    int pairs_hi[PAIRMAX]
    int br[PAIRMAX][6]          # Perm4 branch choices per pair
    int adj[SLOTMAX]
    int gl[SLOTMAX]
    int chosen[PAIRMAX]
    long nodes, pr_orient, pr_edge, pr_genus, leaves
    # signed classes of the 6n tetrahedron edges
    int ed_par[EDGEMAX]
    int ed_sgn[EDGEMAX]
    int ed_rnk[EDGEMAX]
    int ed_jc[EDGEMAX]
    int ed_jb[EDGEMAX]
    int ed_top, ed_comp
    # signed classes of the 4n corner triangles
    int tr_par[CORNMAX]
    int tr_sgn[CORNMAX]
    int tr_rnk[CORNMAX]
    int tr_jc[CORNMAX]
    int tr_jb[CORNMAX]
    int tr_top, tr_comp
    # tetrahedron signs, orientable mode only
    int ts_par[NMAX]
    int ts_sgn[NMAX]
    int ts_rnk[NMAX]
    int ts_jc[NMAX]
    int ts_jb[NMAX]
    int ts_top, ts_comp
    # boundary cycle rings: nb matches link edge ends (2e, 2e+1) in pairs
    int nb[ENDMAX]
    int lab[LEMAX]
    int cyc, nextlab
    unsigned char rj_kind[JCAP]
    int rj_idx[JCAP]
    int rj_old[JCAP]
    int rj_top
    # per-depth journal marks for undo
    int mk_ed[PAIRMAX]
    int mk_tr[PAIRMAX]
    int mk_ts[PAIRMAX]
    int mk_rj[PAIRMAX]
    # canonical serialization scratch
    int seq_best[2 * SLOTMAX]
    int seq_cur[2 * SLOTMAX]
    int c_new_of_old[NMAX]
    int c_old_of_new[NMAX]
    int c_rho[NMAX]

cdef State st


# -- signed union-find on flat arrays -----------------------------------------

cdef inline int dsu_find(int* par, int* sgn, int x, int* sign_out) noexcept:
    cdef int s = 1
    while par[x] != x:
        s *= sgn[x]
        x = par[x]
    sign_out[0] = s
    return x


cdef inline int dsu_union(int* par, int* sgn, int* rnk, int* jc, int* jb,
                          int* top, int* comp, int x, int y, int rel) noexcept:
    """0 merged, 1 redundant, 2 conflict; conflicts mutate nothing."""
    cdef int sx, sy, rx, ry, link, tmp
    rx = dsu_find(par, sgn, x, &sx)
    ry = dsu_find(par, sgn, y, &sy)
    if rx == ry:
        return 1 if sx * sy == rel else 2
    link = sx * rel * sy
    if rnk[rx] < rnk[ry]:
        tmp = rx; rx = ry; ry = tmp
    jb[top[0]] = 0
    if rnk[rx] == rnk[ry]:
        rnk[rx] += 1
        jb[top[0]] = 1
    jc[top[0]] = ry
    top[0] += 1
    par[ry] = rx
    sgn[ry] = link
    comp[0] -= 1
    return 0


cdef inline void dsu_rollback(int* par, int* sgn, int* rnk, int* jc, int* jb,
                              int* top, int* comp, int mark) noexcept:
    cdef int child
    while top[0] > mark:
        top[0] -= 1
        child = jc[top[0]]
        if jb[top[0]]:
            rnk[par[child]] -= 1
        par[child] = child
        sgn[child] = 1
        comp[0] += 1


# -- boundary cycle rings ------------------------------------------------------

cdef inline void rj_nb(int end, int val) noexcept:
    st.rj_kind[st.rj_top] = 0
    st.rj_idx[st.rj_top] = end
    st.rj_old[st.rj_top] = st.nb[end]
    st.rj_top += 1
    st.nb[end] = val


cdef inline void rj_lab(int e, int val) noexcept:
    st.rj_kind[st.rj_top] = 1
    st.rj_idx[st.rj_top] = e
    st.rj_old[st.rj_top] = st.lab[e]
    st.rj_top += 1
    st.lab[e] = val


cdef inline void rj_cyc(int val) noexcept:
    st.rj_kind[st.rj_top] = 2
    st.rj_old[st.rj_top] = st.cyc
    st.rj_top += 1
    st.cyc = val


cdef inline void rj_nextlab(int val) noexcept:
    st.rj_kind[st.rj_top] = 3
    st.rj_old[st.rj_top] = st.nextlab
    st.rj_top += 1
    st.nextlab = val


cdef inline void ring_rollback(int mark) noexcept:
    cdef int kind
    while st.rj_top > mark:
        st.rj_top -= 1
        kind = st.rj_kind[st.rj_top]
        if kind == 0:
            st.nb[st.rj_idx[st.rj_top]] = st.rj_old[st.rj_top]
        elif kind == 1:
            st.lab[st.rj_idx[st.rj_top]] = st.rj_old[st.rj_top]
        elif kind == 2:
            st.cyc = st.rj_old[st.rj_top]
        else:
            st.nextlab = st.rj_old[st.rj_top]


cdef inline int pi_end(int end, int x, int y, int y0) noexcept:
    """The end matched with `end` by gluing x to y (side 0 of x onto y0)."""
    cdef int s = end & 1
    if (end >> 1) == x:
        return 2 * y + (y0 if s == 0 else 1 - y0)
    return 2 * x + (0 if s == y0 else 1)


cdef inline void ring_excise(int x, int y, int aligned) noexcept:
    """Remove link edges x and y, reconnect their rings crosswise, and
    relabel the touched cycles.  The caller has already vetoed the
    genus-raising case, so any outcome here is legal."""
    cdef int y0 = 0 if aligned else 1
    cdef int cand[4]
    cdef int i, a, g, e, label, cur, bond, touched, remaining, floor_
    cand[0] = st.nb[2 * x]
    cand[1] = st.nb[2 * x + 1]
    cand[2] = st.nb[2 * y]
    cand[3] = st.nb[2 * y + 1]
    touched = 1 if st.lab[x] == st.lab[y] else 2
    floor_ = st.nextlab  # live labels are all below; fresh ones from here
    remaining = 0
    for i in range(4):
        a = cand[i]
        e = a >> 1
        if e == x or e == y:
            continue
        g = st.nb[a]
        if (g >> 1) == x or (g >> 1) == y:
            # chase the dangling neighbour through the glued pair
            while (g >> 1) == x or (g >> 1) == y:
                g = st.nb[pi_end(g, x, y, y0)]
            rj_nb(a, g)
            rj_nb(g, a)
    for i in range(4):
        a = cand[i]
        e = a >> 1
        if e == x or e == y or st.lab[e] >= floor_:
            continue
        label = st.nextlab
        rj_nextlab(label + 1)
        cur = a
        while True:
            bond = st.nb[cur]
            rj_lab(bond >> 1, label)
            cur = bond ^ 1  # cross to the entered edge's other end
            if cur == a:
                break
        remaining += 1
    rj_cyc(st.cyc + remaining - touched)


# -- one face gluing with all checks -------------------------------------------

cdef inline int link_glue(int t1, int v1, int f1, int t2, int v2, int f2,
                          int dirsign) noexcept:
    """0 ok, 2 nonorientable link, 3 link would gain genus."""
    cdef int rel = -T_ALONG[v1][f1] * T_ALONG[v2][f2] * dirsign
    cdef int out = dsu_union(st.tr_par, st.tr_sgn, st.tr_rnk, st.tr_jc,
                             st.tr_jb, &st.tr_top, &st.tr_comp,
                             4 * t1 + v1, 4 * t2 + v2, rel)
    cdef int x, y
    if out == 2:
        return 2
    if st.level >= 2:
        x = 12 * t1 + 3 * v1 + T_LEPOS[v1][f1]
        y = 12 * t2 + 3 * v2 + T_LEPOS[v2][f2]
        if st.lab[x] != st.lab[y] and out == 1:
            # distinct boundary cycles of one piece: genus would go up
            return 3
        ring_excise(x, y, 1 if dirsign == 1 else 0)
    return 0


cdef inline int do_glue(int k, int pi) noexcept:
    """Apply choice pi at pair k; 1 applied, 0 pruned with counters bumped."""
    cdef int s1 = st.pairs_lo[k], s2 = st.pairs_hi[k]
    cdef int t1 = s1 >> 2, f1 = s1 & 3, t2 = s2 >> 2, f2 = s2 & 3
    cdef int m_ed = st.ed_top, m_tr = st.tr_top, m_ts = st.ts_top
    cdef int m_rj = st.rj_top
    cdef int i, j, e, a, b, ia, ib, tmp, rel, out, v, w, va, vb, dirsign
    if st.mode == 1:
        if dsu_union(st.ts_par, st.ts_sgn, st.ts_rnk, st.ts_jc, st.ts_jb,
                     &st.ts_top, &st.ts_comp, t1, t2, -T_SIGN[pi]) == 2:
            st.pr_orient += 1
            return 0
    if st.level >= 1:
        for i in range(3):
            e = T_FE[f1][i]
            a = T_EP[e][0]
            b = T_EP[e][1]
            ia = T_IMG[pi][a]
            ib = T_IMG[pi][b]
            rel = 1 if ia < ib else -1
            if ia > ib:
                tmp = ia; ia = ib; ib = tmp
            out = dsu_union(st.ed_par, st.ed_sgn, st.ed_rnk, st.ed_jc,
                            st.ed_jb, &st.ed_top, &st.ed_comp,
                            6 * t1 + e, 6 * t2 + T_EI[ia][ib], rel)
            if out == 2:
                dsu_rollback(st.ed_par, st.ed_sgn, st.ed_rnk, st.ed_jc,
                             st.ed_jb, &st.ed_top, &st.ed_comp, m_ed)
                dsu_rollback(st.ts_par, st.ts_sgn, st.ts_rnk, st.ts_jc,
                             st.ts_jb, &st.ts_top, &st.ts_comp, m_ts)
                st.pr_edge += 1
                return 0
        for i in range(3):
            v = T_FV[f1][i]
            w = T_IMG[pi][v]
            va = -1
            vb = -1
            for j in range(3):
                if T_FV[f1][j] == v:
                    continue
                if va < 0:
                    va = T_FV[f1][j]
                else:
                    vb = T_FV[f1][j]
            dirsign = 1 if T_IMG[pi][va] < T_IMG[pi][vb] else -1
            out = link_glue(t1, v, f1, t2, w, f2, dirsign)
            if out != 0:
                dsu_rollback(st.ed_par, st.ed_sgn, st.ed_rnk, st.ed_jc,
                             st.ed_jb, &st.ed_top, &st.ed_comp, m_ed)
                dsu_rollback(st.tr_par, st.tr_sgn, st.tr_rnk, st.tr_jc,
                             st.tr_jb, &st.tr_top, &st.tr_comp, m_tr)
                dsu_rollback(st.ts_par, st.ts_sgn, st.ts_rnk, st.ts_jc,
                             st.ts_jb, &st.ts_top, &st.ts_comp, m_ts)
                ring_rollback(m_rj)
                if out == 2:
                    st.pr_orient += 1
                else:
                    st.pr_genus += 1
                return 0
    st.adj[s1] = s2
    st.adj[s2] = s1
    st.gl[s1] = pi
    st.gl[s2] = T_INV[pi]
    st.chosen[k] = pi
    st.mk_ed[k] = m_ed
    st.mk_tr[k] = m_tr
    st.mk_ts[k] = m_ts
    st.mk_rj[k] = m_rj
    return 1


cdef inline void undo_glue(int k) noexcept:
    cdef int s1 = st.pairs_lo[k], s2 = st.pairs_hi[k]
    st.adj[s1] = -1
    st.adj[s2] = -1
    st.gl[s1] = -1
    st.gl[s2] = -1
    dsu_rollback(st.ed_par, st.ed_sgn, st.ed_rnk, st.ed_jc, st.ed_jb,
                 &st.ed_top, &st.ed_comp, st.mk_ed[k])
    dsu_rollback(st.tr_par, st.tr_sgn, st.tr_rnk, st.tr_jc, st.tr_jb,
                 &st.tr_top, &st.tr_comp, st.mk_tr[k])
    dsu_rollback(st.ts_par, st.ts_sgn, st.ts_rnk, st.ts_jc, st.ts_jb,
                 &st.ts_top, &st.ts_comp, st.mk_ts[k])
    ring_rollback(st.mk_rj[k])


# -- leaf classification --------------------------------------------------------

cdef bint c_orientable() noexcept:
    # complete connected gluing: odd permutation parity keeps the sign
    cdef int sign[NMAX]
    cdef int stack[NMAX]
    cdef int top, t, f, s, u, want, i
    for i in range(st.n):
        sign[i] = 0
    sign[0] = 1
    stack[0] = 0
    top = 1
    while top:
        top -= 1
        t = stack[top]
        for f in range(4):
            s = 4 * t + f
            u = st.adj[s] >> 2
            want = sign[t] * -T_SIGN[st.gl[s]]
            if sign[u] == 0:
                sign[u] = want
                stack[top] = u
                top += 1
            elif sign[u] != want:
                return False
    return True


cdef void c_canonical() noexcept:
    """Fill seq_best with the least relabelled serialization; the logic
    matches `core.canonical_sequence` entry for entry."""
    cdef int best_set = 0
    cdef int start, rho0, found, ns, nt, nf, ot, r, of, s, d, dt, a, b, q, i
    cdef int cmp_state  # 0 still tied with best, 1 strictly better
    cdef bint worse
    for start in range(st.n):
        for rho0 in range(24):
            for i in range(st.n):
                st.c_new_of_old[i] = -1
            st.c_new_of_old[start] = 0
            st.c_old_of_new[0] = start
            st.c_rho[start] = rho0
            found = 1
            cmp_state = 0 if best_set else 1
            worse = False
            for ns in range(4 * st.n):
                nt = ns >> 2
                nf = ns & 3
                ot = st.c_old_of_new[nt]
                r = st.c_rho[ot]
                of = T_FOPP[T_IMG[T_INV[r]][T_FOPP[nf]]]
                s = 4 * ot + of
                d = st.adj[s]
                dt = d >> 2
                if st.c_new_of_old[dt] == -1:
                    st.c_new_of_old[dt] = found
                    st.c_old_of_new[found] = dt
                    st.c_rho[dt] = T_MUL[r][T_INV[st.gl[s]]]
                    found += 1
                q = T_MUL[T_MUL[st.c_rho[dt]][st.gl[s]]][T_INV[r]]
                a = st.c_new_of_old[dt]
                b = q
                i = 2 * ns
                if cmp_state == 0:
                    if a > st.seq_best[i] or (a == st.seq_best[i] and b > st.seq_best[i + 1]):
                        worse = True
                        break
                    if a < st.seq_best[i] or (a == st.seq_best[i] and b < st.seq_best[i + 1]):
                        cmp_state = 1
                st.seq_cur[i] = a
                st.seq_cur[i + 1] = b
            if worse:
                continue
            if cmp_state == 1:
                for i in range(8 * st.n):
                    st.seq_best[i] = st.seq_cur[i]
                best_set = 1


cdef object c_signature():
    cdef char buf[8 + 2 * SLOTMAX]
    cdef int k = 0, i
    c_canonical()
    if st.n >= 10:
        buf[k] = 48 + st.n // 10
        k += 1
    buf[k] = 48 + st.n % 10
    k += 1
    buf[k] = 59  # ';'
    k += 1
    for i in range(8 * st.n):
        buf[k] = DIGITS[st.seq_best[i]]
        k += 1
    return buf[:k].decode("ascii")


cdef bint c_leaf_manifold() noexcept:
    """From-scratch manifold test of the complete table on fresh arrays.

    Rebuilds the edge and corner-triangle classes of the whole gluing in
    local scratch (no incremental state is consulted): a sign conflict
    means a reversed edge or a nonorientable link, and with closed
    orientable links `chi = pieces - edges + 2n - n` pins every link to a
    sphere exactly when pieces == edges - n."""
    cdef int e_par[EDGEMAX]
    cdef int e_sgn[EDGEMAX]
    cdef int e_rnk[EDGEMAX]
    cdef int e_jc[EDGEMAX]
    cdef int e_jb[EDGEMAX]
    cdef int e_top = 0, e_comp = 6 * st.n
    cdef int t_par[CORNMAX]
    cdef int t_sgn[CORNMAX]
    cdef int t_rnk[CORNMAX]
    cdef int t_jc[CORNMAX]
    cdef int t_jb[CORNMAX]
    cdef int t_top = 0, t_comp = 4 * st.n
    cdef int i, j, k, s, d, pi, t1, f1, t2, f2, e, a, b, ia, ib, tmp, rel
    cdef int v, w, va, vb, dirsign
    for i in range(6 * st.n):
        e_par[i] = i
        e_sgn[i] = 1
        e_rnk[i] = 0
    for i in range(4 * st.n):
        t_par[i] = i
        t_sgn[i] = 1
        t_rnk[i] = 0
    for s in range(4 * st.n):
        d = st.adj[s]
        if d < s:
            continue
        pi = st.gl[s]
        t1 = s >> 2
        f1 = s & 3
        t2 = d >> 2
        f2 = d & 3
        for i in range(3):
            e = T_FE[f1][i]
            a = T_EP[e][0]
            b = T_EP[e][1]
            ia = T_IMG[pi][a]
            ib = T_IMG[pi][b]
            rel = 1 if ia < ib else -1
            if ia > ib:
                tmp = ia; ia = ib; ib = tmp
            if dsu_union(e_par, e_sgn, e_rnk, e_jc, e_jb, &e_top, &e_comp,
                         6 * t1 + e, 6 * t2 + T_EI[ia][ib], rel) == 2:
                return False
        for i in range(3):
            v = T_FV[f1][i]
            w = T_IMG[pi][v]
            va = -1
            vb = -1
            for j in range(3):
                if T_FV[f1][j] == v:
                    continue
                if va < 0:
                    va = T_FV[f1][j]
                else:
                    vb = T_FV[f1][j]
            dirsign = 1 if T_IMG[pi][va] < T_IMG[pi][vb] else -1
            rel = -T_ALONG[v][f1] * T_ALONG[w][f2] * dirsign
            if dsu_union(t_par, t_sgn, t_rnk, t_jc, t_jb, &t_top, &t_comp,
                         4 * t1 + v, 4 * t2 + w, rel) == 2:
                return False
    return t_comp == e_comp - st.n


cdef int leaf_hit(object orient_sigs, object nonor_sigs) except -1:
    cdef bint orient
    st.leaves += 1
    if st.level == 0:
        if not c_leaf_manifold():
            return 0
    elif st.level == 1:
        # all links are spheres iff chi of the complex vanishes
        if st.tr_comp != st.ed_comp - st.n:
            return 0
    if st.mode == 1:
        orient = True
    else:
        orient = c_orientable()
        if st.mode == 2 and orient:
            return 0
    sig = c_signature()
    if orient:
        orient_sigs.add(sig)
    else:
        nonor_sigs.add(sig)
    return 0


cdef int dfs(int k, int cap, object orient_sigs, object nonor_sigs,
             object frontier) except -1:
    cdef int j, pi
    if k == st.total:
        leaf_hit(orient_sigs, nonor_sigs)
        return 0
    if frontier is not None and k == cap:
        frontier.append(tuple([st.chosen[i] for i in range(k)]))
        return 0
    for j in range(6):
        pi = st.br[k][j]
        st.nodes += 1
        if do_glue(k, pi):
            dfs(k + 1, cap, orient_sigs, nonor_sigs, frontier)
            undo_glue(k)
    return 0


def search_pairing(n, mode, level, seed, pairing, prefix=(), depth_cap=None):
    """Search one pairing's gluing tree below an optional replayed prefix.

    Contract and counters match `_engine_py.search_pairing`; `seed` only
    shapes the pure kernel's skip-list towers and is accepted unused.
    """
    cdef int i, j, k, s, p, pi, t, v, base, cap, total
    if not 1 <= n <= NMAX:
        raise ValueError(f"compiled kernel supports 1 <= n <= {NMAX}")
    if level not in (0, 1, 2):
        raise ValueError("level must be 0, 1 or 2")
    if mode == "all":
        st.mode = 0
    elif mode == "orientable":
        st.mode = 1
    elif mode == "nonorientable":
        st.mode = 2
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if len(pairing) != 4 * n:
        raise ValueError("pairing length must be 4n")
    for s in range(4 * n):
        p = pairing[s]
        if not 0 <= p < 4 * n or p == s or pairing[p] != s:
            raise ValueError("pairing is not a fixed-point-free involution")

    st.n = n
    st.level = level
    total = 0
    for s in range(4 * n):
        p = pairing[s]
        if s < p:
            st.pairs_lo[total] = s
            st.pairs_hi[total] = p
            for j in range(6):
                st.br[total][j] = T_GLUE[s & 3][p & 3][j]
            total += 1
    st.total = total

    for s in range(4 * n):
        st.adj[s] = -1
        st.gl[s] = -1
    for i in range(6 * n):
        st.ed_par[i] = i
        st.ed_sgn[i] = 1
        st.ed_rnk[i] = 0
    st.ed_top = 0
    st.ed_comp = 6 * n
    for i in range(4 * n):
        st.tr_par[i] = i
        st.tr_sgn[i] = 1
        st.tr_rnk[i] = 0
    st.tr_top = 0
    st.tr_comp = 4 * n
    for i in range(n):
        st.ts_par[i] = i
        st.ts_sgn[i] = 1
        st.ts_rnk[i] = 0
    st.ts_top = 0
    st.ts_comp = n
    st.rj_top = 0
    if level >= 2:
        for t in range(n):
            for v in range(4):
                base = 12 * t + 3 * v
                # corner traversal: along e0, along e2, against e1
                st.nb[2 * base] = 2 * (base + 1)
                st.nb[2 * (base + 1)] = 2 * base
                st.nb[2 * base + 1] = 2 * (base + 2)
                st.nb[2 * (base + 2)] = 2 * base + 1
                st.nb[2 * (base + 1) + 1] = 2 * (base + 2) + 1
                st.nb[2 * (base + 2) + 1] = 2 * (base + 1) + 1
                st.lab[base] = 4 * t + v
                st.lab[base + 1] = 4 * t + v
                st.lab[base + 2] = 4 * t + v
        st.cyc = 4 * n
        st.nextlab = 4 * n
    st.nodes = 0
    st.pr_orient = 0
    st.pr_edge = 0
    st.pr_genus = 0
    st.leaves = 0

    orient_sigs = set()
    nonor_sigs = set()
    frontier = [] if depth_cap is not None else None
    cap = depth_cap if depth_cap is not None else -1

    if len(prefix) > total:
        raise ValueError("corrupt job: prefix longer than the pairing")
    for k in range(len(prefix)):
        pi = prefix[k]
        for j in range(6):
            if st.br[k][j] == pi:
                break
        else:
            raise ValueError(f"corrupt job: pair {k} permutation {pi} invalid")
        if not do_glue(k, pi):
            raise ValueError(f"corrupt job: prefix fails its own checks at pair {k}")
    dfs(len(prefix), cap, orient_sigs, nonor_sigs, frontier)

    return {
        "nodes": st.nodes,
        "prune_orient": st.pr_orient,
        "prune_edge": st.pr_edge,
        "prune_genus": st.pr_genus,
        "leaves": st.leaves,
        "boundary_peak": 12 * n,
        "orient_sigs": sorted(orient_sigs),
        "nonor_sigs": sorted(nonor_sigs),
        "frontier": frontier,
    }
