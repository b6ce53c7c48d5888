"""Face pairings and their canonical representatives.

A pairing on n tetrahedra is a perfect matching on the 4n face slots,
stored as a tuple `fp` with `fp[s]` the partner slot of s (never s
itself).  Relabelling the tetrahedra and permuting the four slots inside
each tetrahedron act on pairings; the canonical representative of a class
is the pairing whose partner sequence (fp[0], fp[1], ...) is
lexicographically least over that action.

Enumeration extends the matching one slot at a time, always pairing the
lowest unpaired slot.  In a canonical pairing new tetrahedra appear in
increasing order and a partner entering a tetrahedron takes its lowest
unpaired slot, so only such extensions are generated; completed matchings
are then filtered down to canonical connected representatives.
"""

from __future__ import annotations

from typing import Iterator

Pairing = tuple[int, ...]


def pairs_of(fp: Pairing) -> list[tuple[int, int]]:
    """The matching as (s, fp[s]) pairs with s < fp[s]."""
    return [(s, p) for s, p in enumerate(fp) if s < p]


def graph_of(fp: Pairing) -> tuple[tuple[int, int], ...]:
    """Multigraph edge list on tetrahedra, each pair once, loops allowed."""
    edges = sorted(tuple(sorted((s // 4, p // 4))) for s, p in pairs_of(fp))
    return tuple(edges)


def graph_summary(fp: Pairing) -> str:
    """Loop and multi-edge counts, e.g. `loops 0=1 ; edges 1-2=3`."""
    loops: dict[int, int] = {}
    multi: dict[tuple[int, int], int] = {}
    for u, v in graph_of(fp):
        if u == v:
            loops[u] = loops.get(u, 0) + 1
        else:
            multi[(u, v)] = multi.get((u, v), 0) + 1
    ltxt = " ".join(f"{t}={k}" for t, k in sorted(loops.items())) or "none"
    etxt = " ".join(f"{u}-{v}={k}" for (u, v), k in sorted(multi.items())) or "none"
    return f"loops {ltxt} ; edges {etxt}"


def is_connected(fp: Pairing) -> bool:
    n = len(fp) // 4
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph_of(fp):
        parent[find(u)] = find(v)
    return sum(1 for t in range(n) if find(t) == t) == 1


def canonical_form(fp: Pairing) -> Pairing:
    """Lexicographically least relabelling of fp.

    Tetrahedron indices and slot labels are assigned lazily while scanning
    output positions in order: a partner in a fresh tetrahedron forces the
    next index, an unlabelled partner slot forces the lowest free label.
    Only the choice of which old slot occupies the position being scanned
    can branch, and branches that cannot stay minimal are cut against the
    best complete sequence found so far.
    """
    fp = tuple(fp)
    n = len(fp) // 4
    total = 4 * n
    best: list[int] | None = None

    # tetmap: old tet -> new index; inv: new index -> old tet
    # labels: old slot -> new label; lab_inv: (old tet, label) -> old slot
    def scan(q: int, seq: list[int], tight: bool, tetmap: dict, inv: list,
             labels: dict, lab_inv: dict) -> None:
        nonlocal best
        if q == total:
            if best is None or seq < best:
                best = list(seq)
            return
        u, g = divmod(q, 4)
        if u == len(inv):
            # only reachable on disconnected input: open the next component
            for tau in range(n):
                if tau not in tetmap:
                    tm = dict(tetmap)
                    tm[tau] = u
                    scan(q, seq, tight, tm, inv + [tau], labels, lab_inv)
            return
        tau = inv[u]
        forced = lab_inv.get((tau, g))
        if forced is not None:
            options = [forced]
        else:
            options = [4 * tau + f for f in range(4) if 4 * tau + f not in labels]

        staged = []
        cheapest = None
        for s_old in options:
            tm, iv, lb, li = tetmap, inv, dict(labels), dict(lab_inv)
            if s_old not in lb:
                lb[s_old] = g
                li[(tau, g)] = s_old
            p_old = fp[s_old]
            pt, pf = divmod(p_old, 4)
            if pt not in tm:
                tm = dict(tm)
                iv = iv + [pt]
                tm[pt] = len(inv)
            plab = lb.get(p_old)
            if plab is None:
                plab = next(k for k in range(4) if (pt, k) not in li)
                lb[p_old] = plab
                li[(pt, plab)] = p_old
            value = 4 * tm[pt] + plab
            if cheapest is None or value < cheapest:
                cheapest = value
                staged = []
            if value == cheapest:
                staged.append((value, tm, iv, lb, li))

        for value, tm, iv, lb, li in staged:
            branch_tight = tight
            if best is not None and branch_tight:
                if value > best[q]:
                    continue
                if value < best[q]:
                    branch_tight = False
            seq.append(value)
            scan(q + 1, seq, branch_tight, tm, iv, lb, li)
            seq.pop()

    if n == 0:
        return ()
    for start in range(n):
        scan(0, [], True, {start: 0}, [start], {}, {})
    assert best is not None
    return tuple(best)


def is_canonical(fp: Pairing) -> bool:
    """True when no relabelling yields a smaller partner sequence.

    Same lazy scan as canonical_form, but compared against fp itself:
    a branch exceeding fp's prefix is dropped, one dipping below proves
    fp non-canonical and aborts the whole search.  Equality branches are
    automorphisms and run to completion without effect.
    """
    fp = tuple(fp)
    n = len(fp) // 4
    total = 4 * n
    tetmap = [-1] * n      # old tet -> new index
    inv: list[int] = []    # new index -> old tet
    labels = [-1] * total  # old slot -> label
    lab_inv = [-1] * total # 4 * old tet + label -> old slot

    def scan(q: int) -> bool:
        """True if some completion of the current prefix beats fp."""
        if q == total:
            return False
        u, g = divmod(q, 4)
        if u == len(inv):
            for tau in range(n):
                if tetmap[tau] == -1:
                    tetmap[tau] = u
                    inv.append(tau)
                    beaten = scan(q)
                    tetmap[tau] = -1
                    inv.pop()
                    if beaten:
                        return True
            return False
        tau = inv[u]
        forced = lab_inv[4 * tau + g]
        options = ([forced] if forced != -1 else
                   [4 * tau + f for f in range(4) if labels[4 * tau + f] == -1])
        for s_old in options:
            undo_label = labels[s_old] == -1
            if undo_label:
                labels[s_old] = g
                lab_inv[4 * tau + g] = s_old
            p_old = fp[s_old]
            pt, pf = divmod(p_old, 4)
            undo_tet = tetmap[pt] == -1
            if undo_tet:
                tetmap[pt] = len(inv)
                inv.append(pt)
            plab = labels[p_old]
            undo_plab = plab == -1
            if undo_plab:
                plab = next(k for k in range(4) if lab_inv[4 * pt + k] == -1)
                labels[p_old] = plab
                lab_inv[4 * pt + plab] = p_old
            value = 4 * tetmap[pt] + plab
            beaten = value < fp[q] or (value == fp[q] and scan(q + 1))
            if undo_plab:
                labels[p_old] = -1
                lab_inv[4 * pt + plab] = -1
            if undo_tet:
                tetmap[pt] = -1
                inv.pop()
            if undo_label:
                labels[s_old] = -1
                lab_inv[4 * tau + g] = -1
            if beaten:
                return True
        return False

    for start in range(n):
        tetmap[start] = 0
        inv.append(start)
        beaten = scan(0)
        tetmap[start] = -1
        inv.pop()
        if beaten:
            return False
    return True


def enumerate_pairings(n: int) -> Iterator[Pairing]:
    """Canonical connected pairings on n tetrahedra in ascending order."""
    if n < 1:
        return
    fp = [-1] * (4 * n)
    found: list[Pairing] = []

    def extend(maxtet: int) -> None:
        s = next((i for i, p in enumerate(fp) if p < 0), -1)
        if s < 0:
            done = tuple(fp)
            if is_connected(done) and is_canonical(done):
                found.append(done)
            return
        t = s // 4
        cap = min(max(maxtet, t) + 1, n - 1)
        for u in range(t, cap + 1):
            c = next((4 * u + k for k in range(4)
                      if fp[4 * u + k] < 0 and 4 * u + k != s), -1)
            if c < 0:
                continue
            fp[s], fp[c] = c, s
            extend(max(maxtet, u))
            fp[s], fp[c] = -1, -1

    extend(-1)
    found.sort()
    yield from found


def format_pairing(fp: Pairing) -> str:
    """Text form `n ; T.F T.F ...`, one partner token per slot in order."""
    toks = " ".join(f"{p // 4}.{p % 4}" for p in fp)
    return f"{len(fp) // 4} ; {toks}"


def parse_pairing(line: str) -> tuple[int, Pairing]:
    head, _, body = line.partition(";")
    n = int(head.strip())
    toks = body.split()
    if len(toks) != 4 * n:
        raise ValueError(f"expected {4 * n} partner tokens, got {len(toks)}")
    fp = []
    for tok in toks:
        t, _, f = tok.partition(".")
        fp.append(4 * int(t) + int(f))
    for s, p in enumerate(fp):
        if not 0 <= p < 4 * n or p == s or fp[p] != s:
            raise ValueError(f"slot {s} is not consistently paired")
    return n, tuple(fp)
