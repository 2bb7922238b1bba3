"""Table-accelerated GF(2) fast path for the exhaustive harness runs.

The public modules remain the source of mathematical truth; this module
memoizes their answers over whole enumeration families so the labeled
exhaustive searches (millions of instances) finish in minutes on one
core.  The test suite cross-validates every digest here against the
generic route on complete small spaces.

Layout:
  LevelHom     GF(2) homology from per-cardinality face bitmaps; the
               boundary column of a face is a precomputed bitmask over
               the subset-index space one level down.
  LinkTables   (max unclean size, Serre violation) digests for every
               complex whose facets are k-subsets of [m], indexed by
               facet-set mask; built bottom-up through vertex links.
  FlagTables   homology digests of clique complexes of all graphs on
               w <= 6 labeled vertices, indexed by edge-set mask.
  Codim2Engine per-instance checks for the big theorem runs (pure
               codimension-2 complexes and their dual graphs).

Every engine instance additionally self-checks combinatorial Alexander
duality (H~_i of the dual against H~_{n-i-3} of the complex) on every
instance it analyzes; a failure raises EngineError, which the CLI maps
to the internal-invariant exit code.
"""

from __future__ import annotations

from ._bits import size_subsets
from .homology import rank_gf2_columns

_SERRE_NONE = 99  # "no Serre violation anywhere" (dimensions here are < 99)


class EngineError(AssertionError):
    """Internal consistency breach inside the fast path."""


# ---------------------------------------------------------------------------
# homology from per-level face bitmaps


class LevelHom:
    """GF(2) homology machinery for subsets of a fixed ambient [n].

    levels[k] lists all k-subsets of {1..n} as masks (sorted); a set of
    k-faces is a bitmap over positions in levels[k].  down[k][j] is the
    boundary column of the j-th k-subset: the bitmap of its (k-1)-subsets.
    """

    def __init__(self, n: int):
        self.n = n
        self.levels = [size_subsets(n, k) for k in range(n + 1)]
        self.index: list[dict[int, int]] = [
            {m: i for i, m in enumerate(level)} for level in self.levels
        ]
        self.down: list[list[int]] = [[]]
        for k in range(1, n + 1):
            idx = self.index[k - 1]
            cols = []
            for face in self.levels[k]:
                col = 0
                m = face
                while m:
                    b = m & -m
                    m ^= b
                    col |= 1 << idx[face ^ b]
                cols.append(col)
            self.down.append(cols)

    def close_down(self, k: int, bitmap: int) -> int:
        """Bitmap of all (k-1)-subsets of the faces in ``bitmap``."""
        down = self.down[k]
        out = 0
        m = bitmap
        while m:
            b = m & -m
            m ^= b
            out |= down[b.bit_length() - 1]
        return out

    def closure(self, k: int, top_bitmap: int) -> list[int]:
        """Per-level face bitmaps of the pure complex on the flagged k-subsets."""
        masks = [0] * (k + 1)
        masks[k] = top_bitmap
        for lv in range(k, 0, -1):
            masks[lv - 1] = self.close_down(lv, masks[lv])
        return masks

    def dims_pure(self, k: int, top_bitmap: int) -> tuple[int, ...]:
        """Reduced homology dims (from degree -1) of the pure complex
        generated by the k-subsets flagged in ``top_bitmap``."""
        return self.dims_from_levels(self.closure(k, top_bitmap))

    def dims_from_levels(self, masks: list[int]) -> tuple[int, ...]:
        """Homology dims given per-level face bitmaps (masks[0] = 1 for the
        empty face; the complex must be closed under taking subsets)."""
        top = len(masks) - 1
        while top > 0 and not masks[top]:
            top -= 1
        counts = [masks[lv].bit_count() for lv in range(top + 1)]
        ranks = [0] * (top + 2)
        for lv in range(1, top + 1):
            down = self.down[lv]
            cols = []
            m = masks[lv]
            while m:
                b = m & -m
                m ^= b
                cols.append(down[b.bit_length() - 1])
            ranks[lv] = rank_gf2_columns(cols)
        return tuple(counts[lv] - ranks[lv] - ranks[lv + 1] for lv in range(top + 1))


_LEVEL_HOMS: dict[int, LevelHom] = {}


def level_hom(n: int) -> LevelHom:
    lh = _LEVEL_HOMS.get(n)
    if lh is None:
        lh = _LEVEL_HOMS[n] = LevelHom(n)
    return lh


# ---------------------------------------------------------------------------
# half-table bit remapping (poor man's PEXT over slot spaces)


class HalfMap:
    """Precomputed OR-fold of per-bit contributions over a K-bit space.

    value(s) = OR of contrib[i] over set bits i of s, evaluated with two
    table lookups: lo[s & lomask] | hi[s >> lobits].
    """

    __slots__ = ("lo", "hi", "lobits", "lomask")

    def __init__(self, K: int, contrib: list[int]):
        lobits = min(K, 11)
        self.lobits = lobits
        self.lomask = (1 << lobits) - 1
        self.lo = _or_fold_table(contrib[:lobits])
        self.hi = _or_fold_table(contrib[lobits:])

    def value(self, s: int) -> int:
        return self.lo[s & self.lomask] | self.hi[s >> self.lobits]


def _or_fold_table(contrib: list[int]) -> list[int]:
    k = len(contrib)
    table = [0] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        table[s] = table[s ^ low] | contrib[low.bit_length() - 1]
    return table


def _compress_drop_vertex(mask: int, vbit: int) -> int:
    """Shift out one vertex bit (mask must not contain it)."""
    low = vbit - 1
    return (mask & low) | ((mask >> 1) & ~low)


# ---------------------------------------------------------------------------
# link profile tables


class LinkTables:
    """(max_unclean, serre_viol) for every complex with k-subset facets on [m].

    Index = facet-set mask over size_subsets(m, k).  max_unclean is the
    largest size of a face whose link has homology below its dimension
    (-1 if none); serre_viol is the smallest degree violating a Serre
    bound anywhere (=_SERRE_NONE if none).  Built bottom-up: entry
    digests combine the complex's own homology with the digests of its
    vertex links, which live one table down.
    """

    def __init__(self, m: int, k: int):
        if not (1 <= k <= m):
            raise ValueError("need 1 <= k <= m")
        self.m = m
        self.k = k
        self.slots = size_subsets(m, k)
        K = len(self.slots)
        size = 1 << K
        self.maxbad = maxbad = [-1] * size
        self.serre = serre = [_SERRE_NONE] * size
        if k == 1:
            return  # point sets: 0-dimensional, always clean everywhere

        child = link_tables(m - 1, k - 1)
        child_index = {mask: i for i, mask in enumerate(child.slots)}
        # ext[v][s] = child facet-set mask of the link of vertex v+1 in s
        ext: list[list[int]] = []
        for v in range(m):
            vbit = 1 << v
            contrib = []
            for f in self.slots:
                if f & vbit:
                    contrib.append(1 << child_index[_compress_drop_vertex(f ^ vbit, vbit)])
                else:
                    contrib.append(0)
            table = [0] * size
            for s in range(1, size):
                low = s & -s
                table[s] = table[s ^ low] | contrib[low.bit_length() - 1]
            ext.append(table)

        lh = level_hom(m)
        cmaxbad = child.maxbad
        cserre = child.serre
        dims_pure = lh.dims_pure
        for s in range(1, size):
            dims = dims_pure(k, s)
            mb = -1
            sv = _SERRE_NONE
            for i in range(k - 1):  # degrees below the (pure) top dimension
                if dims[i + 1]:
                    sv = i
                    mb = 0
                    break
            for v in range(m):
                lm = ext[v][s]
                if not lm:
                    continue
                cm = cmaxbad[lm]
                if cm >= 0 and cm + 1 > mb:
                    mb = cm + 1
                cs = cserre[lm]
                if cs < sv:
                    sv = cs
            maxbad[s] = mb
            serre[s] = sv


_LINK_TABLES: dict[tuple[int, int], LinkTables] = {}


def link_tables(m: int, k: int) -> LinkTables:
    key = (m, k)
    lt = _LINK_TABLES.get(key)
    if lt is None:
        lt = _LINK_TABLES[key] = LinkTables(m, k)
    return lt


# ---------------------------------------------------------------------------
# flag (clique complex) homology digests


def flag_level_masks(adj: tuple[int, ...], n: int, lh: LevelHom) -> list[int]:
    """Per-level face bitmaps of the clique complex of ``adj``.

    Cliqueness DP over all 2^n subsets: S is a clique iff S minus its
    lowest vertex is one and that vertex sees the rest.
    """
    index = lh.index
    masks = [0] * (n + 1)
    masks[0] = 1
    cliq = bytearray(1 << n)
    cliq[0] = 1
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if cliq[rest] and (adj[low.bit_length() - 1] & rest) == rest:
            cliq[s] = 1
            masks[s.bit_count()] |= 1 << index[s.bit_count()][s]
    return masks


def flag_dims(adj: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Reduced GF(2) homology of the clique complex of a graph."""
    lh = level_hom(n)
    return lh.dims_from_levels(flag_level_masks(adj, n, lh))


class FlagTables:
    """Digests of clique complexes of all graphs on [w], by edge mask.

    nlmax[e] = max degree >= 1 with nonzero reduced homology (-1 when the
    only homology sits in degrees -1/0): exactly the data Hochster terms
    need to locate nonlinear Betti entries.
    """

    def __init__(self, w: int):
        self.w = w
        self.pair_slots = size_subsets(w, 2)
        E = len(self.pair_slots)
        lh = level_hom(w)
        nlmax = [-1] * (1 << E)
        ends = [(p & -p, p ^ (p & -p)) for p in self.pair_slots]
        for e in range(1 << E):
            adj = [0] * w
            m = e
            while m:
                b = m & -m
                m ^= b
                u, v = ends[b.bit_length() - 1]
                adj[u.bit_length() - 1] |= v
                adj[v.bit_length() - 1] |= u
            dims = lh.dims_from_levels(flag_level_masks(tuple(adj), w, lh))
            best = -1
            for deg in range(1, len(dims) - 1):
                if dims[deg + 1]:
                    best = deg
            nlmax[e] = best
        self.nlmax = nlmax


_FLAG_TABLES: dict[int, FlagTables] = {}


def flag_tables(w: int) -> FlagTables:
    ft = _FLAG_TABLES.get(w)
    if ft is None:
        ft = _FLAG_TABLES[w] = FlagTables(w)
    return ft


# ---------------------------------------------------------------------------
# chordless cycle scan (iterative, bitmask state)


def chordless_span_adj(adj: tuple[int, ...], early_min: bool = False) -> tuple[int, int]:
    """(min, max) chordless cycle length, (0, 0) if chordal.

    ``early_min`` returns as soon as a 4-cycle is seen (nothing shorter
    exists), reporting (4, 4); use only when the max is not needed.
    """
    n = len(adj)
    lo = hi = 0
    for s in range(n):
        sbit = 1 << s
        above = -(sbit << 1)
        adj_s = adj[s]
        stack = []
        m = adj_s & above
        while m:
            b = m & -m
            m ^= b
            stack.append(((s, b.bit_length() - 1), sbit | b, 0))
        while stack:
            path, pmask, banned = stack.pop()
            end = path[-1]
            cand = adj[end] & above & ~pmask & ~banned
            if len(path) >= 3:
                closing = cand & adj_s
                mm = closing
                while mm:
                    b = mm & -mm
                    mm ^= b
                    w = b.bit_length() - 1
                    if path[1] < w:
                        k = len(path) + 1
                        if not lo or k < lo:
                            lo = k
                        if k > hi:
                            hi = k
                        if early_min and k == 4:
                            return 4, 4
            if len(path) + 2 > n:
                continue
            new_banned = banned | (adj[end] & above)
            mm = cand & ~adj_s
            while mm:
                b = mm & -mm
                mm ^= b
                stack.append((path + (b.bit_length() - 1,), pmask | b, new_banned))
    return lo, hi


# ---------------------------------------------------------------------------
# the codimension-2 engine


def _check_duality(dims_c: tuple[int, ...], dims_dual: tuple[int, ...], n: int) -> None:
    """Alexander duality self-check: H~_i(dual) = H~_{n-i-3}(complex)."""
    for i in range(-1, n):
        a = dims_dual[i + 1] if 0 <= i + 1 < len(dims_dual) else 0
        j = n - i - 3
        b = dims_c[j + 1] if 0 <= j + 1 < len(dims_c) else 0
        if a != b:
            raise EngineError(
                f"Alexander duality violated: H{i}(dual)={a} vs H{j}(complex)={b}"
            )


class Codim2Engine:
    """Fast checks on pure (n-3)-dimensional complexes on [n] (and the
    graphs behind their duals).  GF(2) only; n <= 7 by table feasibility."""

    def __init__(self, n: int):
        if n < 3 or n > 7:
            raise ValueError("codim-2 engine supports 3 <= n <= 7")
        self.n = n
        self.d = d = n - 2
        self.lh = level_hom(n)
        self.facet_slots = self.lh.levels[d]
        self.pair_slots = self.lh.levels[2]
        K = len(self.facet_slots)
        self.K = K
        self.full = (1 << K) - 1

        # vertex-link extraction into the (n-1, d-1) digest tables
        if d >= 2:
            self.lt = link_tables(n - 1, d - 1)
            child_index = {mask: i for i, mask in enumerate(self.lt.slots)}
            self.linkmaps = []
            for v in range(n):
                vbit = 1 << v
                contrib = []
                for f in self.facet_slots:
                    if f & vbit:
                        contrib.append(1 << child_index[_compress_drop_vertex(f ^ vbit, vbit)])
                    else:
                        contrib.append(0)
                self.linkmaps.append(HalfMap(K, contrib))
        else:
            self.lt = None
            self.linkmaps = []

        # facet-slot <-> complement-pair-slot permutations
        pair_index = {mask: i for i, mask in enumerate(self.pair_slots)}
        facet_index = {mask: i for i, mask in enumerate(self.facet_slots)}
        nfull = (1 << n) - 1
        self.f2e = HalfMap(K, [1 << pair_index[nfull ^ f] for f in self.facet_slots])
        self.e2f = HalfMap(K, [1 << facet_index[nfull ^ p] for p in self.pair_slots])
        self.pair_ends = [((p & -p).bit_length() - 1, (p ^ (p & -p)).bit_length() - 1)
                          for p in self.pair_slots]

        # level bitmaps of the subsets lying inside W, for |W| >= 5 (the
        # only restriction sizes that can push projdim of the ring past 3)
        self.inside_w: dict[int, list[int]] = {}
        for wmask in range(1 << n):
            w = wmask.bit_count()
            if w < 5 or w == n:
                continue
            per_level = []
            for k in range(min(w, 3) + 1):
                bm = 0
                for j, mu in enumerate(self.lh.levels[k]):
                    if mu & wmask == mu:
                        bm |= 1 << j
                per_level.append(bm)
            self.inside_w[wmask] = per_level

        # per-W restriction maps of graph edge masks into FlagTables spaces
        self.restmaps: list[tuple[HalfMap, int, list[int]]] = []
        for wmask in range(1, 1 << n):
            w = wmask.bit_count()
            if w < 2 or w == n:
                continue
            ft = flag_tables(w)
            sub_index = {mask: i for i, mask in enumerate(ft.pair_slots)}
            comp = {}
            i = 0
            mm = wmask
            while mm:
                b = mm & -mm
                mm ^= b
                comp[b.bit_length() - 1] = i
                i += 1
            contrib = []
            for (u, v) in self.pair_ends:
                if (1 << u) & wmask and (1 << v) & wmask:
                    pm = (1 << comp[u]) | (1 << comp[v])
                    contrib.append(1 << sub_index[pm])
                else:
                    contrib.append(0)
            self.restmaps.append((HalfMap(K, contrib), w, ft.nlmax))

    # -- shared per-instance pieces ---------------------------------------

    def decode_facets(self, s: int) -> list[int]:
        slots = self.facet_slots
        out = []
        while s:
            b = s & -s
            s ^= b
            out.append(slots[b.bit_length() - 1])
        return out

    def covers(self, s: int) -> bool:
        occ = 0
        slots = self.facet_slots
        while s:
            b = s & -s
            s ^= b
            occ |= slots[b.bit_length() - 1]
        return occ == (1 << self.n) - 1

    def link_digest(self, s: int) -> tuple[int, int]:
        """(max unclean size, Serre violation) over nonempty faces only."""
        if self.lt is None:
            return (-1, _SERRE_NONE)
        mb = -1
        sv = _SERRE_NONE
        cmaxbad = self.lt.maxbad
        cserre = self.lt.serre
        for hm in self.linkmaps:
            lm = hm.lo[s & hm.lomask] | hm.hi[s >> hm.lobits]
            if not lm:
                continue
            c = cmaxbad[lm]
            if c >= 0 and c + 1 > mb:
                mb = c + 1
            c = cserre[lm]
            if c < sv:
                sv = c
        return mb, sv

    def analyze(self, s: int) -> tuple[int, int, tuple[int, ...]]:
        """(min_cm_t, serre_viol, homology dims) of the instance complex."""
        t_cm, sv, dims, _ = self.analyze_full(s)
        return t_cm, sv, dims

    def analyze_full(self, s: int) -> tuple[int, int, tuple[int, ...], list[int]]:
        levels = self.lh.closure(self.d, s)
        dims = self.lh.dims_from_levels(levels)
        mb, sv = self.link_digest(s)
        for i in range(self.d - 1):
            if dims[i + 1]:
                if sv > i:
                    sv = i
                if mb < 0:
                    mb = 0
                break
        return mb + 1, sv, dims, levels

    def adj_of_edges(self, gmask: int) -> tuple[int, ...]:
        adj = [0] * self.n
        ends = self.pair_ends
        while gmask:
            b = gmask & -gmask
            gmask ^= b
            u, v = ends[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def dual_graph_mask(self, s: int) -> int:
        """Edges of the dual's 1-skeleton: pairs whose complement facet is absent."""
        hm = self.f2e
        t = self.full ^ s
        return hm.lo[t & hm.lomask] | hm.hi[t >> hm.lobits]

    def ndp_threshold(self, gmask: int, dims_c: tuple[int, ...] | None) -> int:
        """min t such that N_{2, d-t} holds for the dual's ideal.

        Scans Hochster terms: a restriction to W with homology in degree
        deg >= 1 contributes a nonlinear entry at step |W| - deg - 2.
        dims_c, when given, supplies the full-W term through the
        Alexander duality self-check path (the dual complex's homology
        is recomputed directly and compared).
        """
        istar = _SERRE_NONE
        for hm, w, nlmax in self.restmaps:
            nl = nlmax[hm.lo[gmask & hm.lomask] | hm.hi[gmask >> hm.lobits]]
            if nl >= 1:
                cand = w - nl - 2
                if cand < istar:
                    istar = cand
        dims_dual = flag_dims(self.adj_of_edges(gmask), self.n)
        if dims_c is not None:
            _check_duality(dims_c, dims_dual, self.n)
        for deg in range(1, len(dims_dual) - 1):
            if dims_dual[deg + 1]:
                cand = self.n - deg - 2
                if cand < istar:
                    istar = cand
        if istar < 1:
            raise EngineError(f"nonlinear Betti entry at homological step {istar} < 1")
        if istar >= _SERRE_NONE:
            return 0
        return max(0, self.d - istar)

    # -- theorem checks ----------------------------------------------------

    def topin_clauses(self, s: int) -> list[str]:
        """Equality of the four CM_t thresholds (CM_t / N_{2,d-t} / S_{d-t} /
        chord condition at d-t+2); empty list when the theorem holds."""
        t_cm, sv, dims = self.analyze(s)
        t_serre = max(0, self.d - 1 - sv)
        gmask = self.dual_graph_mask(s)
        t_ndp = self.ndp_threshold(gmask, dims)
        mc, _ = chordless_span_adj(self.adj_of_edges(gmask), early_min=True)
        t_chord = max(0, self.d + 3 - mc) if mc else 0
        if t_cm == t_ndp == t_serre == t_chord:
            return []
        return [
            f"threshold mismatch: cm_t from {t_cm}, N(2,d-t) from {t_ndp}, "
            f"S(d-t) from {t_serre}, chord condition from {t_chord}"
        ]

    def chardepth_clauses(self, s: int) -> list[str]:
        """Buchsbaum codim-2: depth >= d-1, and non-CM iff dual skeleton is
        the full cycle."""
        if self.lt is not None:
            mb, _ = self.link_digest(s)
            if mb > 0:
                return []  # not Buchsbaum: premise fails
        t_cm, _, dims, levels = self.analyze_full(s)
        clauses = []
        gmask = self.dual_graph_mask(s)
        adj = self.adj_of_edges(gmask)
        cyc = self.n >= 3 and all(a.bit_count() == 2 for a in adj) and _connected(adj)
        if (t_cm > 0) != cyc:
            clauses.append(f"non-CM={t_cm > 0} but dual-skeleton-is-cycle={cyc}")
        if not self._projdim_at_most_3(dims, levels):
            clauses.append(f"depth {self._depth(s)} < d-1 = {self.d - 1}")
        return clauses

    def _projdim_at_most_3(self, dims: tuple[int, ...], levels: list[int]) -> bool:
        """projdim K[Delta] <= 3, i.e. depth >= d-1 (cover assumed).

        A Hochster witness needs H~_deg of a restriction to W with
        |W| - deg - 2 >= 3, so only |W| >= 5 and deg <= |W|-5 can hurt:
        connectivity of every 5-subset restriction, H~_1 of every
        6-subset restriction, and the low homology of the complex itself.
        Restriction face bitmaps are the complex's level bitmaps masked
        to subsets inside W.
        """
        n = self.n
        for deg in range(0, n - 4):
            if dims[deg + 1]:
                return False
        if not self.inside_w:
            return True
        pair_ends = self.pair_ends
        down3 = self.lh.down[3]
        for wmask, inside in self.inside_w.items():
            w = wmask.bit_count()
            edges = levels[2] & inside[2]
            adjl = [0] * n
            m = edges
            while m:
                b = m & -m
                m ^= b
                u, v = pair_ends[b.bit_length() - 1]
                adjl[u] |= 1 << v
                adjl[v] |= 1 << u
            start = wmask & -wmask
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                mm = frontier
                while mm:
                    b = mm & -mm
                    mm ^= b
                    nxt |= adjl[b.bit_length() - 1]
                frontier = nxt & ~seen
                seen |= nxt
            if seen != wmask:
                return False  # restriction disconnected: H~_0 != 0
            if w >= 6:
                tris = levels[3] & inside[3]
                cols = []
                mm = tris
                while mm:
                    b = mm & -mm
                    mm ^= b
                    cols.append(down3[b.bit_length() - 1])
                if edges.bit_count() - (w - 1) - rank_gf2_columns(cols):
                    return False  # H~_1 of the restriction is nonzero
        return True

    def _depth(self, s: int) -> int:
        from .betti import hochster_betti, homological_invariants
        from .complexes import Complex

        c = Complex(self.n, tuple(self.decode_facets(s)), _trusted=True)
        return homological_invariants(hochster_betti(c, subject="ring")).depth

    # -- graph-space checks (instances are edge masks of G) ----------------

    def dual_of_clique_mask(self, e: int) -> int:
        """Facet mask of (clique complex of G)^dual: complements of non-edges."""
        hm = self.e2f
        t = self.full ^ e
        return hm.lo[t & hm.lomask] | hm.hi[t >> hm.lobits]

    def graph_no_isolated(self, e: int) -> bool:
        return all(a for a in self.adj_of_edges(e))

    def main2_clauses(self, e: int) -> list[str]:
        """dual(clique(G)) is CM_{n-r} iff every cycle of length <= r has a
        chord, for all r in [3, n]."""
        s_dual = self.dual_of_clique_mask(e)
        if not s_dual:
            return []  # complete graph: dual void, CM_t for all t; chordal
        t_cm, _, dims_dual_cx = self.analyze(s_dual)
        adj = self.adj_of_edges(e)
        mc, _ = chordless_span_adj(adj, early_min=True)
        t_chord = max(0, self.n - mc + 1) if mc else 0
        _check_duality(flag_dims(adj, self.n), dims_dual_cx, self.n)
        if t_cm == t_chord:
            return []
        return [f"min t with CM_t = {t_cm} but chord threshold = {t_chord}"]

    def linearity_data(self, e: int) -> tuple[bool, int, int]:
        """(I_{clique(G)} fully linear, min chordless len, max chordless len)."""
        istar = _SERRE_NONE
        for hm, w, nlmax in self.restmaps:
            nl = nlmax[hm.lo[e & hm.lomask] | hm.hi[e >> hm.lobits]]
            if nl >= 1:
                istar = 1  # any nonlinear term breaks full linearity
                break
        full_linear = istar >= _SERRE_NONE
        if full_linear:
            dims_g = flag_dims(self.adj_of_edges(e), self.n)
            for deg in range(1, len(dims_g) - 1):
                if dims_g[deg + 1]:
                    full_linear = False
                    break
        lo, hi = chordless_span_adj(self.adj_of_edges(e))
        return full_linear, lo, hi

    def corlinear_clauses(self, e: int) -> list[str]:
        s_dual = self.dual_of_clique_mask(e)
        full_linear, lo, hi = self.linearity_data(e)
        if not s_dual:
            return []  # complete graph: empty ideal, vacuously linear and CM
        t_cm, _, _ = self.analyze(s_dual)
        clauses = []
        for r in range(3, self.n + 1):
            if hi > r:
                continue  # G not r-chordal: premise fails
            cm = self.n - r >= t_cm
            if cm != full_linear:
                clauses.append(f"r={r}: CM_(n-r)={cm} but linear-resolution={full_linear}")
        return clauses

    def froberg_clauses(self, e: int) -> list[str]:
        full_linear, lo, _ = self.linearity_data(e)
        chordal = lo == 0
        if full_linear == chordal:
            return []
        return [f"linear-resolution={full_linear} but chordal={chordal}"]

    # -- pure-space check reused by cor-bk ---------------------------------


def _connected(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    if n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


_ENGINES: dict[int, Codim2Engine] = {}


def codim2_engine(n: int) -> Codim2Engine:
    eng = _ENGINES.get(n)
    if eng is None:
        eng = _ENGINES[n] = Codim2Engine(n)
    return eng


class PureSpaceEngine:
    """Buchsbaum-gated scans over arbitrary pure (n, d) spaces (cor-bk)."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.lh = level_hom(n)
        self.facet_slots = self.lh.levels[d]
        K = len(self.facet_slots)
        if d >= 2:
            self.lt = link_tables(n - 1, d - 1)
            child_index = {mask: i for i, mask in enumerate(self.lt.slots)}
            self.linkmaps = []
            for v in range(n):
                vbit = 1 << v
                contrib = []
                for f in self.facet_slots:
                    if f & vbit:
                        contrib.append(1 << child_index[_compress_drop_vertex(f ^ vbit, vbit)])
                    else:
                        contrib.append(0)
                self.linkmaps.append(HalfMap(K, contrib))
        else:
            self.lt = None
            self.linkmaps = []

    def covers(self, s: int) -> bool:
        occ = 0
        slots = self.facet_slots
        while s:
            b = s & -s
            s ^= b
            occ |= slots[b.bit_length() - 1]
        return occ == (1 << self.n) - 1

    def decode_facets(self, s: int) -> list[int]:
        slots = self.facet_slots
        out = []
        while s:
            b = s & -s
            s ^= b
            out.append(slots[b.bit_length() - 1])
        return out

    def is_buchsbaum(self, s: int) -> bool:
        if self.lt is None:
            return True  # 0-dimensional: every vertex link is irrelevant
        cmaxbad = self.lt.maxbad
        for hm in self.linkmaps:
            lm = hm.lo[s & hm.lomask] | hm.hi[s >> hm.lobits]
            if lm and cmaxbad[lm] >= 0:
                return False
        return True

    def corbk_clauses(self, s: int) -> list[str]:
        """Buchsbaum with H~_i != 0 for some i >= 1 forces n >= 2d - i."""
        if not self.is_buchsbaum(s):
            return []
        dims = self.lh.dims_pure(self.d, s)
        clauses = []
        for i in range(1, len(dims) - 1):
            if dims[i + 1] and self.n < 2 * self.d - i:
                clauses.append(f"H_{i} != 0 but n = {self.n} < 2d - i = {2 * self.d - i}")
        return clauses


_PURE_ENGINES: dict[tuple[int, int], PureSpaceEngine] = {}


def pure_space_engine(n: int, d: int) -> PureSpaceEngine:
    key = (n, d)
    eng = _PURE_ENGINES.get(key)
    if eng is None:
        eng = _PURE_ENGINES[key] = PureSpaceEngine(n, d)
    return eng
