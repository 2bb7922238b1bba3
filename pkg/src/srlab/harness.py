"""Machine verification of the theorem catalogue over desk-scale spaces.

Each registered theorem id pairs a clause checker with default search
spaces pinned in ``verify_manifest.json``.  Spaces enumerate labeled
instances (no isomorphism reduction: correctness over speed) in a fixed
order; sampling is seeded and deduplicated.  Large exhaustive GF(2)
runs are dispatched to the table engine in ``_engine``; small spaces and
non-GF(2) fields take the generic route through the public modules.
Both routes are cross-validated against each other in the test suite.
Expected counterexample count for every registered id over its default
spaces: zero.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dfield
from importlib import resources
from math import comb
from typing import Callable, Iterator

from . import _engine
from ._bits import labels_of, size_subsets
from .betti import (
    FULL_LINEARITY,
    check_er_shape,
    check_ndp,
    check_subadditivity,
    hochster_betti,
    homological_invariants,
)
from .complexes import (
    Complex,
    alexander_dual,
    barycentric_subdivision,
    skeleton_graph,
)
from .criteria import (
    cm_t,
    ext_dim_profile,
    is_buchsbaum,
    max_serre,
    min_cm_t,
    min_singularity_bound,
    reisner_cm,
    satisfies_serre,
    singularity_dimension_lt,
)
from .fixtures import fixture_complex
from .graphs import Graph, chord_condition, chordless_span, is_cycle_graph, clique_complex
from .homology import GF2, FieldSpec, reduced_homology

#: spaces at least this large (2^slots) go through the table engine
ENGINE_MIN_INSTANCES = 8192

EXHAUSTIVE_SLOT_LIMIT = 24  # exhaustive mode allowed only when slots <= this
SAMPLE_ATTEMPT_FACTOR = 300


class HarnessError(ValueError):
    """Unknown theorem id or an out-of-bounds search space."""


# ---------------------------------------------------------------------------
# search spaces


@dataclass(frozen=True)
class SearchSpace:
    """One enumeration family: pure complexes (facet size d on [n]),
    graphs on [n], or a single named fixture.

    cover: for complexes, require every ambient vertex to be a face; for
    graphs, forbid isolated vertices.
    """

    n: int = 0
    d: int | str = 0            # facet size, or "graphs"
    mode: str = "exhaustive"    # "exhaustive" | "sample"
    count: int = 0
    seed: int | None = None
    cover: bool = True
    fixture: str | None = None

    @property
    def kind(self) -> str:
        if self.fixture is not None:
            return "fixture"
        return "graph" if self.d == "graphs" else "complex"

    def slot_masks(self) -> list[int]:
        k = 2 if self.kind == "graph" else int(self.d)
        return size_subsets(self.n, k)

    def slot_count(self) -> int:
        if self.kind == "fixture":
            return 0
        return comb(self.n, 2) if self.kind == "graph" else comb(self.n, int(self.d))

    def validate(self) -> None:
        if self.kind == "fixture":
            return
        if self.kind == "complex" and not (1 <= int(self.d) <= self.n):
            raise HarnessError(f"facet size {self.d} out of range for n={self.n}")
        if self.mode == "exhaustive" and self.slot_count() > EXHAUSTIVE_SLOT_LIMIT:
            raise HarnessError(
                f"exhaustive enumeration needs at most {EXHAUSTIVE_SLOT_LIMIT} "
                f"slots; space has {self.slot_count()}"
            )
        if self.mode == "sample":
            if self.seed is None or self.count <= 0:
                raise HarnessError("sample mode needs a seed and a positive count")
        elif self.mode != "exhaustive":
            raise HarnessError(f"unknown mode {self.mode!r}")

    def iter_masks(self, keep: Callable[[int], bool] | None = None) -> Iterator[int]:
        """Instance masks in enumeration order.

        ``keep`` is the instance filter (cover / no-isolated-vertices):
        exhaustive mode scans everything and skips rejects; sample mode
        keeps drawing until ``count`` distinct accepted masks have been
        produced (bounded by an attempt limit).
        """
        K = self.slot_count()
        if self.mode == "exhaustive":
            if keep is None:
                yield from range(1, 1 << K)
            else:
                for s in range(1, 1 << K):
                    if keep(s):
                        yield s
        else:
            rng = random.Random(self.seed)
            seen: set[int] = set()
            produced = 0
            attempts = 0
            limit = self.count * SAMPLE_ATTEMPT_FACTOR
            while produced < self.count and attempts < limit:
                attempts += 1
                s = rng.randrange(1, 1 << K)
                if s in seen:
                    continue
                seen.add(s)
                if keep is not None and not keep(s):
                    continue
                yield s
                produced += 1

    def to_json(self) -> dict:
        if self.kind == "fixture":
            return {"fixture": self.fixture}
        out: dict = {"n": self.n, "d": self.d, "mode": self.mode, "cover": self.cover}
        if self.mode == "sample":
            out["count"] = self.count
            out["seed"] = self.seed
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SearchSpace":
        if "fixture" in obj:
            return cls(fixture=obj["fixture"])
        return cls(
            n=obj["n"],
            d=obj["d"],
            mode=obj.get("mode", "exhaustive"),
            count=obj.get("count", 0),
            seed=obj.get("seed"),
            cover=obj.get("cover", True),
        )


def _mask_cover(slots: list[int], full: int) -> Callable[[int], bool]:
    def keep(s: int) -> bool:
        occ = 0
        while s:
            b = s & -s
            s ^= b
            occ |= slots[b.bit_length() - 1]
        return occ == full
    return keep


def enumerate_pure_complexes(space: SearchSpace) -> Iterator[Complex]:
    """All (or sampled) nonempty facet sets of d-subsets of [n], in a
    fixed order, passing the cover filter."""
    space.validate()
    if space.kind != "complex":
        raise HarnessError("expected a pure-complex space")
    slots = space.slot_masks()
    keep = _mask_cover(slots, (1 << space.n) - 1) if space.cover else None
    for s in space.iter_masks(keep):
        masks = []
        m = s
        while m:
            b = m & -m
            m ^= b
            masks.append(slots[b.bit_length() - 1])
        yield Complex(space.n, tuple(masks), _trusted=True)


def enumerate_graphs(space: SearchSpace) -> Iterator[Graph]:
    """All (or sampled) nonempty edge sets on [n]; cover = no isolated vertices."""
    space.validate()
    if space.kind != "graph":
        raise HarnessError("expected a graph space")
    slots = space.slot_masks()
    keep = _mask_cover(slots, (1 << space.n) - 1) if space.cover else None
    for s in space.iter_masks(keep):
        adj = [0] * space.n
        m = s
        while m:
            b = m & -m
            m ^= b
            pm = slots[b.bit_length() - 1]
            u = (pm & -pm).bit_length() - 1
            v = (pm ^ (pm & -pm)).bit_length() - 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph.from_adj(tuple(adj))


# ---------------------------------------------------------------------------
# generic clause checkers (instance -> list of violated-clause strings)


def _dim_ring(c: Complex) -> int:
    return 0 if c.dim is None else c.dim + 1


def _check_thm_er(c: Complex, field: FieldSpec) -> list[str]:
    dual = alexander_dual(c)
    tbl = hochster_betti(c, field, "ideal")
    dd = _dim_ring(dual)
    out = []
    for t in range(0, c.n + 1):
        lhs = cm_t(dual, t, field)
        rhs = check_er_shape(tbl, c.n, dd, t)
        if lhs != rhs:
            out.append(f"t={t}: CM_t(dual)={lhs} but diagram shape={rhs}")
    return out


def _check_thm_main(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    dual = alexander_dual(c)
    if dual.is_void:
        return []
    dtbl = hochster_betti(dual, field, "ideal")
    out = []
    for t in range(0, d + 1):
        if cm_t(c, t, field) and not check_ndp(dtbl, c.n - d, 2 * d - c.n - t + 2):
            out.append(f"CM_{t} but dual ideal misses N({c.n - d},{2 * d - c.n - t + 2})")
    return out


def _check_cor_yan(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    out = []
    for t in range(0, d + 1):
        if cm_t(c, t, field) and not satisfies_serre(c, 2 * d - c.n - t + 2, field):
            out.append(f"CM_{t} but S_{2 * d - c.n - t + 2} fails")
    if is_buchsbaum(c, field):
        depth = homological_invariants(hochster_betti(c, field, "ring")).depth
        # the Serre bound gives depth >= min(r, dim); the cap at d only
        # bites for the full simplex (codimension 0)
        bound = min(2 * d - c.n + 1, d)
        if depth < bound:
            out.append(f"Buchsbaum but depth {depth} < min(2d-n+1, d) = {bound}")
    return out


def _check_yanagawa(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    dual = alexander_dual(c)
    if dual.is_void:
        return []
    dtbl = hochster_betti(dual, field, "ideal")
    out = []
    for r in range(2, d + 2):
        lhs = satisfies_serre(c, r, field)
        rhs = check_ndp(dtbl, c.n - d, r)
        if lhs != rhs:
            out.append(f"S_{r}={lhs} but N({c.n - d},{r})={rhs}")
    return out


def _check_remark_serre(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    out = []
    for r in range(0, d + 2):
        if satisfies_serre(c, r, field) and c.is_pure and not cm_t(c, max(0, d - r), field):
            out.append(f"S_{r} holds but CM_{max(0, d - r)} fails")
    return out


def _check_subadd(c: Complex, field: FieldSpec) -> list[str]:
    out = []
    v = check_subadditivity(hochster_betti(c, field, "ideal"))
    if v:
        out.append(f"subadditivity violations on I_Delta: {v}")
    dual = alexander_dual(c)
    if not dual.is_void:
        v = check_subadditivity(hochster_betti(dual, field, "ideal"))
        if v:
            out.append(f"subadditivity violations on I_dual: {v}")
    return out


def _check_ext_profile(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    prof = ext_dim_profile(c, field)
    out = []
    if prof.pure_via_ext() != c.is_pure:
        out.append("Ext purity characterization disagrees")
    if prof.dimext[d] != d:
        out.append(f"top Ext dimension {prof.dimext[d]} != d = {d}")
    for r in range(2, d + 2):
        if prof.serre_via_ext(r) != satisfies_serre(c, r, field):
            out.append(f"Ext S_{r} characterization disagrees")
    for m in range(-1, d + 1):
        if prof.singdim_lt_via_ext(m) != singularity_dimension_lt(c, m, field):
            out.append(f"Ext singularity-dim<{m} characterization disagrees")
    for t in range(0, d + 1):
        if prof.cmt_via_ext(t, c.is_pure) != cm_t(c, t, field):
            out.append(f"Ext CM_{t} characterization disagrees")
    return out


def _check_topin(c: Complex, field: FieldSpec) -> list[str]:
    d = _dim_ring(c)
    dual = alexander_dual(c)
    dtbl = hochster_betti(dual, field, "ideal")
    g = skeleton_graph(dual)
    out = []
    for t in range(0, d + 1):
        a = cm_t(c, t, field)
        b = check_ndp(dtbl, 2, d - t)
        s = satisfies_serre(c, d - t, field)
        r = d - t + 2
        ch = chord_condition(g, r) if r >= 3 else True
        if not (a == b == s == ch):
            out.append(f"t={t}: CM_t={a} N(2,{d - t})={b} S_{d - t}={s} chord<= {r}={ch}")
    return out


def _check_chardepth(c: Complex, field: FieldSpec) -> list[str]:
    if not is_buchsbaum(c, field):
        return []
    d = _dim_ring(c)
    out = []
    depth = homological_invariants(hochster_betti(c, field, "ring")).depth
    if depth < d - 1:
        out.append(f"Buchsbaum but depth {depth} < dim = {d - 1}")
    noncm = not reisner_cm(c, field)
    cyc = is_cycle_graph(skeleton_graph(alexander_dual(c)))
    if noncm != cyc:
        out.append(f"non-CM={noncm} but dual skeleton is-the-cycle={cyc}")
    return out


def _check_corbk(c: Complex, field: FieldSpec) -> list[str]:
    if not is_buchsbaum(c, field):
        return []
    d = _dim_ring(c)
    hv = reduced_homology(c, field)
    out = []
    for i in hv.nonzero_degrees():
        if i >= 1 and c.n < 2 * d - i:
            out.append(f"H_{i} != 0 but n = {c.n} < 2d - i = {2 * d - i}")
    return out


def _check_sd_invariance(c: Complex, field: FieldSpec) -> list[str]:
    sd = barycentric_subdivision(c)
    out = []
    a, b = min_cm_t(c, field), min_cm_t(sd, field)
    if a != b:
        out.append(f"min CM_t changes under subdivision: {a} vs {b}")
    a, b = max_serre(c, field), max_serre(sd, field)
    if a != b:
        out.append(f"max Serre changes under subdivision: {a} vs {b}")
    a, b = min_singularity_bound(c, field), min_singularity_bound(sd, field)
    if a != b:
        out.append(f"singularity bound changes under subdivision: {a} vs {b}")
    return out


def _check_main2(g: Graph, field: FieldSpec) -> list[str]:
    dual = alexander_dual(clique_complex(g))
    out = []
    for r in range(3, g.n + 1):
        lhs = cm_t(dual, g.n - r, field)
        rhs = chord_condition(g, r)
        if lhs != rhs:
            out.append(f"r={r}: CM_(n-r)(dual clique)={lhs} but chord condition={rhs}")
    return out


def _check_corlinear(g: Graph, field: FieldSpec) -> list[str]:
    cx = clique_complex(g)
    dual = alexander_dual(cx)
    if dual.is_void:
        return []
    tbl = hochster_betti(cx, field, "ideal")
    linear = check_ndp(tbl, 2, FULL_LINEARITY)
    _, hi = chordless_span(g.adj)
    out = []
    for r in range(3, g.n + 1):
        if hi > r:
            continue  # not r-chordal
        lhs = cm_t(dual, g.n - r, field)
        if lhs != linear:
            out.append(f"r={r} (r-chordal): CM_(n-r)={lhs} but linear resolution={linear}")
    return out


def _check_froberg(g: Graph, field: FieldSpec) -> list[str]:
    cx = clique_complex(g)
    tbl = hochster_betti(cx, field, "ideal")
    linear = check_ndp(tbl, 2, FULL_LINEARITY)
    lo, _ = chordless_span(g.adj)
    chordal = lo == 0
    if linear != chordal:
        return [f"linear resolution={linear} but chordal={chordal}"]
    return []


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class TheoremDef:
    theorem_id: str
    kind: str                                 # "complex" | "graph"
    checker: Callable[..., list[str]]
    engine_hook: str | None = None            # key into _ENGINE_HOOKS


THEOREMS: dict[str, TheoremDef] = {}


def register_theorem(theorem_id: str, kind: str, checker, engine_hook: str | None = None):
    THEOREMS[theorem_id] = TheoremDef(theorem_id, kind, checker, engine_hook)


register_theorem("thm-er", "complex", _check_thm_er)
register_theorem("thm-main", "complex", _check_thm_main)
register_theorem("cor-yan", "complex", _check_cor_yan)
register_theorem("yanagawa-bridge", "complex", _check_yanagawa)
register_theorem("remark-serre", "complex", _check_remark_serre)
register_theorem("subadd", "complex", _check_subadd)
register_theorem("ext-profile", "complex", _check_ext_profile)
register_theorem("thm-topin", "complex", _check_topin, engine_hook="topin")
register_theorem("prop-chardepth", "complex", _check_chardepth, engine_hook="chardepth")
register_theorem("cor-bk", "complex", _check_corbk, engine_hook="corbk")
register_theorem("sd-invariance", "complex", _check_sd_invariance)
register_theorem("thm-main2", "graph", _check_main2, engine_hook="main2")
register_theorem("cor-linear", "graph", _check_corlinear, engine_hook="corlinear")
register_theorem("froberg", "graph", _check_froberg, engine_hook="froberg")


# ---------------------------------------------------------------------------
# result type


@dataclass
class VerificationResult:
    theorem_id: str
    field: str
    spaces: list[dict]
    mode: str
    instances_checked: int
    counterexamples: list[dict]
    seed: int | None = None
    elapsed_s: float | None = None
    truncated: bool = False

    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_obj(self, include_elapsed: bool = False) -> dict:
        obj = {
            "schema": "sr-lab/1",
            "theorem_id": self.theorem_id,
            "field": self.field,
            "spaces": self.spaces,
            "mode": self.mode,
            "instances_checked": self.instances_checked,
            "counterexamples": self.counterexamples,
            "counterexamples_truncated": self.truncated,
            "seed": self.seed,
        }
        if include_elapsed:
            obj["elapsed_s"] = self.elapsed_s
        return obj

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_json_obj(include_elapsed), sort_keys=True,
                          separators=(",", ":"))


# ---------------------------------------------------------------------------
# manifest


def load_manifest() -> dict[str, list[SearchSpace]]:
    text = resources.files("srlab").joinpath("verify_manifest.json").read_text()
    raw = json.loads(text)
    return {tid: [SearchSpace.from_json(s) for s in spaces] for tid, spaces in raw.items()}


def default_spaces(theorem_id: str) -> list[SearchSpace]:
    manifest = load_manifest()
    if theorem_id not in manifest:
        raise HarnessError(f"no default spaces for theorem id {theorem_id!r}")
    return manifest[theorem_id]


# ---------------------------------------------------------------------------
# verification driver


def _complex_record(space: SearchSpace, mask: int, c: Complex, clauses: list[str]) -> dict:
    return {
        "space": space.to_json(),
        "mask": mask,
        "n": c.n,
        "facets": [list(f) for f in c.facets()],
        "clauses": clauses,
    }


def _graph_record(space: SearchSpace, mask: int, g: Graph, clauses: list[str]) -> dict:
    return {
        "space": space.to_json(),
        "mask": mask,
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "clauses": clauses,
    }


def _engine_eligible(td: TheoremDef, space: SearchSpace, field: FieldSpec) -> bool:
    if td.engine_hook is None or field.key != 2 or space.kind == "fixture":
        return False
    if (1 << space.slot_count()) < ENGINE_MIN_INSTANCES:
        return False
    if td.engine_hook in ("topin", "chardepth"):
        return (space.kind == "complex" and space.d == space.n - 2
                and 3 <= space.n <= 7 and space.cover)
    if td.engine_hook in ("main2", "corlinear", "froberg"):
        return space.kind == "graph" and 3 <= space.n <= 7 and space.cover
    if td.engine_hook == "corbk":
        return (space.kind == "complex" and int(space.d) >= 1
                and space.n <= 7 and comb(space.n - 1, int(space.d) - 1) <= 15)
    return False


def _run_engine(td: TheoremDef, space: SearchSpace, cap: int,
                counterexamples: list[dict]) -> tuple[int, bool]:
    hook = td.engine_hook
    checked = 0
    truncated = False
    if hook == "corbk":
        eng = _engine.pure_space_engine(space.n, int(space.d))
        check = eng.corbk_clauses
        covers = eng.covers
        need_cover = space.cover
        decode = eng.decode_facets
    else:
        eng = _engine.codim2_engine(space.n)
        check = {
            "topin": eng.topin_clauses,
            "chardepth": eng.chardepth_clauses,
            "main2": eng.main2_clauses,
            "corlinear": eng.corlinear_clauses,
            "froberg": eng.froberg_clauses,
        }[hook]
        if space.kind == "graph":
            covers = eng.graph_no_isolated
            decode = None
        else:
            covers = eng.covers
            decode = eng.decode_facets
        need_cover = space.cover
    for s in space.iter_masks(covers if need_cover else None):
        checked += 1
        clauses = check(s)
        if clauses:
            if len(counterexamples) >= cap:
                truncated = True
                continue
            if decode is not None:
                rec = {
                    "space": space.to_json(),
                    "mask": s,
                    "n": space.n,
                    "facets": [list(labels_of(m)) for m in sorted(decode(s))],
                    "clauses": clauses,
                }
            else:
                g = Graph.from_adj(eng.adj_of_edges(s))
                rec = _graph_record(space, s, g, clauses)
            counterexamples.append(rec)
    return checked, truncated


def _run_generic(td: TheoremDef, space: SearchSpace, field: FieldSpec, cap: int,
                 counterexamples: list[dict]) -> tuple[int, bool]:
    checked = 0
    truncated = False
    if space.kind == "fixture":
        c = fixture_complex(space.fixture)
        clauses = td.checker(c, field)
        checked += 1
        if clauses:
            counterexamples.append(_complex_record(space, -1, c, clauses))
        return checked, truncated
    if td.kind == "graph":
        if space.kind != "graph":
            raise HarnessError(f"{td.theorem_id} expects graph spaces")
        slots = space.slot_masks()
        keep = _mask_cover(slots, (1 << space.n) - 1) if space.cover else None
        for s in space.iter_masks(keep):
            adj = [0] * space.n
            m = s
            while m:
                b = m & -m
                m ^= b
                pm = slots[b.bit_length() - 1]
                u = (pm & -pm).bit_length() - 1
                v = (pm ^ (pm & -pm)).bit_length() - 1
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            g = Graph.from_adj(tuple(adj))
            checked += 1
            clauses = td.checker(g, field)
            if clauses:
                if len(counterexamples) >= cap:
                    truncated = True
                    continue
                counterexamples.append(_graph_record(space, s, g, clauses))
        return checked, truncated
    slots = space.slot_masks()
    keep = _mask_cover(slots, (1 << space.n) - 1) if space.cover else None
    for s in space.iter_masks(keep):
        masks = []
        m = s
        while m:
            b = m & -m
            m ^= b
            masks.append(slots[b.bit_length() - 1])
        c = Complex(space.n, tuple(masks), _trusted=True)
        checked += 1
        clauses = td.checker(c, field)
        if clauses:
            if len(counterexamples) >= cap:
                truncated = True
                continue
            counterexamples.append(_complex_record(space, s, c, clauses))
    return checked, truncated


def verify_theorem(
    theorem_id: str,
    spaces: list[SearchSpace] | None = None,
    field: FieldSpec = GF2,
    max_n: int | None = None,
    sample: int | None = None,
    seed: int | None = None,
    cap: int = 64,
) -> VerificationResult:
    """Run one theorem's clauses over its spaces; zero counterexamples expected.

    ``max_n`` filters the default spaces; ``sample``/``seed`` convert every
    space to seeded sampling.  Results are deterministic functions of
    (theorem_id, spaces, field, seed).
    """
    td = THEOREMS.get(theorem_id)
    if td is None:
        raise HarnessError(
            f"unknown theorem id {theorem_id!r} (known: {', '.join(sorted(THEOREMS))})"
        )
    if spaces is None:
        spaces = default_spaces(theorem_id)
    if max_n is not None:
        spaces = [sp for sp in spaces if sp.kind == "fixture" or sp.n <= max_n]
    if sample is not None:
        if seed is None:
            raise HarnessError("sampling override needs a seed")
        spaces = [
            sp if sp.kind == "fixture" else SearchSpace(
                n=sp.n, d=sp.d, mode="sample", count=sample, seed=seed, cover=sp.cover)
            for sp in spaces
        ]
    for sp in spaces:
        sp.validate()

    t0 = time.perf_counter()
    counterexamples: list[dict] = []
    checked = 0
    truncated = False
    for sp in spaces:
        if _engine_eligible(td, sp, field):
            got, trunc = _run_engine(td, sp, cap, counterexamples)
        else:
            got, trunc = _run_generic(td, sp, field, cap, counterexamples)
        checked += got
        truncated = truncated or trunc
    modes = {sp.mode for sp in spaces if sp.kind != "fixture"}
    mode = modes.pop() if len(modes) == 1 else ("mixed" if modes else "fixture")
    return VerificationResult(
        theorem_id=theorem_id,
        field=str(field),
        spaces=[sp.to_json() for sp in spaces],
        mode=mode,
        instances_checked=checked,
        counterexamples=counterexamples,
        seed=seed,
        elapsed_s=round(time.perf_counter() - t0, 3),
        truncated=truncated,
    )


def replay_counterexample(theorem_id: str, record: dict, field: FieldSpec = GF2) -> list[str]:
    """Re-run the generic checker on one reported instance (engine-independent)."""
    td = THEOREMS.get(theorem_id)
    if td is None:
        raise HarnessError(f"unknown theorem id {theorem_id!r}")
    if "facets" in record:
        instance: Complex | Graph = Complex.from_facets(record["facets"], n=record["n"])
    else:
        instance = Graph(record["n"], [tuple(e) for e in record["edges"]])
    return td.checker(instance, field)


def theorem_ids() -> list[str]:
    return sorted(THEOREMS)
