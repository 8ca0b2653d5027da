"""Per-graph analysis: class flags, certificates, toric verdicts, contraction.

Quadratic generation is decided on decomposition leaves: connected
components first, then clique-cutset atoms, combined by conjunction.  Any
stage that runs over its budget is recorded as skipped; nothing is guessed.
"""

from __future__ import annotations

import os
import time
from dataclasses import asdict, dataclass, fields

from .contract import hertz_color, is_perfectly_contractile
from .errors import BudgetExceeded
from .graph import (Graph, canonical_key, clique_number, connected_components, enumerate_stable_sets,
                    induced_subgraph)
from .io import encode_graph6, vertex_list
from .recognize import (clique_cutset_atoms, even_pairs, find_antihole, find_hole, find_odd_stretcher,
                        find_perfect_ordering, has_dominating_stable_set, is_generalized_split,
                        is_meyniel)
from .toric.groebner import initial_ideal_profile, is_quadratically_generated, toric_groebner
from .toric.monomials import Binomial
from .toric.perfect_order import perfect_order_index

SCHEMA = 1
SKIPPED = "skipped"

CONSISTENT_TRUE = "consistent-both-true"
CONSISTENT_FALSE = "consistent-both-false"
COUNTEREXAMPLE_A = "COUNTEREXAMPLE-A"
COUNTEREXAMPLE_B = "COUNTEREXAMPLE-B"
IMPERFECT_QUADRATIC = "imperfect-quadratic"
VERDICTS = (CONSISTENT_TRUE, CONSISTENT_FALSE, COUNTEREXAMPLE_A, COUNTEREXAMPLE_B,
            IMPERFECT_QUADRATIC, SKIPPED)


@dataclass
class Budgets:
    stable_sets: int = 20000
    gb_vars: int = 200
    meyniel_steps: int = 5_000_000
    ordering_n: int = 9
    gsp_n: int = 12
    contract_n: int = 8
    full_gb_vars: int = 120

    ENV_PREFIX = "STELLATE_BUDGET_"

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "Budgets":
        """Defaults, then ``STELLATE_BUDGET_<FIELD>`` variables, then overrides."""
        environ = os.environ if environ is None else environ
        b = cls()
        for f in fields(cls):
            raw = environ.get(cls.ENV_PREFIX + f.name.upper())
            if raw is not None:
                setattr(b, f.name, int(raw))
        for k, v in overrides.items():
            if v is not None:
                setattr(b, k, int(v))
        return b

    def as_dict(self) -> dict:
        return asdict(self)


# -- serialisation helpers -----------------------------------------------------------


def binomial_json(b: Binomial, sets) -> dict:
    def side(u):
        return [[sets[var], e] for var, e in u.exps]
    return {"lead": side(b.lead), "tail": side(b.tail), "degree": b.degree}


def _hole_json(cert):
    return None if cert is None else {"cycle": [v + 1 for v in cert.cycle], "length": cert.length,
                                      "parity": cert.parity}


def _stretcher_json(emb):
    if emb is None:
        return None
    return {"s": emb.s, "t": emb.t, "u": emb.u, "map": {k: v + 1 for k, v in emb.mapping}}


# -- quadratic generation by decomposition -----------------------------------------------

_LEAF_CACHE: dict[tuple[bytes, int, int], tuple] = {}


def _leaf_verdict(h: Graph, budgets: Budgets):
    """``(verdict, witness_json, max_degree)`` for one atom; cached by isomorphism class."""
    if h.is_clique():
        return True, None, 0
    key = (canonical_key(h, 64), budgets.stable_sets, budgets.gb_vars)
    if key in _LEAF_CACHE:
        return _LEAF_CACHE[key]
    idx = enumerate_stable_sets(h, budgets.stable_sets)
    res = is_quadratically_generated(idx, max_vars=budgets.gb_vars)
    out = (res.quadratic, None if res.witness is None else binomial_json(res.witness, idx.sets),
           res.basis.max_degree)
    _LEAF_CACHE[key] = out
    return out


def decomposition_leaves(g: Graph) -> list[int]:
    """Vertex bitsets of the clique-cutset atoms of every component."""
    leaves = []
    for comp in connected_components(g):
        h, back = induced_subgraph(g, comp)
        for atom in clique_cutset_atoms(h):
            leaves.append(sum(1 << back[v] for v in range(h.n) if atom >> v & 1))
    return leaves


def quadratic_by_decomposition(g: Graph, budgets: Budgets | None = None) -> dict:
    """Conjunction of the leaf verdicts.  ``quadratic`` is ``None`` when some
    leaf was over budget and no leaf failed."""
    budgets = budgets or Budgets()
    leaves = decomposition_leaves(g)
    out = {"leaves": [vertex_list(m) for m in leaves], "quadratic": True, "witness": None,
           "skipped_leaves": []}
    for leaf in leaves:
        h = induced_subgraph(g, leaf)[0]
        try:
            ok, witness, _ = _leaf_verdict(h, budgets)
        except BudgetExceeded:
            out["skipped_leaves"].append(vertex_list(leaf))
            continue
        if not ok:
            out["quadratic"] = False
            out["witness"] = {"leaf": vertex_list(leaf), "binomial": witness}
            return out
    if out["skipped_leaves"]:
        out["quadratic"] = None
    return out


# -- the report ----------------------------------------------------------------------


def classify(quadratic, perfect: bool, forbidden: bool) -> str:
    """Place a graph relative to the conjecture.

    ``forbidden`` means an even antihole or an odd stretcher was found; those
    provably rule out quadratic generation, so seeing both is a bug signal.
    """
    if quadratic is None:
        return SKIPPED
    if quadratic and forbidden:
        return COUNTEREXAMPLE_A
    if not perfect:
        return IMPERFECT_QUADRATIC if quadratic else CONSISTENT_FALSE
    if not quadratic and not forbidden:
        return COUNTEREXAMPLE_B
    return CONSISTENT_TRUE if quadratic else CONSISTENT_FALSE


class _Stages:
    def __init__(self, report: dict):
        self.report = report

    def run(self, name, fn):
        t0 = time.perf_counter()
        try:
            value = fn()
        except BudgetExceeded as exc:
            self.report["skipped"].append({"stage": name, "reason": str(exc)})
            value = SKIPPED
        self.report["timing"][name] = round(time.perf_counter() - t0, 6)
        return value


def analyze(g: Graph, budgets: Budgets | None = None, check_conjecture1: bool = False,
            hertz_seed: int = 0) -> dict:
    """Full report for one graph as a JSON-ready dict (``"schema": 1``)."""
    budgets = budgets or Budgets()
    rep: dict = {"schema": SCHEMA, "graph6": encode_graph6(g), "n": g.n, "m": g.num_edges,
                 "flags": {}, "certificates": {}, "toric": {}, "contraction": {},
                 "skipped": [], "timing": {}}
    st = _Stages(rep)
    flags, certs = rep["flags"], rep["certificates"]

    odd_hole = st.run("odd_hole", lambda: find_hole(g, "odd", 5))
    odd_anti = st.run("odd_antihole", lambda: find_antihole(g, "odd"))
    even_anti = st.run("even_antihole", lambda: find_antihole(g, "even"))
    stretcher = st.run("odd_stretcher", lambda: find_odd_stretcher(g))
    certs["hole"] = _hole_json(odd_hole)
    certs["antihole"] = _hole_json(odd_anti or even_anti)
    certs["even_antihole"] = _hole_json(even_anti)
    certs["stretcher"] = _stretcher_json(stretcher)
    perfect = odd_hole is None and odd_anti is None
    flags["perfect"] = perfect

    meyniel = st.run("meyniel", lambda: is_meyniel(g, budgets.meyniel_steps))
    flags["meyniel"] = meyniel if meyniel == SKIPPED else meyniel[0]

    def ordering():
        return find_perfect_ordering(g, budgets.ordering_n)
    order = st.run("perfect_order", ordering)
    flags["perfectly_orderable"] = order if order == SKIPPED else order is not None
    certs["ordering"] = None if order in (None, SKIPPED) else [v + 1 for v in order]

    leaves = st.run("clique_cutset", lambda: decomposition_leaves(g))
    if leaves != SKIPPED:
        certs["clique_cutset"] = {"atoms": [vertex_list(m) for m in leaves]}
        flags["clique_decomposable"] = len(leaves) > len(connected_components(g))

    gsp = st.run("generalized_split", lambda: is_generalized_split(g, budgets.gsp_n))
    flags["generalized_split"] = gsp if gsp == SKIPPED else gsp is not None
    certs["gsp_partition"] = None if gsp in (None, SKIPPED) else {
        "side": gsp.side, "c0": vertex_list(gsp.c0), "blocks": [vertex_list(b) for b in gsp.blocks]}

    def dominating():
        enumerate_stable_sets(g, budgets.stable_sets)  # raises when over budget
        return has_dominating_stable_set(g)
    dom = st.run("strongly_perfect_evidence", dominating)
    flags["dominating_stable_set"] = dom if dom == SKIPPED else (None if dom is None else vertex_list(dom))

    # toric side
    toric = rep["toric"]
    quad = st.run("quadratic_generation", lambda: quadratic_by_decomposition(g, budgets))
    if quad == SKIPPED:
        toric["quadratically_generated"] = None
    else:
        toric.update(quad)
        toric["quadratically_generated"] = quad["quadratic"]
        del toric["quadratic"]

    def stable_count():
        return len(enumerate_stable_sets(g, budgets.stable_sets))
    toric["stable_sets"] = st.run("stable_sets", stable_count)

    def default_profile():
        idx = enumerate_stable_sets(g, budgets.stable_sets)
        if len(idx) > budgets.full_gb_vars:
            raise BudgetExceeded(f"{len(idx)} variables exceed the whole-graph basis budget")
        gb = toric_groebner(idx, max_vars=budgets.gb_vars)
        prof = initial_ideal_profile(gb)
        return {"order": "default", "size": len(gb), "degrees": gb.degree_histogram(),
                "max_degree": prof.max_degree, "quadratic": prof.quadratic, "squarefree": prof.squarefree}
    toric["gb_profiles"] = [st.run("groebner_default", default_profile)]

    if order not in (None, SKIPPED):
        def perfect_profile():
            idx, mono = perfect_order_index(g, order, budgets.stable_sets)
            if len(idx) > budgets.full_gb_vars:
                raise BudgetExceeded(f"{len(idx)} variables exceed the whole-graph basis budget")
            gb = toric_groebner(idx, mono, max_vars=budgets.gb_vars)
            prof = initial_ideal_profile(gb)
            return {"order": "perfect-order", "size": len(gb), "max_degree": prof.max_degree,
                    "quadratic": prof.quadratic, "squarefree": prof.squarefree}
        toric["gb_profiles"].append(st.run("groebner_perfect_order", perfect_profile))

    # contraction side
    con = rep["contraction"]
    con["even_pairs"] = [[x + 1, y + 1] for x, y in even_pairs(g)]
    if flags["meyniel"] is True and g.n:
        def hertz():
            run = hertz_color(g, min(hertz_seed, g.n - 1))
            return {"seed": run.seed + 1, "colors": run.num_colors, "omega": clique_number(g),
                    "stable_set": vertex_list(run.stable_set), "steps": len(run.trace)}
        con["hertz"] = st.run("hertz_color", hertz)
    if check_conjecture1 or g.n <= 6:
        def contractile():
            if g.n > budgets.contract_n:
                raise BudgetExceeded(f"perfectly-contractile check limited to n <= {budgets.contract_n}")
            ok, failing = is_perfectly_contractile(g, max(budgets.contract_n, 1))
            return {"perfectly_contractile": ok, "failing": None if failing is None else vertex_list(failing)}
        con["conjecture1"] = st.run("perfectly_contractile", contractile)

    forbidden = even_anti not in (None, SKIPPED) or stretcher not in (None, SKIPPED)
    structures_known = SKIPPED not in (odd_hole, odd_anti, even_anti, stretcher)
    verdict = classify(toric["quadratically_generated"], perfect, forbidden)
    if not structures_known and verdict != COUNTEREXAMPLE_A:
        verdict = SKIPPED
    rep["verdict"] = verdict
    rep["counterexample"] = verdict in (COUNTEREXAMPLE_A, COUNTEREXAMPLE_B)

    c1 = con.get("conjecture1")
    if isinstance(c1, dict):
        any_antihole = odd_anti is not None or even_anti is not None
        clean = odd_hole is None and not any_antihole and stretcher is None
        c1["forbidden_free"] = clean
        c1["consistent"] = c1["perfectly_contractile"] == clean
        if not c1["consistent"]:
            rep["counterexample"] = True
            rep["verdict_conjecture1"] = "DISCREPANCY"
    return rep
