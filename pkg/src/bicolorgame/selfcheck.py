"""Cross-validation suite runnable on any graph; backs the CLI selftest.

Each check verifies one identity tying independent computation routes
together.  A graph passing all of them has consistent face tracing,
linear algebra, medial tracing, polynomial enumeration and homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Iterable

from . import gf2, spaces
from .brt import (
    brt_polynomial,
    medial_component_count_via_brt,
    tutte_by_rank_oracle,
    whitney_rank_polynomial,
)
from .embedded import EmbeddedGraph
from .homology import class_count_homology, strand_kernel_basis, strand_kernel_dim, tree_cotree
from .medial import strand_space, trace_medial
from .oracle import enumerate_classes
from .representatives import planar_representatives, verify_representatives

ORACLE_LIMIT = 16  # full coloring sweeps stay cheap below this edge count


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def check_euler(g: EmbeddedGraph) -> CheckResult:
    v, e, f = g.vertex_count, g.edge_count, g.face_count
    ok = v - e + f == 2 - 2 * g.genus and g.genus >= 0
    return CheckResult("euler-genus", ok, f"v={v} e={e} f={f} genus={g.genus}")


def check_incidence_shape(g: EmbeddedGraph) -> CheckResult:
    for mat in (g.incidence_matrix, g.dual_incidence_matrix):
        for col in range(mat.ncols):
            ones = sum((r >> col) & 1 for r in mat.rows)
            if ones not in (0, 2):
                return CheckResult("incidence-columns", False, f"column {col} has {ones} ones")
        acc = 0
        for r in mat.rows:
            acc ^= r
        if acc:
            return CheckResult("incidence-columns", False, "rows do not sum to zero")
    return CheckResult("incidence-columns", True)


def check_dual_involution(g: EmbeddedGraph) -> CheckResult:
    d = g.dual()
    dd = d.dual()
    ok = (
        d.vertex_count == g.face_count
        and d.face_count == g.vertex_count
        and dd.vertex_count == g.vertex_count
        and dd.face_count == g.face_count
        and sorted(dd.incidence_matrix.rows) == sorted(g.incidence_matrix.rows)
        and d.incidence_matrix.rows == g.dual_incidence_matrix.rows
        and d.genus == g.genus
    )
    return CheckResult("dual-involution", ok)


def check_orthogonality(g: EmbeddedGraph) -> CheckResult:
    for r1 in g.incidence_matrix.rows:
        for r2 in g.dual_incidence_matrix.rows:
            if gf2.dot(r1, r2):
                return CheckResult("dual-cuts-are-cycles", False, "a face row meets a vertex row oddly")
    return CheckResult("dual-cuts-are-cycles", True)


def check_dimension_identities(g: EmbeddedGraph) -> CheckResult:
    s = spaces.summarize(g)
    ok = (
        s.dim_cocycle == max(g.vertex_count - 1, 0)
        and s.dim_dual_cocycle == max(g.face_count - 1, 0)
        and s.dim_sum == s.dim_cocycle + s.dim_dual_cocycle - s.dim_intersection
        and s.class_exponent == 2 * s.genus + s.dim_intersection
        and (g.edge_count - s.dim_cocycle) - s.dim_dual_cocycle == 2 * s.genus
    )
    return CheckResult("dimension-identities", ok, f"exponent={s.class_exponent}")


def check_counts_agree(g: EmbeddedGraph) -> CheckResult:
    direct = spaces.class_count_direct(g)
    homological = class_count_homology(g)
    detail = f"direct={direct} homology={homological}"
    ok = direct == homological
    if ok and g.edge_count <= ORACLE_LIMIT:
        swept = enumerate_classes(g).class_count
        detail += f" oracle={swept}"
        ok = swept == direct
    return CheckResult("three-route-count", ok, detail)


def check_strand_lemma(g: EmbeddedGraph) -> CheckResult:
    mc = trace_medial(g)
    if g.edge_count == 0:
        return CheckResult("strand-lemma", mc.count == 0)
    total = 0
    for v in mc.trace_vectors:
        total ^= v
    if total:
        return CheckResult("strand-lemma", False, "trace vectors do not sum to zero")
    for j in range(g.edge_count):
        if sum(mult[j] for mult in mc.multiplicities) != 2:
            return CheckResult("strand-lemma", False, f"edge {j} not crossed exactly twice")
    if gf2.rank(strand_space(mc)) != mc.count - 1:
        return CheckResult("strand-lemma", False, "strand space has wrong dimension")
    cycles = gf2.kernel_basis(g.incidence_matrix)
    dual_cycles = gf2.kernel_basis(g.dual_incidence_matrix)
    for v in mc.trace_vectors:
        if not (gf2.in_row_space(cycles, v) and gf2.in_row_space(dual_cycles, v)):
            return CheckResult("strand-lemma", False, "a trace vector is not a bi-directional cycle")
    return CheckResult("strand-lemma", True, f"c={mc.count}")


def check_component_count_identity(g: EmbeddedGraph) -> CheckResult:
    if g.edge_count == 0:
        return CheckResult("polynomial-strand-count", True, "skipped (edgeless)")
    c_poly = medial_component_count_via_brt(g)
    c_trace = trace_medial(g).count
    return CheckResult(
        "polynomial-strand-count", c_poly == c_trace, f"poly={c_poly} trace={c_trace}"
    )


def check_inclusions(g: EmbeddedGraph) -> CheckResult:
    inter = gf2.row_space_intersection_basis(g.incidence_matrix, g.dual_incidence_matrix)
    strands = strand_space(trace_medial(g))
    cycles = gf2.kernel_basis(g.incidence_matrix)
    dual_cycles = gf2.kernel_basis(g.dual_incidence_matrix)
    both = gf2.row_space_intersection_basis(cycles, dual_cycles)
    for v in inter.rows:
        if not gf2.in_row_space(strands, v):
            return CheckResult("inclusion-chain", False, "U cap U* not inside the strand space")
    for v in strands.rows:
        if not gf2.in_row_space(both, v):
            return CheckResult("inclusion-chain", False, "strand space leaves the double cycle space")
    return CheckResult("inclusion-chain", True)


def check_kernel_subspace(g: EmbeddedGraph) -> CheckResult:
    kernel = strand_kernel_basis(g)
    inter = gf2.row_space_intersection_basis(g.incidence_matrix, g.dual_incidence_matrix)
    if not gf2.row_space_equal(kernel, inter):
        return CheckResult("homology-kernel", False, "ker on strands differs from U cap U*")
    dual_kernel = strand_kernel_basis(g.dual())
    if not gf2.row_space_equal(kernel, dual_kernel):
        return CheckResult("homology-kernel", False, "primal and dual kernels differ")
    return CheckResult("homology-kernel", True)


def check_tree_choice_invariance(g: EmbeddedGraph, trials: int = 3) -> CheckResult:
    b = strand_kernel_dim(g)
    for seed in range(trials):
        if strand_kernel_dim(g, tree_cotree(g, rng=Random(seed))) != b:
            return CheckResult("tree-choice-invariance", False, f"seed {seed} changed b")
    return CheckResult("tree-choice-invariance", True, f"b={b}")


def check_bot_rank(g: EmbeddedGraph) -> CheckResult:
    want = gf2.row_space_sum_dim(g.incidence_matrix, g.dual_incidence_matrix)
    face_of = g.faces.face_of_dart
    for v in range(g.vertex_count):
        incident = sorted({face_of[d] for d in g.rotations[v]}) or list(range(g.face_count))
        for f in incident:
            if gf2.rank(spaces.bot_matrix(g, v, f)) != want:
                return CheckResult("bot-rank", False, f"pair (v={v}, f={f})")
    return CheckResult("bot-rank", True, f"rank={want}")


def check_rank_oracle(g: EmbeddedGraph) -> CheckResult:
    ok = brt_polynomial(g).specialize_z_one() == whitney_rank_polynomial(g)
    return CheckResult("whitney-specialization", ok)


def check_genus_zero(g: EmbeddedGraph) -> CheckResult:
    if g.genus != 0:
        return CheckResult("plane-structure", True, "skipped (genus > 0)")
    cycles = gf2.kernel_basis(g.incidence_matrix)
    if not gf2.row_space_equal(g.dual_incidence_matrix, cycles):
        return CheckResult("plane-structure", False, "dual cut space differs from cycle space")
    b = spaces.bicycle_space(g).nrows
    t_value = tutte_by_rank_oracle(g, Fraction(-1), Fraction(-1))
    if abs(t_value) != 1 << b:
        return CheckResult("plane-structure", False, f"|T(-1,-1)|={abs(t_value)} vs 2^{b}")
    rs = planar_representatives(g)
    if not verify_representatives(g, rs):
        return CheckResult("plane-structure", False, "representatives failed verification")
    return CheckResult("plane-structure", True, f"bicycle dim={b}")


ALL_CHECKS: tuple[Callable[[EmbeddedGraph], CheckResult], ...] = (
    check_euler,
    check_incidence_shape,
    check_dual_involution,
    check_orthogonality,
    check_dimension_identities,
    check_counts_agree,
    check_strand_lemma,
    check_component_count_identity,
    check_inclusions,
    check_kernel_subspace,
    check_tree_choice_invariance,
    check_bot_rank,
    check_rank_oracle,
    check_genus_zero,
)


def run_all_checks(g: EmbeddedGraph) -> list[CheckResult]:
    return [check(g) for check in ALL_CHECKS]


def failed_checks(results: Iterable[CheckResult]) -> list[CheckResult]:
    return [r for r in results if not r.ok]
