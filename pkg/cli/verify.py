"""
Suíte de verificação completa.

Cada suíte devolve um dicionário no formato dos validadores
{"name", "is_valid", "warnings", "skipped", "checked"}; falhas de ConsistencyError
viram avisos da suíte e BoundExceededError vira instância pulada, sem
interromper as demais. Suítes caras têm teto próprio de n+m; as assinaturas
acima do teto entram em "skipped". Nada aqui depende de tempo ou de
aleatoriedade: a saída é idêntica entre execuções.
"""

import itertools
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

import networkx as nx

from core.config import Limits
from core.errors import BoundExceededError, ConsistencyError
from core.logger import get_logger
from core.schemas import SuiteEntry, VerifyReport
from counting.degrees import check_exponent_identities, degree_table
from counting.gamma import GammaInstance, gamma_count_bruteforce, gamma_count_closed, gamma_count_fast
from counting.oracle import isotropic_subspace_oracle, subspace_count
from deformation.residues import sfol_ideal, v_image_residues
from deformation.tangent import foliation_generators, tangent_system
from deformation.universal import deformation_context, is_free_of_rank, universal_deformation
from dieudonne.canonical import canonical_word, vq_image
from dieudonne.checks import compositions_vanish, exactness, lattice_oracle, p_zero, p_zero_check, pairing_checks
from dieudonne.hasse import hasse_matrix
from dieudonne.lattice import r_of
from dieudonne.module import standard_fol_module
from gf.derivation import p_power_of_derivation
from gf.field import FieldContext, fq_ops
from weyl.bruhat import bruhat_leq, bruhat_leq_oracle
from weyl.eo_order import eo_leq
from weyl.permutation import all_permutations
from weyl.poset import DIAGRAM_4_2, bruhat_minimal_in_s_sharp, compare_with_diagram, eo_minimal_in_s_sharp, eo_poset, eo_relation
from weyl.shuffles import (
    ShuffleLabel,
    a_sigma,
    enumerate_shuffles,
    s_sharp_embedding,
    s_sharp_members,
    shuffle_length,
    special_elements,
    stratum_info,
    two_block_words,
)

logger = get_logger(__name__)

BRUHAT_MAX_N = 5
POSET_MAX_NM = 7
LATTICE_MAX_NM = 9
DEFORMATION_MAX_NM = 9
# iterações do laço externo em Γ₂ (contagem exaustiva e rápida)
GAMMA2_LOOP_MAX = 10**5
DIAGRAM_LENGTHS = [8, 7, 6, 6, 5, 5, 4, 4, 4, 3, 3, 2, 2, 1, 0]


def _signatures(max_nm: int, allow_zero: bool = False) -> List[Tuple[int, int]]:
    low = 0 if allow_zero else 1
    return [(n, m) for n in range(1, max_nm + 1) for m in range(low, n) if n + m <= max_nm]


def _capped(max_nm: int, cap: int, allow_zero: bool = False) -> Tuple[List[Tuple[int, int]], List[str]]:
    """Assinaturas até o teto e rótulos das que ficaram de fora."""
    inside = _signatures(min(max_nm, cap), allow_zero)
    outside = [f"({n},{m}): n+m > {cap}" for n, m in _signatures(max_nm, allow_zero) if n + m > cap]
    return inside, outside


def _guarded(warnings: List[str], skipped: List[str], label: str, check: Callable[[], List[str]]) -> bool:
    """
    Executa check com o rótulo da instância.

    Returns:
        False se a instância foi pulada por BoundExceededError
    """
    try:
        warnings.extend(f"{label}: {w}" for w in check())
    except ConsistencyError as exc:
        warnings.append(f"{label}: {exc}")
    except BoundExceededError as exc:
        logger.warning(f"⚠️ {label} pulada: {exc}")
        skipped.append(f"{label}: {exc}")
        return False
    return True


def _result(name: str, warnings: List[str], checked: int, skipped: Optional[List[str]] = None) -> Dict[str, Any]:
    return {
        "name": name,
        "is_valid": not warnings,
        "warnings": warnings,
        "skipped": skipped or [],
        "checked": checked,
    }


# === WEYL ===

def shuffle_suite(max_nm: int, limits: Limits) -> Dict[str, Any]:
    """Contagens, comprimento = inversões, S_♯ e mergulho ι."""
    warnings: List[str] = []
    signatures = _signatures(max_nm, allow_zero=True)

    def check(n: int, m: int) -> List[str]:
        out = []
        labels = enumerate_shuffles(n, m, limits)
        if len(labels) != comb(n + m, m):
            out.append(f"|Π| = {len(labels)}, esperado {comb(n + m, m)}")
        infos = [stratum_info(s) for s in labels]
        if m == 0:
            return out
        members = s_sharp_members(n, m, limits)
        if len(members) != comb(n, m):
            out.append(f"|S_♯| = {len(members)}, esperado {comb(n, m)}")
        image = {s_sharp_embedding(w, n, m).w for w in two_block_words(n - m, m)}
        if image != {s.w for s in members}:
            out.append("imagem de ι diferente de S_♯")
        special = special_elements(n, m)
        top = [info.label.w for info in infos if info.length == n * m]
        if top != [special.longest]:
            out.append(f"shuffles de comprimento nm: {[str(w) for w in top]}")
        fol = ShuffleLabel(special.w_fol, n, m)
        if shuffle_length(fol) != m * m or a_sigma(fol) != n - m:
            out.append(f"w_fol = {special.w_fol} com l={shuffle_length(fol)}, a_Σ={a_sigma(fol)}")
        return out

    skipped: List[str] = []
    checked = sum(_guarded(warnings, skipped, f"({n},{m})", lambda: check(n, m)) for n, m in signatures)
    return _result("shuffles", warnings, checked, skipped)


def bruhat_suite(max_nm: int) -> Dict[str, Any]:
    """Critério de tableau contra o oráculo de coberturas em 𝔖_N."""
    warnings: List[str] = []
    checked = 0
    for size in range(1, min(max_nm, BRUHAT_MAX_N) + 1):
        perms = list(all_permutations(size))
        for u, v in itertools.product(perms, repeat=2):
            if bruhat_leq(u, v) != bruhat_leq_oracle(u, v):
                warnings.append(f"({u}, {v}): tableau e oráculo divergem")
            checked += 1
    return _result("bruhat", warnings, checked)


def poset_suite(max_nm: int, limits: Limits) -> Dict[str, Any]:
    """Ordem parcial, extremos, cadeia para m=1, mínimo de S_♯ e diagrama de (4,2)."""
    warnings: List[str] = []
    signatures, capped = _capped(max_nm, POSET_MAX_NM, allow_zero=True)

    def check(n: int, m: int) -> List[str]:
        out = []
        labels = enumerate_shuffles(n, m, limits)
        if not all(eo_leq(s, s, limits) for s in labels):
            out.append("⪯ não reflexiva")
        relation = eo_relation(n, m, limits)
        if set(nx.transitive_closure(relation, reflexive=False).edges) != set(relation.edges):
            out.append("⪯ não transitiva")
        poset = eo_poset(n, m, limits, relation=relation)
        closure = poset.closure()
        for lower, upper in itertools.permutations(labels, 2):
            if bruhat_leq(lower.w, upper.w) and (upper.w, lower.w) not in closure:
                out.append(f"{lower} <= {upper} em Bruhat mas não em ⪯")
        size = n + m
        top = [info.label.w for info in poset.nodes if info.length == n * m]
        if poset.maximal() != top or poset.minimal() != [labels[0].w] or labels[0].w.inversions() != 0:
            out.append(f"extremos: max {poset.maximal()}, min {poset.minimal()}")
        if m == 1 and not (poset.is_chain() and len(poset.nodes) == n + 1):
            out.append("m=1 não é cadeia de n+1 nós")
        if m >= 1:
            w_fol = special_elements(n, m).w_fol
            if eo_minimal_in_s_sharp(poset) != [w_fol]:
                out.append(f"mínimos EO de S_♯: {[str(w) for w in eo_minimal_in_s_sharp(poset)]}")
            if bruhat_minimal_in_s_sharp(poset) != [w_fol]:
                out.append(f"mínimos de Bruhat de S_♯: {[str(w) for w in bruhat_minimal_in_s_sharp(poset)]}")
        if (n, m) == (4, 2):
            comparison = compare_with_diagram(poset, DIAGRAM_4_2)
            if not comparison.closure_equal:
                out.append("fecho transitivo difere do diagrama de (4,2)")
            lengths = sorted((info.length for info in poset.nodes), reverse=True)
            if lengths != DIAGRAM_LENGTHS:
                out.append(f"comprimentos {lengths}")
        if size and len(poset.nodes) != comb(size, m):
            out.append(f"{len(poset.nodes)} nós")
        return out

    skipped: List[str] = list(capped)
    checked = sum(_guarded(warnings, skipped, f"({n},{m})", lambda: check(n, m)) for n, m in signatures)
    return _result("eo_poset", warnings, checked, skipped)


# === GF ===

def field_suite(p: int) -> Dict[str, Any]:
    """Axiomas de corpo e Frobenius, exaustivo em F_{p^2}."""
    warnings: List[str] = []
    ops = fq_ops(FieldContext.for_prime(p))
    ctx = ops.ctx
    elements = list(ctx.elements())
    for x, y, z in itertools.product(elements, repeat=3):
        if ops.mul(ops.mul(x, y), z) != ops.mul(x, ops.mul(y, z)):
            warnings.append(f"associatividade falha em ({x}, {y}, {z})")
        if ops.mul(x, ops.add(y, z)) != ops.add(ops.mul(x, y), ops.mul(x, z)):
            warnings.append(f"distributividade falha em ({x}, {y}, {z})")
    for x in elements:
        if x and ops.mul(x, ops.inv(x)) != ctx.one():
            warnings.append(f"inverso falha em {x}")
        if ops.frob(ops.frob(x)) != x:
            warnings.append(f"σ² != id em {x}")
        if not (ops.conj_trace(x).in_prime_field() and ops.conj_norm(x).in_prime_field()):
            warnings.append(f"traço ou norma fora de F_p em {x}")
        if x.in_prime_field() and ops.frob(x) != x:
            warnings.append(f"σ não fixa {x}")
    return _result("field", warnings, len(elements) ** 3)


def derivation_suite(p: int) -> Dict[str, Any]:
    warnings: List[str] = []
    result = p_power_of_derivation(p, 2 * p)
    warnings.extend(f"x^{c.monomial[0]} y^{c.monomial[1]}: {c.lhs} != {c.rhs}" for c in result.checks if not c.passed)
    if result.example_p_closed:
        warnings.append("x∂x + ∂y marcado como p-fechado")
    if not result.d_dy_p_closed:
        warnings.append("∂y marcado como não p-fechado")
    return _result("derivation", warnings, len(result.checks))


# === DIEUDONNÉ ===

def dieudonne_suite(max_nm: int, p: int) -> Dict[str, Any]:
    """Exatidão, composições, forma, P₀, V(Q) e Hasse."""
    warnings: List[str] = []
    ctx = FieldContext.for_prime(p)
    signatures = _signatures(max_nm)

    def check(n: int, m: int) -> List[str]:
        mod = standard_fol_module(n, m, ctx)
        out = []
        for result in (exactness(mod), compositions_vanish(mod), pairing_checks(mod), p_zero_check(mod)):
            out.extend(result["warnings"])
        fol = ShuffleLabel(special_elements(n, m).w_fol, n, m)
        if p_zero(mod).dim != a_sigma(fol):
            out.append(f"dim P₀ = {p_zero(mod).dim}, a_Σ(w_fol) = {a_sigma(fol)}")
        vq_image(n, m, ctx)
        if hasse_matrix(n, m, ctx).is_zero() != (2 * m <= n):
            out.append("Hasse nula não equivale a 2m <= n")
        return out

    skipped: List[str] = []
    checked = sum(_guarded(warnings, skipped, f"({n},{m})", lambda: check(n, m)) for n, m in signatures)
    return _result("dieudonne", warnings, checked, skipped)


def lattice_suite(max_nm: int, p: int) -> Dict[str, Any]:
    """Tabelas a±, b± contra o motor matricial em todo (a,b)."""
    warnings: List[str] = []
    ctx = FieldContext.for_prime(p)
    checked = 0
    signatures, skipped = _capped(max_nm, LATTICE_MAX_NM)
    for n, m in signatures:
        result = lattice_oracle(standard_fol_module(n, m, ctx))
        warnings.extend(f"({n},{m}): {w}" for w in result["warnings"])
        checked += result["checked"]
    return _result("lattice", warnings, checked, skipped)


def canonical_suite(max_nm: int, p: int) -> Dict[str, Any]:
    warnings: List[str] = []
    ctx = FieldContext.for_prime(p)
    signatures = [(n, m) for n, m in _signatures(max_nm) if n < 2 * m]

    def check(n: int, m: int) -> List[str]:
        r = r_of(n, m)
        word = canonical_word(n, m, ctx)
        if word.r != r:
            return [f"r = {word.r}, janela dá {r}"]
        return []

    skipped: List[str] = []
    checked = sum(_guarded(warnings, skipped, f"({n},{m})", lambda: check(n, m)) for n, m in signatures)
    return _result("canonical_word", warnings, checked, skipped)


# === DEFORMAÇÃO ===

def deformation_suite(max_nm: int, p: int) -> Dict[str, Any]:
    """Anulador, liberdade, resíduos, ideal e dimensões (nm, m², 0)."""
    warnings: List[str] = []
    ctx = FieldContext.for_prime(p)
    signatures, capped = _capped(max_nm, DEFORMATION_MAX_NM)

    def check(n: int, m: int) -> List[str]:
        out = []
        deformation = universal_deformation(n, m, ctx)
        mod = deformation_context(n, m, ctx).base
        vectors = list(deformation.omega_sigma + deformation.omega_sigma_bar)
        if not is_free_of_rank(mod, vectors, n + m):
            out.append(f"ω não é livre de posto {n + m}")
        v_image_residues(n, m, ctx)
        ideal = sfol_ideal(n, m, ctx)
        if len(ideal) != (n - m) * m:
            out.append(f"|ideal| = {len(ideal)}")
        dims = tangent_system(n, m, ctx)
        if dims.total_dim != dims.foliation_dim + len(ideal):
            out.append(f"total {dims.total_dim} != folheação + |ideal|")
        if len(foliation_generators(n, m, ctx)) != dims.foliation_dim:
            out.append("geradores da folheação não batem com a dimensão")
        return out

    skipped: List[str] = list(capped)
    checked = sum(_guarded(warnings, skipped, f"({n},{m})", lambda: check(n, m)) for n, m in signatures)
    return _result("deformation", warnings, checked, skipped)


# === CONTAGEM ===

def counting_suite(max_nm: int, p: int, limits: Limits) -> Dict[str, Any]:
    """Fechada = exaustiva = rápida = oráculo dentro dos limites, e identidades de graus."""
    warnings: List[str] = []
    skipped: List[str] = []
    checked = 0
    ctx = FieldContext.for_prime(p)
    for n, m in _signatures(max_nm):
        inst = GammaInstance(ctx, n, m, limits.count_guard)
        label = f"(p={p}, n={n}, m={m})"
        if inst.enumeration_size > inst.guard:
            skipped.append(f"{label}: enumeração {inst.enumeration_size} > guarda {inst.guard}")
            continue
        if inst.gamma2_count > GAMMA2_LOOP_MAX:
            skipped.append(f"{label}: |Γ₂| = {inst.gamma2_count} > {GAMMA2_LOOP_MAX}")
            continue
        closed = gamma_count_closed(p, n, m).value

        def check() -> List[str]:
            out = []
            brute = gamma_count_bruteforce(inst, workers=limits.workers)
            fast = gamma_count_fast(inst)
            if brute != closed or fast != closed:
                out.append(f"fechada {closed}, exaustiva {brute}, rápida {fast}")
            if checked == 0 and gamma_count_bruteforce(inst, parts=inst.gamma2_count) != brute:
                out.append("contagem depende da partição")
            if subspace_count(n + m, m, ctx.q) <= limits.oracle_guard:
                oracle = isotropic_subspace_oracle(inst, limits=limits)
                if oracle != closed:
                    out.append(f"oráculo {oracle} != {closed}")
                if checked == 0 and isotropic_subspace_oracle(inst, isotropy=False, limits=limits) != p ** (2 * n * m):
                    out.append("sem isotropia o oráculo não dá p^{2nm}")
            degree_table(p, n, m, ctx=ctx)
            return out

        checked += _guarded(warnings, skipped, label, check)
    _guarded(warnings, skipped, "expoentes", lambda: [] if check_exponent_identities(20) else ["nenhum par conferido"])
    return _result("counting", warnings, checked, skipped)


def run_suites(max_nm: int, p: int, limits: Limits) -> VerifyReport:
    """
    Executa todas as suítes até n+m <= max_nm.

    Returns:
        VerifyReport com uma entrada por suíte
    """
    logger.info(f"🔢 verify: max_nm={max_nm}, p={p}")
    results = [
        shuffle_suite(max_nm, limits),
        bruhat_suite(max_nm),
        poset_suite(max_nm, limits),
        field_suite(p),
        derivation_suite(p),
        dieudonne_suite(max_nm, p),
        lattice_suite(max_nm, p),
        canonical_suite(max_nm, p),
        deformation_suite(max_nm, p),
        counting_suite(max_nm, p, limits),
    ]
    for result in results:
        status = "✅" if result["is_valid"] else "❌"
        logger.info(f"{status} {result['name']}: {result['checked']} verificações, {len(result['warnings'])} avisos, {len(result['skipped'])} puladas")
    suites = [SuiteEntry(**result) for result in results]
    return VerifyReport(max_nm=max_nm, p=p, suites=suites, passed=all(s.is_valid for s in suites))
