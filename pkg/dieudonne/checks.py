"""
Verificações estruturais do módulo padrão: exatidão, composições nulas,
forma {,}_φ e o subespaço P₀.

Cada função devolve um dicionário no formato dos validadores
({"is_valid", "warnings", ...}) em vez de levantar exceção.
"""

from typing import Any, Dict, List

from dieudonne.canonical import apply_step
from dieudonne.lattice import LatticePair, lattice_step
from dieudonne.module import DieudonneModule, omega_indices
from dieudonne.subspace import Subspace, map_image, map_kernel, type_profile


def exactness(mod: DieudonneModule) -> Dict[str, Any]:
    """im F = ker V e im V = ker F, ambos de dimensão n+m."""
    warnings: List[str] = []
    im_f = map_image(mod, "F", Subspace.whole(mod, twist=1))
    ker_v = map_kernel(mod, "V")
    im_v = map_image(mod, "V", Subspace.whole(mod))
    ker_f = map_kernel(mod, "F")

    if im_f != ker_v:
        warnings.append("im F != ker V")
    if im_v != ker_f:
        warnings.append("im V != ker F")
    for name, sub in (("im F", im_f), ("ker V", ker_v), ("im V", im_v), ("ker F", ker_f)):
        if sub.dim != mod.N:
            warnings.append(f"dim {name} = {sub.dim}, esperado {mod.N}")
    if ker_v != Subspace.lattice(mod, mod.n, mod.m):
        warnings.append("ker V != D(n,m)")
    if ker_f != Subspace.of_indices(mod, omega_indices(mod), twist=1):
        warnings.append("ker F != ω^(p)")
    return {"is_valid": not warnings, "warnings": warnings}


def compositions_vanish(mod: DieudonneModule) -> Dict[str, Any]:
    """F(im V) = 0 e V(im F) = 0."""
    warnings: List[str] = []
    f_after_v = map_image(mod, "F", map_image(mod, "V", Subspace.whole(mod)))
    v_after_f = map_image(mod, "V", map_image(mod, "F", Subspace.whole(mod, twist=1)))
    if f_after_v.dim:
        warnings.append(f"F∘V tem posto {f_after_v.dim}")
    if v_after_f.dim:
        warnings.append(f"V∘F tem posto {v_after_f.dim}")
    return {"is_valid": not warnings, "warnings": warnings}


def pairing_checks(mod: DieudonneModule) -> Dict[str, Any]:
    """ω isotrópico maximal de tipo (n,m); forma alternada; Σ⊥Σ e Σ̄⊥Σ̄."""
    warnings: List[str] = []
    gram = mod.pairing_matrix
    if gram.transpose() != -gram:
        warnings.append("{,}_φ não é alternada")

    N = mod.N
    e_rows = mod.unit_rows(range(N))
    f_rows = mod.unit_rows(range(N, 2 * N))
    if not mod.pair(e_rows, e_rows).is_zero():
        warnings.append("Σ emparelha com Σ")
    if not mod.pair(f_rows, f_rows).is_zero():
        warnings.append("Σ̄ emparelha com Σ̄")

    omega = omega_subspace(mod)
    if omega != Subspace.of_indices(mod, omega_indices(mod)):
        warnings.append("ker F não reproduz ω = Span{e_[1,n-m], e_[n+1,n+m], f_[m+1,2m]}")
    if not mod.pair(omega.basis, omega.basis).is_zero():
        warnings.append("ω não é isotrópico")
    if omega.dim != N:
        warnings.append(f"dim ω = {omega.dim}, esperado {N}")
    profile = type_profile(omega)
    if profile != (mod.n, mod.m):
        warnings.append(f"ω tem tipo {profile}, esperado ({mod.n},{mod.m})")
    if gram.rank() != mod.dim:
        warnings.append("{,}_φ degenerada")
    return {"is_valid": not warnings, "warnings": warnings, "omega_type": profile}


def omega_subspace(mod: DieudonneModule) -> Subspace:
    """
    ω lido do módulo: ker F ⊂ D^(p) com σ⁻¹ aplicado às coordenadas.

    Em F_{p²} vale σ⁻¹ = σ, então basta um frob na base de ker F.
    """
    ker_f = map_kernel(mod, "F")
    return Subspace.span(ker_f.basis.frob(), 0)


def p_zero(mod: DieudonneModule) -> Subspace:
    """P₀ = P ∩ ker V com P = ω(Σ)."""
    return omega_subspace(mod).sigma_part().intersect(map_kernel(mod, "V"))


def p_zero_check(mod: DieudonneModule) -> Dict[str, Any]:
    warnings: List[str] = []
    p0 = p_zero(mod)
    expected = Subspace.of_indices(mod, mod.e_range(1, mod.n - mod.m))
    if p0 != expected:
        warnings.append(f"P₀ = {p0.coordinate_indices()}, esperado e_[1,{mod.n - mod.m}]")
    return {"is_valid": not warnings, "warnings": warnings, "dim": p0.dim}


def lattice_oracle(mod: DieudonneModule) -> Dict[str, Any]:
    """lattice_step contra o motor matricial em todo (a,b) ∈ [0, n+m]², para F e V⁻¹."""
    warnings: List[str] = []
    checked = 0
    for a in range(mod.N + 1):
        for b in range(mod.N + 1):
            source = Subspace.lattice(mod, a, b)
            for step in ("F", "V^-1"):
                expected = lattice_step(mod.n, mod.m, LatticePair(a, b), step)
                if apply_step(mod, source, step) != Subspace.lattice(mod, expected.a, expected.b):
                    warnings.append(f"{step} em D({a},{b}): tabela dá {expected}")
                checked += 1
    return {"is_valid": not warnings, "warnings": warnings, "checked": checked}
