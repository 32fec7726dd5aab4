"""Subcomando deform: deformação universal, resíduos, ideal e dimensões tangentes."""

import argparse

from cli.emitters import Outcome
from core.config import Limits
from core.errors import ensure
from core.schemas import DeformationReport, TangentEntry
from deformation.residues import sfol_ideal, v_image_residues
from deformation.tangent import foliation_generators, tangent_system
from deformation.universal import indexed_name, universal_deformation
from gf.field import FieldContext
from weyl.shuffles import ShuffleLabel, shuffle_length, special_elements

HELP = "Deformação de primeira ordem no ponto de S_fol"


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--p", type=int, required=True)


def build(args: argparse.Namespace, limits: Limits) -> Outcome:
    ctx = FieldContext.for_prime(args.p)
    n, m = args.n, args.m
    deformation = universal_deformation(n, m, ctx)
    residues = v_image_residues(n, m, ctx)
    ideal = sfol_ideal(n, m, ctx)
    dims = tangent_system(n, m, ctx)
    kept = foliation_generators(n, m, ctx)

    ensure(dims.total_dim == dims.foliation_dim + len(ideal), "deform.total_split", dims.total_dim, dims.foliation_dim + len(ideal))
    fol_length = shuffle_length(ShuffleLabel(special_elements(n, m).w_fol, n, m))
    ensure(dims.foliation_dim == fol_length, "deform.foliation_vs_w_fol", fol_length, dims.foliation_dim)

    labels = residues.labels
    report = DeformationReport(
        n=n,
        m=m,
        p=ctx.p,
        omega_sigma=deformation.symbolic(deformation.omega_sigma),
        omega_sigma_bar=deformation.symbolic(deformation.omega_sigma_bar),
        target=[labels[k] + "^(p)" for k in residues.target],
        residues={
            str(jp): {
                gen: {labels[k] + "^(p)": str(coeff) for k, coeff in sorted(residue.items())}
                for gen, residue in sorted(per_gen.items())
            }
            for jp, per_gen in residues.residues.items()
        },
        ideal=ideal,
        ideal_indexed=[indexed_name(g, n, m) for g in ideal],
        tangent=TangentEntry(total_dim=dims.total_dim, foliation_dim=dims.foliation_dim, fiber_dim=dims.fiber_dim),
        foliation_generators=kept,
    )
    return Outcome(report=report)
