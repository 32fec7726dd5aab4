"""CLI eo-folkit: subcomandos, emissores e suíte de verificação."""

from cli.main import run

__all__ = ["run"]
