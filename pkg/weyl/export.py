"""
Exportação do poset EO em DOT e em dicionário JSON.
"""

from typing import Any, Dict, List

from weyl.poset import StratumPoset


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def poset_to_dot(poset: StratumPoset) -> str:
    """
    Grafo dirigido (maior → menor), nós de mesmo comprimento no mesmo rank.

    Rótulo de cada nó: notação de uma linha e "ℓ=<comprimento>".
    """
    lines: List[str] = [f"digraph {_quote(f'EO_{poset.n}_{poset.m}')} {{", "  rankdir=TB;", "  node [shape=box];"]
    for info in poset.nodes:
        w = str(info.label.w)
        label = w + "\\n" + f"ℓ={info.length}"
        lines.append(f"  {_quote(w)} [label={_quote(label)}];")
    for length, members in poset.ranks().items():
        names = "; ".join(_quote(str(w)) for w in members)
        lines.append(f"  {{ rank=same; {names}; }}  // ℓ={length}")
    for upper, lower in poset.covers:
        lines.append(f"  {_quote(str(upper))} -> {_quote(str(lower))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dict(poset: StratumPoset) -> Dict[str, Any]:
    """Forma JSON: {"n","m","strata":[...],"covers":[[maior, menor], ...]}."""
    return {
        "n": poset.n,
        "m": poset.m,
        "strata": [
            {
                "w": str(info.label.w),
                "length": info.length,
                "a_sigma": info.a_sigma,
                "in_s_sharp": info.in_s_sharp,
                "is_fol": info.is_fol,
                "fiber_dim": info.fiber_dim,
            }
            for info in poset.nodes
        ],
        "covers": [[str(upper), str(lower)] for upper, lower in poset.covers],
    }
