"""Graphviz DOT output for graded quivers."""

from __future__ import annotations

from .quiver import GradedQuiver


def emit_dot(gq: GradedQuiver, name: str = "quiver") -> str:
    """Deterministic DOT digraph; edge labels carry degree and weight."""
    quiver = gq.quiver
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in quiver.vertices:
        label = quiver.labels.get(v)
        text = f"{v} {label}" if label else str(v)
        lines.append(f'  "{v}" [label="{text}"];')
    for a in quiver.arrows:
        label = f"{a.name}:{gq.degree[a.ident]}"
        if gq.weight is not None:
            label += f":w{gq.weight[a.ident]}"
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
