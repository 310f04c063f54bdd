"""Python surface of the existential-graph proof toolkit."""

from ._core import (
    canon_graph,
    check_script,
    classical_valid,
    compile_nd,
    countermodel,
    embed,
    ipc_valid,
    search,
    translate,
)

__all__ = [
    "canon_graph",
    "check_script",
    "classical_valid",
    "compile_nd",
    "countermodel",
    "embed",
    "ipc_valid",
    "search",
    "translate",
]
