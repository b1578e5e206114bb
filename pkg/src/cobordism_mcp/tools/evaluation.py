"""
Matrix evaluation tools for the cobordism MCP server.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from mcp.types import Tool

from ..errors import CobordismError
from ..evaluation import evaluate, evaluate_term as evaluate_in
from ..matrices import MatrixMorphism, dualizable_from_matrix, matrix_backend
from .utils import format_response, mcp_tool, term_summary


logger = logging.getLogger(__name__)


@mcp_tool()
def evaluate_term(ctx, term, matrix):
    """Evaluates a term at a square invertible rational matrix.

    Args:
        ctx: unused
        term: the term text
        matrix: a list of rows of ``"p/q"`` strings or integers

    Returns:
        a dict with the image matrix
    """
    try:
        parsed, bordism, summary = term_summary(term)
        pair = dualizable_from_matrix(MatrixMorphism.from_rows(matrix))
        backend = matrix_backend()
        image = evaluate(bordism, pair, backend)
        summary["matrix"] = str(image)
        summary["image"] = image.to_dict()
        summary["paths_agree"] = evaluate_in(parsed, pair, backend) == image
        return format_response(summary)
    except CobordismError as e:
        logger.error("Failed to evaluate '%s': %s", term, e)
        return format_response(None, success=False, error=str(e))


def register_tools(registry):
    """Registers the evaluation tools with the registry.

    Args:
        registry: a :class:`cobordism_mcp.registry.ToolRegistry`
    """
    registry.register(
        Tool(
            name="evaluate_term",
            description=(
                "Evaluate a term in rational vector spaces, sending the "
                "point + to Q^n with the given invertible matrix as its "
                "automorphism. Returns the exact image matrix."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "term": {
                        "type": "string",
                        "description": "The term text",
                    },
                    "matrix": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "items": {"type": ["string", "integer"]},
                        },
                        "description": (
                            "Rows of the matrix, entries as 'p/q' "
                            "strings or integers"
                        ),
                    },
                },
                "required": ["term", "matrix"],
            },
        ),
        evaluate_term,
    )
