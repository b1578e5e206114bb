"""
Term and bordism tools for the cobordism MCP server.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from mcp.types import Tool

from .. import bordism as bd
from ..errors import CobordismError
from ..oracles import glue_compose
from .utils import format_response, mcp_tool, term_summary


logger = logging.getLogger(__name__)


@mcp_tool()
def normalize_term(ctx, term):
    """Parses, typechecks and normalizes a term.

    Args:
        ctx: unused
        term: the term text

    Returns:
        a dict with the printed term, its boundary words and its
        canonical bordism serialization
    """
    try:
        _, bordism, summary = term_summary(term)
        summary["bordism"] = bordism.to_dict()
        return format_response(summary)
    except CobordismError as e:
        logger.error("Failed to normalize '%s': %s", term, e)
        return format_response(None, success=False, error=str(e))


@mcp_tool()
def compose_bordisms(ctx, first, second, check_oracle=False):
    """Composes two serialized bordisms, ``first`` then ``second``.

    Args:
        ctx: unused
        first: the serialization of ``f: M -> N``
        second: the serialization of ``g: N -> L``
        check_oracle (False): whether to recompute the composite with the
            port-graph oracle and report agreement

    Returns:
        a dict with the composite serialization
    """
    try:
        f = bd.Bordism.parse(first)
        g = bd.Bordism.parse(second)
        result = bd.compose(f, g)
        data = {"composite": result.serialize(), "bordism": result.to_dict()}
        if check_oracle:
            data["oracle_agrees"] = glue_compose(f, g) == result

        return format_response(data)
    except CobordismError as e:
        logger.error("Failed to compose bordisms: %s", e)
        return format_response(None, success=False, error=str(e))


@mcp_tool()
def trace_close(ctx, bordism):
    """Closes a serialized endomorphism bordism into a scalar.

    Args:
        ctx: unused
        bordism: the serialization of ``f: M -> M``

    Returns:
        a dict with the closed bordism and its circle labels
    """
    try:
        closed = bd.trace_close(bd.Bordism.parse(bordism))
        return format_response(
            {"closure": closed.serialize(), "circles": str(closed.circles)}
        )
    except CobordismError as e:
        logger.error("Failed to close bordism: %s", e)
        return format_response(None, success=False, error=str(e))


def register_tools(registry):
    """Registers all term and bordism tools with the registry.

    Args:
        registry: a :class:`cobordism_mcp.registry.ToolRegistry`
    """
    registry.register(
        Tool(
            name="normalize_term",
            description=(
                "Parse and typecheck a morphism term such as "
                "'(coev * id(+)) ; (id(+) * ev)' and return its normal "
                "form as a labelled bordism. ';' composes left to "
                "right, '*' is the tensor product and binds tighter. "
                "Two terms are equal exactly when their normal forms "
                "are equal."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "term": {
                        "type": "string",
                        "description": (
                            "The term, built from id(obj), "
                            "swap(obj,obj), ev, coev and a^k"
                        ),
                    },
                },
                "required": ["term"],
            },
        ),
        normalize_term,
    )

    registry.register(
        Tool(
            name="compose_bordisms",
            description=(
                "Glue two bordisms given in canonical serialization "
                "('src=+; tgt=+; arcs=[(s0,t0,2)]; circles=[]'). The "
                "target of the first must equal the source of the "
                "second. Labels add along glued strands and closed "
                "loops become circles."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "first": {
                        "type": "string",
                        "description": "The first bordism",
                    },
                    "second": {
                        "type": "string",
                        "description": "The second bordism",
                    },
                    "check_oracle": {
                        "type": "boolean",
                        "description": (
                            "Also recompute the composite with an "
                            "independent port-graph traversal. "
                            "Default is false"
                        ),
                        "default": False,
                    },
                },
                "required": ["first", "second"],
            },
        ),
        compose_bordisms,
    )

    registry.register(
        Tool(
            name="trace_close",
            description=(
                "Close an endomorphism bordism by gluing its target "
                "back to its source. Returns the closed bordism, a "
                "multiset of labelled circles."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "bordism": {
                        "type": "string",
                        "description": (
                            "A bordism whose source and target words "
                            "are equal"
                        ),
                    },
                },
                "required": ["bordism"],
            },
        ),
        trace_close,
    )
