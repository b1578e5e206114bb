"""
Utility functions for cobordism MCP tools.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from ..parser import parse
from ..terms import denote, print_term


logger = logging.getLogger(__name__)

# Tool cost levels
CHEAP = "cheap"
HEAVY = "heavy"


def mcp_tool(cost=CHEAP):
    """Tags an MCP tool with its cost level.

    * ``CHEAP`` - a single exact computation; safe to auto-execute.
    * ``HEAVY`` - a search or a property run whose work grows with its
      ``cases`` / ``bound`` arguments. The
      :class:`~cobordism_mcp.registry.ToolRegistry` caps those
      arguments before calling the handler.

    The cost is stored as ``fn._mcp_cost`` and read at registration
    time.

    Args:
        cost (CHEAP): ``CHEAP`` or ``HEAVY``

    Returns:
        a decorator
    """

    def decorator(fn):
        fn._mcp_cost = cost
        return fn

    return decorator


def format_response(data, success=True, error=None, **kwargs):
    """Formats a standardized response for MCP tools.

    Args:
        data: the response data
        success (True): whether the operation succeeded
        error (None): an optional error message if operation failed
        **kwargs: additional fields to include in the response

    Returns:
        a formatted response dict
    """
    response = {"success": success, "data": data}

    if error:
        response["error"] = error

    for key, value in kwargs.items():
        if value is not None:
            response[key] = value

    return response


def safe_serialize(obj):
    """Serializes library objects to JSON-compatible values.

    Objects with ``to_dict()`` (bordisms, matrices, reports, points) are
    expanded; anything else that is not a JSON primitive is printed.

    Args:
        obj: an object to serialize

    Returns:
        a JSON-serializable object
    """
    if isinstance(obj, (str, int, float, bool, type(None))):
        return obj

    if isinstance(obj, dict):
        return {k: safe_serialize(v) for k, v in obj.items()}

    if isinstance(obj, (list, tuple)):
        return [safe_serialize(item) for item in obj]

    if hasattr(obj, "to_dict"):
        return safe_serialize(obj.to_dict())

    return str(obj)


def term_summary(text):
    """Parses and denotes a term.

    Args:
        text: the term text

    Returns:
        a ``(term, bordism, summary)`` tuple where ``summary`` is a
        JSON-serializable dict
    """
    term = parse(text)
    bordism = denote(term)
    summary = {
        "term": print_term(term),
        "src": str(bordism.src),
        "tgt": str(bordism.tgt),
        "normal_form": bordism.serialize(),
    }
    return term, bordism, summary
