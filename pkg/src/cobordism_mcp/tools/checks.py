"""
Property-suite tools for the cobordism MCP server.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from mcp.types import Tool

from ..checks import SUITES, run_check as run_suite
from .utils import HEAVY, format_response, mcp_tool


logger = logging.getLogger(__name__)


@mcp_tool(cost=HEAVY)
def run_check(ctx, suite, seed, cases, bound):
    """Runs a seeded property suite.

    Omitted ``seed``, ``cases`` and ``bound`` arguments are filled by the
    registry from the ``checks`` section of the settings.

    Args:
        ctx: unused
        suite: the suite name
        seed: the random seed
        cases: the number of random cases
        bound: the search bound for ``classify``

    Returns:
        the suite report
    """
    try:
        report = run_suite(suite, seed=seed, cases=cases, bound=bound)
        return format_response(report.to_dict(), success=report.ok)
    except ValueError as e:
        logger.error("Failed to run suite '%s': %s", suite, e)
        return format_response(None, success=False, error=str(e))


def register_tools(registry):
    """Registers the property-suite tool with the registry.

    Args:
        registry: a :class:`cobordism_mcp.registry.ToolRegistry`
    """
    defaults = registry.defaults
    registry.register(
        Tool(
            name="run_check",
            description=(
                "Run a seeded property suite: 'laws' (free-category "
                "laws), 'cyclicity' (trace of f;g equals trace of "
                "g;f), 'naturality' (evaluation commutes with traces), "
                "'roundtrip' (quote, print and oracle agreement) or "
                "'classify' (Theta classification and generation). "
                "Runs are deterministic given the seed."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "suite": {
                        "type": "string",
                        "enum": sorted(SUITES),
                        "description": "The suite to run",
                    },
                    "seed": {
                        "type": "integer",
                        "description": (
                            "Random seed. Default is %d" % defaults["seed"]
                        ),
                        "default": defaults["seed"],
                    },
                    "cases": {
                        "type": "integer",
                        "description": (
                            "Number of random cases. Default is %d"
                            % defaults["cases"]
                        ),
                        "default": defaults["cases"],
                    },
                    "bound": {
                        "type": "integer",
                        "description": (
                            "Search bound for 'classify'. Default is %d"
                            % defaults["bound"]
                        ),
                        "default": defaults["bound"],
                    },
                },
                "required": ["suite"],
            },
        ),
        run_check,
    )
