"""
Central tool registry for the cobordism MCP server.

All MCP tools register here. The registry owns tool discovery, schema
listing, argument capping for heavy tools, and dispatch.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import asyncio
import inspect
import json
import logging

from mcp.types import CallToolResult, TextContent

from .tools.utils import CHEAP, HEAVY, format_response

logger = logging.getLogger(__name__)

_DEFAULT_COST = CHEAP
_DEFAULT_MAX_RESPONSE_CHARS = 200_000
_DEFAULT_LIMITS = {"cases": 2000, "bound": 6}
_DEFAULT_ARGUMENTS = {"seed": 0, "cases": 100, "bound": 4}


class ToolRegistry(object):
    """Central registry for MCP tools.

    Each tool is stored with its schema, handler and cost, keyed by
    name. Handlers follow the signature ``(ctx, **kwargs) -> dict`` and
    may be either sync or async.

    The cost is read from ``handler._mcp_cost`` (set by the
    :func:`~cobordism_mcp.tools.utils.mcp_tool` decorator). ``HEAVY``
    tools have their ``cases`` and ``bound`` arguments checked against
    the configured limits in :meth:`call_tool`. Omitted ``seed``,
    ``cases`` and ``bound`` arguments are filled from the configured
    defaults for any handler that accepts them.
    """

    def __init__(
        self,
        max_response_chars=_DEFAULT_MAX_RESPONSE_CHARS,
        limits=None,
        defaults=None,
    ):
        """Initializes the tool registry.

        Args:
            max_response_chars (200000): maximum response size in
                characters. Responses larger than this are replaced
                with a structured error
            limits (None): an optional dict with ``cases`` and
                ``bound`` caps for ``HEAVY`` tools
            defaults (None): an optional dict of ``seed``, ``cases``
                and ``bound`` values used when a call omits them
        """
        self._tools = {}
        self._max_response_chars = max_response_chars
        self._limits = dict(_DEFAULT_LIMITS)
        self._limits.update(limits or {})
        self._defaults = dict(_DEFAULT_ARGUMENTS)
        self._defaults.update(defaults or {})

    @property
    def limits(self):
        return dict(self._limits)

    @property
    def defaults(self):
        return dict(self._defaults)

    def register(self, schema, handler):
        """Registers a tool.

        Args:
            schema: a :class:`mcp.types.Tool` instance
            handler: a callable ``(ctx, **kwargs) -> dict``
        """
        cost = getattr(handler, "_mcp_cost", _DEFAULT_COST)
        self._tools[schema.name] = {
            "schema": schema,
            "handler": handler,
            "cost": cost,
        }

    def get_tool(self, name):
        """Returns the entry for the given tool name, or None.

        Args:
            name: the tool name

        Returns:
            a dict with ``schema``, ``handler``, and ``cost`` keys, or
            None
        """
        return self._tools.get(name)

    def list_tools(self, cost=None):
        """Returns registered MCP tool schemas.

        Args:
            cost (None): an optional cost level (``"cheap"`` or
                ``"heavy"``). When provided, only tools with that cost
                are returned

        Returns:
            a list of :class:`mcp.types.Tool` instances
        """
        if cost is not None:
            return [
                t["schema"] for t in self._tools.values() if t["cost"] == cost
            ]

        return [t["schema"] for t in self._tools.values()]

    def _with_defaults(self, handler, arguments):
        params = inspect.signature(handler).parameters
        filled = {
            key: value
            for key, value in self._defaults.items()
            if key in params and key not in arguments
        }
        filled.update(arguments)
        return filled

    def _check_limits(self, name, arguments):
        for key, limit in self._limits.items():
            value = arguments.get(key)
            if isinstance(value, int) and value > limit:
                return (
                    "'%s' argument '%s' is %d, above the configured "
                    "limit of %d" % (name, key, value, limit)
                )

        return None

    async def call_tool(self, name, arguments, ctx=None):
        """Dispatches a tool call by name.

        Handles both sync and async handlers transparently. Any
        exception escaping a handler is logged and returned as an error
        response.

        Args:
            name: the tool name
            arguments: a dict of arguments for the tool
            ctx (None): an optional context passed through to handlers

        Returns:
            a :class:`mcp.types.CallToolResult` whose ``content`` is a list
            of :class:`mcp.types.TextContent` and whose ``isError`` mirrors
            the ``success`` flag of the response
        """
        arguments = arguments or {}
        entry = self._tools.get(name)
        if entry is None:
            return self._error("Unknown tool: %s" % name)

        arguments = self._with_defaults(entry["handler"], arguments)

        if entry["cost"] == HEAVY:
            error = self._check_limits(name, arguments)
            if error is not None:
                logger.warning(error)
                return self._error(error)

        try:
            result = entry["handler"](ctx, **arguments)
            if asyncio.iscoroutine(result):
                result = await result

            text = json.dumps(result, indent=2)
            if len(text) > self._max_response_chars:
                logger.warning(
                    "Tool '%s' response too large (%d chars), truncating",
                    name,
                    len(text),
                )
                result = format_response(
                    None,
                    success=False,
                    error=(
                        "Tool '%s' response too large (%d chars). "
                        "Use smaller inputs to reduce the response size."
                        % (name, len(text))
                    ),
                    _truncated=True,
                    _original_size=len(text),
                )
                text = json.dumps(result, indent=2)

            return CallToolResult(
                content=[TextContent(type="text", text=text)],
                isError=not result.get("success", True),
            )
        except Exception as e:
            logger.error(
                "Error executing tool '%s': %s", name, e, exc_info=True
            )
            return self._error(str(e))

    def _error(self, message):
        result = format_response(None, success=False, error=message)
        return CallToolResult(
            content=[
                TextContent(type="text", text=json.dumps(result, indent=2))
            ],
            isError=True,
        )
