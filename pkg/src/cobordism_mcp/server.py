"""
Cobordism MCP Server.

Main entrypoint for the cobordism Model Context Protocol server.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import asyncio
import json
import logging
from pathlib import Path

from mcp.server import Server
from mcp.server.stdio import stdio_server

from .registry import ToolRegistry
from .tools import bordisms, checks, evaluation, theta
from .tools.utils import HEAVY


logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config" / "settings.json"


def build_registry(config=None):
    """Builds the tool registry with all MCP tools.

    Args:
        config (None): optional config dict from ``settings.json``

    Returns:
        a :class:`ToolRegistry` instance with all tools registered
    """
    config = config or {}
    server_config = config.get("server", {})
    checks_config = config.get("checks", {})
    max_response_chars = server_config.get("max_response_chars", None)

    limits = {}
    if "max_cases" in checks_config:
        limits["cases"] = checks_config["max_cases"]

    if "max_bound" in checks_config:
        limits["bound"] = checks_config["max_bound"]

    defaults = {
        key: checks_config[key]
        for key in ("seed", "cases", "bound")
        if key in checks_config
    }

    registry = (
        ToolRegistry(
            max_response_chars=max_response_chars,
            limits=limits,
            defaults=defaults,
        )
        if max_response_chars is not None
        else ToolRegistry(limits=limits, defaults=defaults)
    )
    bordisms.register_tools(registry)
    checks.register_tools(registry)
    evaluation.register_tools(registry)
    theta.register_tools(registry)
    return registry


def load_config(path=None):
    """Loads configuration from settings.json.

    Args:
        path (None): an optional settings file; defaults to the packaged
            ``config/settings.json``

    Returns:
        a config dict
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    try:
        with open(config_path, "r") as f:
            return json.load(f)
    except Exception as e:
        logger.warning("Could not load config from %s: %s", config_path, e)
        return {}


def configure_logging(config=None):
    """Applies the ``logging`` section of the config."""
    logging_config = (config or {}).get("logging", {})
    logging.basicConfig(
        level=logging_config.get("level", "INFO"),
        format=logging_config.get(
            "format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        ),
    )


async def main(config=None):
    """Main server function."""
    if config is None:
        config = load_config()

    server_config = config.get("server", {})
    server_name = server_config.get("name", "cobordism-mcp")

    logger.info("Starting %s server...", server_name)

    server = Server(server_name)
    registry = build_registry(config=config)

    @server.list_tools()
    async def list_tools_handler():
        return registry.list_tools()

    @server.call_tool()
    async def call_tool_handler(name, arguments):
        result = await registry.call_tool(name, arguments, ctx=None)
        return result.content

    logger.info(
        "%s server initialized with %d tools (%d heavy)",
        server_name,
        len(registry.list_tools()),
        len(registry.list_tools(cost=HEAVY)),
    )

    async with stdio_server() as (read_stream, write_stream):
        await server.run(
            read_stream,
            write_stream,
            server.create_initialization_options(),
        )


def run(config=None):
    """Entry point for the server."""
    if config is None:
        config = load_config()

    configure_logging(config)
    try:
        asyncio.run(main(config))
    except KeyboardInterrupt:
        logger.info("Server stopped by user")
    except Exception as e:
        logger.error("Server error: %s", e, exc_info=True)
        raise


if __name__ == "__main__":
    run()
