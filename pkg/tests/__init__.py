"""Tests for the cobordism MCP server."""
