"""
Cobordism MCP tools.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""
