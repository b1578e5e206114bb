"""
Cobordism MCP Server.

Exact computation in the 1-dimensional cobordism category with
integer-labelled strands: gluing, traces, the Theta family of tracelike
transformations, and evaluation into rational vector spaces.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

__version__ = "0.1.0"
