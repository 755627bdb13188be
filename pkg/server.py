"""
colorful-tverberg — MCP Server

Exposes the word and complex tools to MCP clients over stdio:
  • check whether a word is d-colorful, and find colorful subwords
  • compute the complex a word represents, and build words for a complex
  • generate the bipartite graphs G_d and search for representing words

Words are JSON arrays of non-negative integers; complexes are arrays of facets.
Geometry stays on the command line (cli.py), since rational coordinates have no
natural JSON form.
"""

import asyncio
import json
from datetime import datetime
from typing import List

from mcp.server import NotificationOptions, Server
from mcp.server.models import InitializationOptions
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

import config
from complexes import from_facets
from config import log
from gd_graphs import GdParams, build_gd, search_word
from words import (
    delta_complex,
    facet_concat_word,
    find_colorful_subword,
    is_colorful,
    lift_word,
)

SERVER_NAME = "colorful-tverberg"
SERVER_VERSION = "0.1.0"
TOOL_NAMES = (
    "check_colorful",
    "find_colorful_subword",
    "delta_complex",
    "facet_concat_word",
    "lift_word",
    "search_word",
    "build_gd",
    "health",
)

_WORD = {"type": "array", "items": {"type": "integer", "minimum": 0}, "description": "Word as a list of letters."}
_D = {"type": "integer", "minimum": 0, "description": "Colorfulness parameter d."}
_COMPLEX = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "description": "Complex as a list of facets.",
}


def _reply(result: dict) -> List[TextContent]:
    return [TextContent(type="text", text=json.dumps(result, indent=2))]


# ---- MCP Server Setup ----

app = Server(SERVER_NAME)


@app.list_tools()
async def handle_list_tools() -> List[Tool]:
    """List available tools."""
    return [
        Tool(
            name="check_colorful",
            description="Is the word d-colorful?",
            inputSchema={"type": "object", "properties": {"word": _WORD, "d": _D}, "required": ["word", "d"]},
        ),
        Tool(
            name="find_colorful_subword",
            description="Positions of the lexicographically least d-colorful subword on sigma.",
            inputSchema={
                "type": "object",
                "properties": {"word": _WORD, "sigma": _WORD, "d": _D},
                "required": ["word", "sigma", "d"],
            },
        ),
        Tool(
            name="delta_complex",
            description="Facets of the complex the word d-colorfully represents.",
            inputSchema={"type": "object", "properties": {"word": _WORD, "d": _D}, "required": ["word", "d"]},
        ),
        Tool(
            name="facet_concat_word",
            description="A word representing the complex, with the d it works at.",
            inputSchema={"type": "object", "properties": {"facets": _COMPLEX}, "required": ["facets"]},
        ),
        Tool(
            name="lift_word",
            description="A word representing the same complex (relabeled) one dimension up.",
            inputSchema={"type": "object", "properties": {"word": _WORD}, "required": ["word"]},
        ),
        Tool(
            name="search_word",
            description="Least word up to max_len that d-colorfully represents the complex.",
            inputSchema={
                "type": "object",
                "properties": {
                    "facets": _COMPLEX,
                    "d": _D,
                    "max_len": {"type": "integer", "minimum": 1, "default": 6},
                },
                "required": ["facets", "d"],
            },
        ),
        Tool(
            name="build_gd",
            description="Edges and isolated vertices of G_d (capped by GD_VERTEX_CAP).",
            inputSchema={
                "type": "object",
                "properties": {
                    "n": {"type": "integer", "minimum": 1},
                    "d": _D,
                    "multiplicity": {"type": "integer", "minimum": 1, "default": 1},
                },
                "required": ["n", "d"],
            },
        ),
        Tool(
            name="health",
            description="Check server health and configuration.",
            inputSchema={"type": "object", "properties": {}},
        ),
    ]


@app.call_tool()
async def handle_call_tool(name: str, arguments: dict) -> List[TextContent]:
    """Handle tool calls."""
    if name not in TOOL_NAMES:
        raise ValueError(f"Unknown tool: {name}")
    log("SERVER", f"call {name}")
    try:
        return _dispatch(name, arguments)
    except ValueError as e:
        log("SERVER", f"{name} failed: {e}")
        return _reply({"error": str(e)})


def _dispatch(name: str, arguments: dict) -> List[TextContent]:
    if name == "check_colorful":
        word, d = arguments["word"], arguments["d"]
        return _reply({"word": word, "d": d, "colorful": is_colorful(word, d)})

    elif name == "find_colorful_subword":
        cert = find_colorful_subword(arguments["word"], arguments["sigma"], arguments["d"])
        return _reply({"found": cert is not None, "certificate": cert.model_dump() if cert else None})

    elif name == "delta_complex":
        K = delta_complex(arguments["word"], arguments["d"])
        return _reply({"facets": [list(f) for f in K.facets], "dimension": K.dimension})

    elif name == "facet_concat_word":
        K = from_facets(arguments["facets"])
        return _reply({"word": list(facet_concat_word(K)), "d": len(K.facets) + 1})

    elif name == "lift_word":
        lifted, relabeling = lift_word(arguments["word"])
        return _reply({"word": list(lifted), "relabeling": {str(k): v for k, v in relabeling.items()}})

    elif name == "search_word":
        K = from_facets(arguments["facets"])
        found = search_word(K, arguments["d"], arguments.get("max_len", 6))
        return _reply({"found": found is not None, "word": list(found) if found is not None else None})

    elif name == "build_gd":
        params = GdParams(n=arguments["n"], d=arguments["d"], multiplicity=arguments.get("multiplicity", 1))
        K = build_gd(params)
        return _reply({"vertex_count": params.vertex_count, "facets": [list(f) for f in K.facets]})

    # health
    result = {"time": datetime.now().isoformat(), "server": SERVER_NAME, "config": config.describe()}
    return _reply(result)


async def main():
    # Run the server using stdio transport
    async with stdio_server() as (read_stream, write_stream):
        await app.run(
            read_stream,
            write_stream,
            InitializationOptions(
                server_name=SERVER_NAME,
                server_version=SERVER_VERSION,
                capabilities=app.get_capabilities(
                    notification_options=NotificationOptions(),
                    experimental_capabilities={}
                )
            )
        )


if __name__ == "__main__":
    asyncio.run(main())
