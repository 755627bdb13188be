#!/usr/bin/env python3
"""
Simple health check for the colorful-tverberg MCP server
"""

import asyncio
import json
import sys
from datetime import datetime


def main() -> int:
    print("=== MCP Server Health Check ===")
    print(f"Time: {datetime.now().isoformat()}")

    try:
        import config
        for key, value in config.describe().items():
            print(f"{key}: {value}")
        print("=== Configuration loaded successfully ===")
    except Exception as e:
        print(f"ERROR loading configuration: {e}")
        return 1

    try:
        from server import handle_call_tool, handle_list_tools
        print("✓ Server module imported successfully")
        tools = asyncio.run(handle_list_tools())
        print(f"✓ {len(tools)} tools listed")
        result = asyncio.run(handle_call_tool("check_colorful", {"word": [1, 2, 1, 2], "d": 2}))
        if not json.loads(result[0].text)["colorful"]:
            print("✗ check_colorful returned a wrong answer")
            return 1
        print("✓ check_colorful works")
        result = asyncio.run(handle_call_tool("health", {}))
        print("Health result:", result[0].text)
    except Exception as e:
        print(f"ERROR calling server: {e}")
        return 1

    print("=== Health check completed ===")
    return 0


if __name__ == "__main__":
    sys.exit(main())
