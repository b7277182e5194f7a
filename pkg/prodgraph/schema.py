#!/usr/bin/env python3
"""
Schema definitions for prodgraph CLI commands.

Machine-readable documentation so scripts and agents can drive the CLI
without scraping --help output.
"""

from typing import Any

from .__version__ import __version__

GRAPH_FILE_OPTION = {
    "type": "path",
    "description": "Graph file, edge-list ('n m' header then 'u v' lines) "
    "or graph6 (detected by '>>graph6<<' header, '.g6' suffix or a single token)",
}

JSON_OPTION = {"type": "flag", "description": "Output as JSON"}

COMMANDS_SCHEMA: dict[str, Any] = {
    "product": {
        "description": "Build G (kind) H and write it as an edge list or graph6",
        "options": {
            "--kind": {
                "type": "choice",
                "choices": ["cartesian", "kronecker", "strong", "lex"],
                "required": True,
            },
            "--g": {**GRAPH_FILE_OPTION, "required": True},
            "--h": {**GRAPH_FILE_OPTION, "required": True},
            "--out": {"type": "path", "description": "Output file (default: stdout)"},
            "--format": {"type": "choice", "choices": ["edgelist", "graph6"]},
            "--json": JSON_OPTION,
        },
        "examples": [
            "prodgraph product --kind cartesian --g c5.el --h c5.el",
            "prodgraph product --kind kron --g c5.el --h c5.el --format graph6 --out k.g6",
        ],
        "output_fields": ["kind", "order", "edges", "degrees"],
    },
    "spectrum": {
        "description": "Adjacency or distance spectrum of a graph, clustered",
        "options": {
            "--matrix": {"type": "choice", "choices": ["adjacency", "distance"]},
            "--g": {**GRAPH_FILE_OPTION, "required": True},
            "--tol": {"type": "float", "description": "Clustering tolerance"},
            "--json": JSON_OPTION,
        },
        "examples": ["prodgraph spectrum --matrix distance --g c5.el --json"],
        "output_fields": ["order", "tol", "clusters"],
    },
    "check-iso": {
        "description": "Decide whether two graphs are isomorphic, with a certificate",
        "options": {
            "--g1": {**GRAPH_FILE_OPTION, "required": True},
            "--g2": {**GRAPH_FILE_OPTION, "required": True},
            "--map-out": {
                "type": "path",
                "description": "Write the bijection as 'v phi(v)' lines",
            },
            "--json": JSON_OPTION,
        },
        "examples": ["prodgraph check-iso --g1 cart.el --g2 kron.el --map-out map.txt"],
        "output_fields": ["isomorphic", "rule", "certificate"],
        "exit_codes": {"0": "isomorphic", "1": "not isomorphic or undecided", "2": "bad input"},
    },
    "drg-check": {
        "description": "Distance-regularity with intersection array or witness",
        "options": {"--g": {**GRAPH_FILE_OPTION, "required": True}, "--json": JSON_OPTION},
        "examples": ["prodgraph drg-check --g c5c5_cart.el --json"],
        "output_fields": ["regular", "diameter", "intersection_array", "witness"],
    },
    "characterize": {
        "description": "Decide G (kind A) H vs G (kind B) H from the characterization rules",
        "options": {
            "--pair": {
                "type": "choice",
                "choices": [
                    "cart-kron",
                    "cart-strong",
                    "cart-lex",
                    "kron-strong",
                    "kron-lex",
                    "strong-lex",
                ],
                "required": True,
            },
            "--g": {**GRAPH_FILE_OPTION, "required": True},
            "--h": {**GRAPH_FILE_OPTION, "required": True},
            "--cross-validate": {
                "type": "flag",
                "description": "Also run the brute-force search on the two products",
            },
            "--json": JSON_OPTION,
        },
        "examples": ["prodgraph characterize --pair cart-kron --g c7.el --h c7.el --json"],
        "output_fields": ["pair", "isomorphic", "rule", "certificate"],
    },
    "reproduce": {
        "description": "Regenerate every claim as a pass/fail report",
        "options": {
            "--max-n": {"type": "integer", "description": "Largest odd cycle (default from config: 13)"},
            "--out": {"type": "path", "description": "JSON report file"},
            "--jobs": {"type": "integer", "description": "Worker processes"},
            "--json": JSON_OPTION,
        },
        "examples": ["prodgraph reproduce --max-n 7 --out report.json"],
        "output_fields": ["max_n", "passed", "failed", "claims"],
        "exit_codes": {"0": "all claims pass", "1": "a claim failed", "2": "bad input"},
    },
    "config show": {
        "description": "Effective settings and where they come from",
        "options": {"--json": JSON_OPTION},
        "output_fields": ["source", "settings"],
    },
    "config validate": {
        "description": "Validate the configuration file",
        "options": {"--json": JSON_OPTION},
        "output": {"errors": "✗ lines", "warnings": "! lines", "info": "i lines"},
        "output_fields": ["source", "valid", "errors", "warnings", "info"],
        "exit_codes": {"0": "valid", "1": "invalid or unreadable"},
    },
    "config init": {
        "description": "Write the packaged configuration template",
        "options": {
            "--output, -o": {"type": "path", "description": "Target file"},
            "--force": {"type": "flag", "description": "Overwrite an existing file"},
            "--json": JSON_OPTION,
        },
        "output_fields": ["created", "path", "error"],
    },
}

GLOBAL_OPTIONS: dict[str, Any] = {
    "--config, -c": {"type": "path", "description": "Configuration file"},
    "--verbose, -v": {"type": "flag", "description": "Debug logging to stderr"},
    "--version": {"type": "flag", "description": "Show version information"},
    "--schema": {"type": "flag", "description": "Output this document"},
}

ENVIRONMENT: dict[str, str] = {
    "PRODGRAPH_TOL": "Overrides spectral.tol everywhere",
    "PRODGRAPH_DIR": "Directory searched for config.yml (default ~/.config/prodgraph)",
}


def get_full_schema() -> dict[str, Any]:
    """Complete CLI schema."""
    return {
        "name": "prodgraph",
        "version": __version__,
        "global_options": GLOBAL_OPTIONS,
        "environment": ENVIRONMENT,
        "commands": COMMANDS_SCHEMA,
    }
