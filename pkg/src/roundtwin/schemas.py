"""JSON Schemas for the documents written by the command line tool."""

_block = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1, "maxItems": 2}

COMPLEX = {
    "type": "object",
    "required": ["space", "n", "cells", "boundary"],
    "properties": {
        "space": {"enum": ["round", "line"]},
        "n": {"type": "integer", "minimum": 1},
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "dim", "blocks"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "dim": {"type": "integer", "minimum": 0},
                    "blocks": {"type": "array", "items": _block},
                },
            },
        },
        "boundary": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["cell", "faces"],
                "properties": {
                    "cell": {"type": "integer"},
                    "faces": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["cell", "sign"],
                            "properties": {"cell": {"type": "integer"}, "sign": {"enum": [-1, 1]}},
                        },
                    },
                },
            },
        },
    },
}

COLLAPSE = {
    **COMPLEX,
    "required": COMPLEX["required"] + ["log"],
    "properties": {
        **COMPLEX["properties"],
        "log": {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                            "minItems": 2, "maxItems": 2}},
    },
}

HOMOLOGY = {
    "type": "object",
    "required": ["space", "n", "betti", "torsion", "euler"],
    "properties": {
        "space": {"enum": ["round", "line"]},
        "n": {"type": "integer", "minimum": 1},
        "betti": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "torsion": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 2}}},
        "euler": {"type": "integer"},
    },
}

CATALOG = {
    "type": "object",
    "required": ["facts"],
    "properties": {
        "facts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["space", "n", "betti", "provenance"],
                "properties": {
                    "space": {"enum": ["round", "line"]},
                    "n": {"type": "integer", "minimum": 1},
                    "betti": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "provenance": {"type": "string", "minLength": 1},
                },
            },
        },
    },
}
