"""Published JSON schemas for the CLI output.

Every analysis subcommand emits a report envelope whose payload validates
against the schema registered here for that subcommand.  ``generate`` and
``complement`` emit a bare canonical graph object instead, so they
validate against GRAPH.
"""

from __future__ import annotations

_NUMBER = {"type": "number"}
_INT = {"type": "integer"}
_COMPLEX_PAIR = {
    "type": "array", "items": _NUMBER, "minItems": 2, "maxItems": 2,
}

GRAPH = {
    "type": "object",
    "required": ["n", "arcs", "loops"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "arcs": {"type": "array",
                 "items": {"type": "array", "items": _INT,
                           "minItems": 2, "maxItems": 2}},
        "loops": {"type": "array", "items": _INT},
    },
}

SPECTRUM_PAYLOAD = {
    "type": "object",
    "required": ["eigenvalues", "charpoly", "rho"],
    "additionalProperties": False,
    "properties": {
        "eigenvalues": {"type": "array", "items": _COMPLEX_PAIR},
        "charpoly": {"type": "array", "items": _INT},
        "rho": _NUMBER,
        "residuals": {"type": "array", "items": _NUMBER},
    },
}

ENERGY_PAYLOAD = {
    "type": "object",
    "required": ["energy", "rho", "center", "deviations"],
    "additionalProperties": False,
    "properties": {
        "energy": _NUMBER,
        "rho": _NUMBER,
        "center": _NUMBER,
        "deviations": {"type": "array", "items": _NUMBER},
    },
}

_CERTIFICATE = {
    "type": "object",
    "required": ["bound_id", "lhs", "rhs", "holds", "slack", "equality"],
    "additionalProperties": False,
    "properties": {
        "bound_id": {"type": "string"},
        "lhs": _NUMBER,
        "rhs": _NUMBER,
        "holds": {"type": "boolean"},
        "slack": _NUMBER,
        "equality": {"type": "boolean"},
        "witness": {"type": ["string", "null"]},
    },
}

BOUNDS_PAYLOAD = {
    "type": "object",
    "required": ["certificates", "all_hold"],
    "additionalProperties": False,
    "properties": {
        "certificates": {"type": "array", "items": _CERTIFICATE},
        "all_hold": {"type": "boolean"},
    },
}

SCC_PAYLOAD = {
    "type": "object",
    "required": ["component_of", "components", "non_cycle_arcs",
                 "is_disjoint_union_of_components"],
    "additionalProperties": False,
    "properties": {
        "component_of": {"type": "array", "items": _INT},
        "components": {"type": "array",
                       "items": {"type": "array", "items": _INT}},
        "non_cycle_arcs": {"type": "array",
                           "items": {"type": "array", "items": _INT,
                                     "minItems": 2, "maxItems": 2}},
        "is_disjoint_union_of_components": {"type": "boolean"},
    },
}

_IMPLICATION = {
    "type": "object",
    "required": ["status", "antecedent", "consequent", "implication_ok"],
    "additionalProperties": False,
    "properties": {
        "status": {"enum": ["applied", "degenerate", "not_applicable"]},
        "antecedent": {"type": "object"},
        "consequent": {"type": "object"},
        "implication_ok": {"type": "boolean"},
    },
}

DECOMPOSE_PAYLOAD = {
    "type": "object",
    "required": ["components", "total_energy", "sum_component_energy", "l",
                 "permutation", "center", "sufficient_condition",
                 "necessary_condition"],
    "additionalProperties": False,
    "properties": {
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "sigma", "ratio", "energy", "eigenvalues",
                             "a_size", "b_size"],
                "additionalProperties": False,
                "properties": {
                    "n": _INT,
                    "sigma": _INT,
                    "ratio": _NUMBER,
                    "energy": _NUMBER,
                    "eigenvalues": {"type": "array", "items": _COMPLEX_PAIR},
                    "a_size": _INT,
                    "b_size": _INT,
                },
            },
        },
        "total_energy": _NUMBER,
        "sum_component_energy": _NUMBER,
        "l": _INT,
        "permutation": {"type": "array", "items": _INT},
        "center": _NUMBER,
        "sufficient_condition": _IMPLICATION,
        "necessary_condition": _IMPLICATION,
    },
}

SWEEP_PAYLOAD = {
    "type": "object",
    "required": ["n", "mode", "theorems", "graphs_checked", "checks",
                 "equality_census", "counterexamples", "census_findings",
                 "params", "wall_time"],
    "additionalProperties": False,
    "properties": {
        "n": _INT,
        "mode": {"enum": ["exhaustive", "random"]},
        "theorems": {"type": "array", "items": {"type": "string"}},
        "graphs_checked": _INT,
        "checks": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["pass", "fail", "na"],
                "properties": {"pass": _INT, "fail": _INT, "na": _INT},
            },
        },
        "equality_census": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["graph", "signature"],
                    "properties": {
                        "graph": GRAPH,
                        "signature": {"type": "string"},
                        "witness": {"type": ["string", "null"]},
                    },
                },
            },
        },
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "graph"],
                "properties": {
                    "check": {"type": "string"},
                    "graph": GRAPH,
                    "detail": {"type": ["string", "null"]},
                },
            },
        },
        "census_findings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["bound_id", "graph", "reason"],
                "properties": {
                    "bound_id": {"type": "string"},
                    "graph": GRAPH,
                    "reason": {"type": "string"},
                },
            },
        },
        "params": {"type": "object"},
        "wall_time": _NUMBER,
    },
}

REPORT_ENVELOPE = {
    "type": "object",
    "required": ["command", "input", "payload", "version", "timestamp"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "input": {
            "type": ["object", "null"],
            "required": ["n", "m", "sigma", "c2"],
            "properties": {"n": _INT, "m": _INT, "sigma": _INT, "c2": _INT},
        },
        "payload": {"type": "object"},
        "version": {"type": "string"},
        "timestamp": {"type": "string"},
    },
}

PAYLOAD_SCHEMAS = {
    "spectrum": SPECTRUM_PAYLOAD,
    "energy": ENERGY_PAYLOAD,
    "bounds": BOUNDS_PAYLOAD,
    "scc": SCC_PAYLOAD,
    "decompose": DECOMPOSE_PAYLOAD,
    "sweep": SWEEP_PAYLOAD,
}
