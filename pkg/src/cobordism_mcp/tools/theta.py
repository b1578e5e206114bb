"""
Trace and Theta tools for the cobordism MCP server.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import logging

from mcp.types import Tool

from ..errors import CobordismError
from ..matrices import parse_rational
from ..scalars import ScalarMultiset
from ..traces import (
    LAMBDA,
    ThetaSpec,
    generating_counterexample,
    generation_obstruction,
    is_generating_witness,
    theta_agrees_with_trace,
    theta_at_diagonal,
    theta_of_endomorphism,
)
from .utils import HEAVY, format_response, mcp_tool, term_summary


logger = logging.getLogger(__name__)

_THETA_PROPERTY = {
    "type": "string",
    "description": "Exponents as 'theta[k1,k2,...]', e.g. 'theta[2,1]'",
}


@mcp_tool()
def trace_term(ctx, term, theta):
    """Evaluates a Theta spec at the endomorphism denoted by a term.

    Args:
        ctx: unused
        term: the term text; it must denote an endomorphism
        theta: the spec text ``theta[k1,...]``

    Returns:
        a dict with the resulting multiset of circle labels
    """
    try:
        spec = ThetaSpec.parse(theta)
        _, bordism, summary = term_summary(term)
        labels = theta_of_endomorphism(bordism, spec)
        summary.update(
            {
                "theta": str(spec),
                "circles": str(labels),
                "labels": list(labels.labels()),
            }
        )
        return format_response(summary)
    except CobordismError as e:
        logger.error("Failed to trace '%s': %s", term, e)
        return format_response(None, success=False, error=str(e))


@mcp_tool()
def classify_theta(ctx, theta):
    """Classifies a Theta spec and reports whether it is generating.

    Args:
        ctx: unused
        theta: the spec text

    Returns:
        a dict with the classifying multiset, the generating flag and,
        for non-generating specs, an unreachable target with its
        obstruction
    """
    try:
        spec = ThetaSpec.parse(theta)
        counterexample = generating_counterexample(spec)
        data = {
            "theta": str(spec),
            "classification": str(spec.exponents),
            "generating": counterexample is None,
        }
        if counterexample is not None:
            target, obstruction = counterexample
            data["unreachable_target"] = str(target)
            data["obstruction"] = obstruction

        return format_response(data)
    except CobordismError as e:
        logger.error("Failed to classify '%s': %s", theta, e)
        return format_response(None, success=False, error=str(e))


@mcp_tool(cost=HEAVY)
def find_generating_witness(ctx, theta, target, bound):
    """Searches for a point at which a Theta spec takes a target value.

    An omitted ``bound`` is filled by the registry from the ``checks``
    section of the settings.

    Args:
        ctx: unused
        theta: the spec text
        target: the target multiset text ``{k1,...}``
        bound: the bound on points and labels searched

    Returns:
        a dict with the witness point, or the named obstruction
    """
    try:
        spec = ThetaSpec.parse(theta)
        goal = ScalarMultiset.parse(target)
        point = is_generating_witness(spec, goal, bound)
        data = {
            "theta": str(spec),
            "target": str(goal),
            "bound": bound,
            "found": point is not None,
        }
        if point is not None:
            data["witness"] = point.to_dict()
        else:
            data["obstruction"] = generation_obstruction(spec, goal)

        return format_response(data)
    except CobordismError as e:
        logger.error("Failed to search for a witness: %s", e)
        return format_response(None, success=False, error=str(e))


@mcp_tool()
def compare_with_trace(ctx, theta, modulus=None, value=None):
    """Compares a Theta spec with the plain trace at ``diag(1, λ)``.

    Args:
        ctx: unused
        theta: the spec text
        modulus (None): an optional prime to reduce coefficients by
        value (None): an optional rational ``"p/q"`` to substitute for
            ``λ``

    Returns:
        a dict with the polynomial value and the agreement flag
    """
    try:
        spec = ThetaSpec.parse(theta)
        data = {
            "theta": str(spec),
            "polynomial": str(theta_at_diagonal(spec, LAMBDA).entry(0, 0)),
            "agrees": theta_agrees_with_trace(spec, modulus=modulus),
        }
        if modulus is not None:
            data["modulus"] = modulus

        if value is not None:
            scalar = theta_at_diagonal(spec, parse_rational(value))
            data["value"] = str(scalar.entry(0, 0))

        return format_response(data)
    except (CobordismError, ZeroDivisionError) as e:
        logger.error("Failed to compare '%s' with the trace: %s", theta, e)
        return format_response(None, success=False, error=str(e))


def register_tools(registry):
    """Registers all trace and Theta tools with the registry.

    Args:
        registry: a :class:`cobordism_mcp.registry.ToolRegistry`
    """
    registry.register(
        Tool(
            name="trace_term",
            description=(
                "Evaluate Theta^{k1,...,kn}, the product of the traces "
                "of the powers f^k1, ..., f^kn, at the endomorphism f "
                "denoted by a term. Returns the circle labels of the "
                "resulting closed bordism."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "term": {
                        "type": "string",
                        "description": (
                            "A term denoting an endomorphism, e.g. "
                            "'a^2 * a^5'"
                        ),
                    },
                    "theta": _THETA_PROPERTY,
                },
                "required": ["term", "theta"],
            },
        ),
        trace_term,
    )

    registry.register(
        Tool(
            name="classify_theta",
            description=(
                "Classify a Theta spec as a multiset of integers and "
                "report whether it generates all tracelike "
                "transformations. Only theta[1] and theta[-1] do; for "
                "any other spec an unreachable target and the reason "
                "are returned."
            ),
            inputSchema={
                "type": "object",
                "properties": {"theta": _THETA_PROPERTY},
                "required": ["theta"],
            },
        ),
        classify_theta,
    )

    registry.register(
        Tool(
            name="find_generating_witness",
            description=(
                "Find an object with an automorphism at which a Theta "
                "spec evaluates to the given multiset of circle "
                "labels. theta[1] and theta[-1] always succeed; other "
                "specs are searched up to the bound on points and "
                "labels, or rejected with a named obstruction."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "theta": _THETA_PROPERTY,
                    "target": {
                        "type": "string",
                        "description": "Target multiset, e.g. '{2,-5,0}'",
                    },
                    "bound": {
                        "type": "integer",
                        "description": (
                            "Bound on points and labels searched. "
                            "Default is %d" % registry.defaults["bound"]
                        ),
                        "default": registry.defaults["bound"],
                    },
                },
                "required": ["theta", "target"],
            },
        ),
        find_generating_witness,
    )

    registry.register(
        Tool(
            name="compare_with_trace",
            description=(
                "Evaluate a Theta spec at the plane with automorphism "
                "diag(1, lambda), giving the Laurent polynomial "
                "(1 + lambda^k1)...(1 + lambda^kn), and report whether "
                "it equals the plain trace 1 + lambda, optionally "
                "modulo a prime."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "theta": _THETA_PROPERTY,
                    "modulus": {
                        "type": "integer",
                        "description": "Optional prime modulus",
                    },
                    "value": {
                        "type": "string",
                        "description": (
                            "Optional rational 'p/q' to substitute "
                            "for lambda"
                        ),
                    },
                },
                "required": ["theta"],
            },
        ),
        compare_with_trace,
    )
