"""
Independent port-graph oracles.

These functions recompute gluing results with :mod:`networkx` graph
components instead of the chain walk used by :mod:`cobordism_mcp.bordism`,
so the two implementations can be checked against each other.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import networkx as nx

from .bordism import TARGET, Arc, Bordism
from .errors import BoundaryMismatch, NotEndomorphism, NotInvertible


def _components(graph):
    for nodes in nx.connected_components(graph):
        sub = graph.subgraph(nodes)
        total = sum(label for _, _, label in sub.edges(data="label"))
        yield sorted(nodes), total


def glue_compose(f, g):
    """Composes ``f`` then ``g`` by explicit port-graph traversal.

    Args:
        f: a :class:`cobordism_mcp.bordism.Bordism`
        g: a :class:`cobordism_mcp.bordism.Bordism`

    Returns:
        a :class:`cobordism_mcp.bordism.Bordism`
    """
    if f.tgt != g.src:
        raise BoundaryMismatch(f.tgt, g.src)

    graph = nx.MultiGraph()
    outer = {}
    for layer, bordism in (("f", f), ("g", g)):
        for a in bordism.arcs:
            ends = []
            for port in (a.first, a.second):
                glued = (layer == "f") == (port.side == TARGET)
                if glued:
                    node = ("glued", port.index)
                else:
                    node = ("outer", port.side, port.index)
                    outer[node] = port

                graph.add_node(node)
                ends.append(node)

            graph.add_edge(ends[0], ends[1], label=a.label)

    arcs = []
    circles = list(f.circles) + list(g.circles)
    for nodes, total in _components(graph):
        ends = [outer[n] for n in nodes if n in outer]
        if ends:
            arcs.append(Arc(ends[0], ends[1], total))
        else:
            circles.append(total)

    return Bordism(f.src, g.tgt, arcs, circles)


def glue_closure(f):
    """Closes an endomorphism by gluing target port ``i`` to source port
    ``i`` directly.

    Args:
        f: a :class:`cobordism_mcp.bordism.Bordism` with equal source and
            target

    Returns:
        a closed :class:`cobordism_mcp.bordism.Bordism`
    """
    if f.src != f.tgt:
        raise NotEndomorphism(f.src, f.tgt)

    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(f.src)))
    for a in f.arcs:
        graph.add_edge(a.first.index, a.second.index, label=a.label)

    circles = list(f.circles)
    circles += [total for _, total in _components(graph)]
    return Bordism((), (), (), circles)


def permutation_cycles(f):
    """Returns the cycles of an invertible endomorphism.

    Args:
        f: an invertible :class:`cobordism_mcp.bordism.Bordism` with equal
            source and target

    Returns:
        a sorted list of ``(length, label_sum)`` tuples, one per cycle
    """
    if f.src != f.tgt:
        raise NotEndomorphism(f.src, f.tgt)

    if f.circles or not all(a.is_through for a in f.arcs):
        raise NotInvertible("Not a labelled permutation: %s" % f)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(f.src)))
    for a in f.arcs:
        graph.add_edge(a.first.index, a.second.index, label=a.label)

    cycles = []
    for nodes in nx.weakly_connected_components(graph):
        sub = graph.subgraph(nodes)
        total = sum(label for _, _, label in sub.edges(data="label"))
        cycles.append((len(nodes), total))

    return sorted(cycles)

