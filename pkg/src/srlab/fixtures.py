"""Bundled input files: the worked examples every test suite leans on.

``COMPLEXES`` and ``GRAPHS`` hold the exact documents also shipped under
``fixtures/`` at the repository root; ``fixture_text`` serves the CLI's
``fixtures NAME`` subcommand.  MT6 is the nine-facet S_3-but-not-CM
complex, DUALC5 the dual of the 5-cycle's clique complex, R6 the
six-edge graph complex whose dual D6 has projective dimension 3.
"""

from __future__ import annotations

from .complexes import Complex, parse_complex
from .graphs import Graph, parse_graph

COMPLEXES: dict[str, str] = {
    "C4": """\
# boundary of the square
V: 4
1 2
1 4
2 3
3 4
""",
    "2E": """\
# two disjoint edges: Buchsbaum, disconnected
V: 4
1 2
3 4
""",
    "MT6": """\
# Murai-Terai: satisfies S_3, Buchsbaum, not Cohen-Macaulay
V: 6
1 2 3 5
1 2 4 5
1 2 4 6
1 3 4 5
1 3 4 6
1 3 5 6
2 3 4 6
2 3 5 6
2 4 5 6
""",
    "DUALC5": """\
# Alexander dual of the clique complex of the 5-cycle
V: 5
1 2 4
1 3 4
1 3 5
2 3 5
2 4 5
""",
    "R6": """\
# five-cycle with a pendant edge at vertex 5
V: 6
1 2
1 5
2 3
3 4
4 5
5 6
""",
    "D6": """\
# Alexander dual of R6: CM_2 but not CM_1, projdim 3
V: 6
1 2 3 5
1 2 4 5
1 2 4 6
1 3 4 5
1 3 4 6
1 3 5 6
2 3 4 5
2 3 5 6
2 4 5 6
""",
    "SIMPLEX_1": "V: 1\n1\n",
    "SIMPLEX_2": "V: 2\n1 2\n",
    "SIMPLEX_3": "V: 3\n1 2 3\n",
    "SIMPLEX_4": "V: 4\n1 2 3 4\n",
}

GRAPHS: dict[str, str] = {
    "C5.graph": """\
# the 5-cycle
V: 5
1 2
2 3
3 4
4 5
1 5
""",
}


def fixture_names() -> list[str]:
    return sorted(COMPLEXES) + sorted(GRAPHS)


def fixture_text(name: str) -> str:
    if name in COMPLEXES:
        return COMPLEXES[name]
    if name in GRAPHS:
        return GRAPHS[name]
    raise KeyError(f"unknown fixture {name!r} (available: {', '.join(fixture_names())})")


def fixture_complex(name: str) -> Complex:
    return parse_complex(COMPLEXES[name])


def fixture_graph(name: str) -> Graph:
    return parse_graph(GRAPHS[name])
