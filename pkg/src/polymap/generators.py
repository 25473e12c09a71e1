"""Reference map families used throughout the test corpus.

All generators return :class:`~polymap.surface_map.RotationSystem`
objects with string vertex ids, labelled deterministically so that
serialised output is stable run to run.

The torus families are quotients of the planar hexagonal / triangular
lattices.  Rotations are written down in one global counterclockwise
frame, so all signatures are +1 and the quotients are orientable.  The
Klein-bottle family reuses the hexagonal cylinder and reglues one wrap
column through a reflection, marked by negative signatures on the
reglued edges.
"""

from __future__ import annotations

from .surface_map import RotationSystem

__all__ = [
    "tetrahedron",
    "hex_torus",
    "tri_torus",
    "k7_torus",
    "hex_klein",
    "truncate",
]


def tetrahedron():
    """The tetrahedron map on the sphere (planar rotations)."""
    neighbors = {
        "0": ["3", "1", "2"],
        "1": ["2", "0", "3"],
        "2": ["3", "0", "1"],
        "3": ["1", "0", "2"],
    }
    return RotationSystem.from_rotations(neighbors)


def _check_params(p, q):
    if not (isinstance(p, int) and isinstance(q, int)) or p < 3 or q < 3:
        raise ValueError("torus quotient parameters must be integers >= 3")


def _hex_vertex(kind, i, j):
    return "%s%d.%d" % (kind, i, j)


def hex_torus(p, q):
    """3-regular hexagonal map on the torus: 2pq vertices, pq hexagons.

    Vertices form two triangular sublattices a(i,j) and b(i,j) with
    i mod p, j mod q; each a connects to the b of its own cell and the
    cells one step back in each lattice direction.
    """
    _check_params(p, q)
    neighbors = {}
    for i in range(p):
        for j in range(q):
            neighbors[_hex_vertex("a", i, j)] = [
                _hex_vertex("b", i, j),
                _hex_vertex("b", (i - 1) % p, j),
                _hex_vertex("b", i, (j - 1) % q),
            ]
            neighbors[_hex_vertex("b", i, j)] = [
                _hex_vertex("a", i, (j + 1) % q),
                _hex_vertex("a", i, j),
                _hex_vertex("a", (i + 1) % p, j),
            ]
    return RotationSystem.from_rotations(neighbors)


def tri_torus(p, q):
    """6-regular triangulated torus: pq vertices, 2pq triangles."""
    _check_params(p, q)
    offsets = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    neighbors = {}
    for i in range(p):
        for j in range(q):
            neighbors["%d.%d" % (i, j)] = [
                "%d.%d" % ((i + di) % p, (j + dj) % q) for di, dj in offsets]
    return RotationSystem.from_rotations(neighbors)


def k7_torus():
    """K7 triangulating the torus: the cyclic rotation i -> i + (1, 3, 2, 6, 4, 5)."""
    shifts = (1, 3, 2, 6, 4, 5)
    neighbors = {
        str(i): [str((i + s) % 7) for s in shifts] for i in range(7)}
    return RotationSystem.from_rotations(neighbors)


def hex_klein(p, q):
    """3-regular hexagonal map on the Klein bottle: chi = 0, non-orientable.

    Same hexagonal cylinder as :func:`hex_torus`, but the wrap column in
    the j direction is reglued through the reflection i -> -i (mod p);
    the p reglued edges carry signature -1.
    """
    _check_params(p, q)
    neighbors = {}
    negative = []
    for i in range(p):
        for j in range(q):
            down = (_hex_vertex("b", i, (j - 1) % q) if j > 0
                    else _hex_vertex("b", (-i) % p, q - 1))
            neighbors[_hex_vertex("a", i, j)] = [
                _hex_vertex("b", i, j),
                _hex_vertex("b", (i - 1) % p, j),
                down,
            ]
            up = (_hex_vertex("a", i, (j + 1) % q) if j < q - 1
                  else _hex_vertex("a", (-i) % p, 0))
            neighbors[_hex_vertex("b", i, j)] = [
                up,
                _hex_vertex("a", i, j),
                _hex_vertex("a", (i + 1) % p, j),
            ]
        negative.append((_hex_vertex("a", i, 0), _hex_vertex("b", (-i) % p, q - 1)))
    return RotationSystem.from_rotations(neighbors, negative_edges=negative)


def truncate(rs):
    """Truncate every vertex of a map.

    A vertex of degree d becomes a d-cycle of new vertices, one per
    dart; original edges survive under their own ids between the new
    vertices at their two ends, and each original k-face becomes a
    2k-face.  Signatures are inherited, so Euler characteristic and
    orientability are preserved.

    New vertex ``v/t`` sits on dart ``t`` of the rotation at ``v``; the
    cycle edge between corners t and t+1 of v is named ``v/ct``.
    """
    rotation_edges = {}
    signature = dict(rs.signature)
    for v in rs.vertices:
        d = rs.degree(v)
        for t, dart in enumerate(rs.rotation[v]):
            rotation_edges["%s/%d" % (v, t)] = [
                dart.edge,
                "%s/c%d" % (v, t),
                "%s/c%d" % (v, (t - 1) % d),
            ]
    return RotationSystem(rotation_edges, signature)
