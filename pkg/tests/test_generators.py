"""The built-in map families: counts, types, determinism."""

import pytest

from polymap.generators import (hex_klein, hex_torus, k7_torus, tetrahedron,
                                tri_torus, truncate)
from polymap.mapfile import serialize_map
from polymap.surface_map import topology


@pytest.mark.parametrize("build,counts,orientable", [
    (tetrahedron, (4, 6, 4, 2), True),
    (lambda: hex_torus(3, 3), (18, 27, 9, 0), True),
    (lambda: hex_torus(4, 3), (24, 36, 12, 0), True),
    (lambda: hex_torus(5, 5), (50, 75, 25, 0), True),
    (lambda: tri_torus(3, 3), (9, 27, 18, 0), True),
    (k7_torus, (7, 21, 14, 0), True),
    (lambda: hex_klein(3, 3), (18, 27, 9, 0), False),
    (lambda: truncate(hex_torus(3, 3)), (54, 81, 27, 0), True),
    (lambda: truncate(tetrahedron()), (12, 18, 8, 2), True),
])
def test_counts_and_orientability(build, counts, orientable):
    top = topology(build())
    got = (top.num_vertices, top.num_edges, top.num_faces,
           top.euler_characteristic)
    assert got == counts
    assert top.orientable == orientable


def test_vertex_types():
    cases = {
        (6, 6, 6): hex_torus(3, 3),
        (3, 3, 3, 3, 3, 3): tri_torus(3, 3),
        (3, 12, 12): truncate(hex_torus(3, 3)),
        (3, 3, 3): tetrahedron(),
        (3, 6, 6): truncate(tetrahedron()),
    }
    for want, rs in cases.items():
        top = topology(rs)
        assert {top.vertex_type(v) for v in rs.vertices} == {want}
    k7 = topology(k7_torus())
    assert {k7.vertex_type(v) for v in k7.rs.vertices} == {(3,) * 6}
    klein = topology(hex_klein(3, 3))
    assert {klein.vertex_type(v) for v in klein.rs.vertices} == {(6, 6, 6)}


def test_face_census():
    assert sorted(topology(hex_torus(3, 3)).face_degrees) == [6] * 9
    assert sorted(topology(tri_torus(3, 3)).face_degrees) == [3] * 18
    assert sorted(topology(k7_torus()).face_degrees) == [3] * 14
    trunc = sorted(topology(truncate(hex_torus(3, 3))).face_degrees)
    assert trunc == [3] * 18 + [12] * 9


def test_parameter_validation():
    for bad in ((2, 3), (3, 2), (0, 5), (3, -1)):
        with pytest.raises(ValueError):
            hex_torus(*bad)
        with pytest.raises(ValueError):
            tri_torus(*bad)
        with pytest.raises(ValueError):
            hex_klein(*bad)
    with pytest.raises(ValueError):
        hex_torus(3.5, 3)


def test_truncation_is_3_regular_and_preserves_surface(corpus):
    for name, rs in corpus.items():
        top = topology(rs)
        trunc = truncate(rs)
        ttop = topology(trunc)
        assert all(trunc.degree(v) == 3 for v in trunc.vertices), name
        assert ttop.euler_characteristic == top.euler_characteristic, name
        assert ttop.orientable == top.orientable, name
        assert ttop.num_faces == top.num_faces + top.num_vertices, name


def test_generators_are_deterministic(corpus):
    rebuilt = {
        "tetrahedron": tetrahedron(),
        "hex_torus(3,3)": hex_torus(3, 3),
        "tri_torus(3,3)": tri_torus(3, 3),
        "k7_torus": k7_torus(),
        "hex_klein(3,3)": hex_klein(3, 3),
    }
    for name, rs in rebuilt.items():
        assert serialize_map(rs) == serialize_map(corpus[name]), name
        assert serialize_map(truncate(rs)) == \
            serialize_map(truncate(corpus[name])), name
