"""Shared fixtures and helper constructions for the test suite."""

import itertools
import random

import pytest

from polymap.generators import (hex_klein, hex_torus, k7_torus, tetrahedron,
                                tri_torus, truncate)
from polymap.surface_map import RotationSystem, topology
from polymap.validity import check_polyhedral


def base_corpus():
    """The standing corpus of generated maps, keyed by a readable name."""
    maps = {"tetrahedron": tetrahedron()}
    for p, q in itertools.product((3, 4, 5), repeat=2):
        maps["hex_torus(%d,%d)" % (p, q)] = hex_torus(p, q)
    maps["tri_torus(3,3)"] = tri_torus(3, 3)
    maps["k7_torus"] = k7_torus()
    maps["hex_klein(3,3)"] = hex_klein(3, 3)
    return maps


def full_corpus():
    """Base corpus plus the truncation of every member."""
    maps = base_corpus()
    for name, rs in list(maps.items()):
        maps["truncate(%s)" % name] = truncate(rs)
    return maps


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def corpus_tops(corpus):
    return {name: topology(rs) for name, rs in corpus.items()}


@pytest.fixture(scope="session")
def corpus_validity(corpus_tops):
    return {name: check_polyhedral(top)
            for name, top in corpus_tops.items()}


# -- plain graphs for the path machinery ---------------------------------

def complete_graph(n):
    vs = ["k%d" % i for i in range(n)]
    return {v: tuple(w for w in vs if w != v) for v in vs}


def cycle_graph(n):
    vs = ["c%d" % i for i in range(n)]
    return {vs[i]: (vs[(i - 1) % n], vs[(i + 1) % n]) for i in range(n)}


def petersen_graph():
    adj = {}
    for i in range(5):
        adj["o%d" % i] = ("o%d" % ((i - 1) % 5), "o%d" % ((i + 1) % 5),
                          "i%d" % i)
        adj["i%d" % i] = ("i%d" % ((i - 2) % 5), "i%d" % ((i + 2) % 5),
                          "o%d" % i)
    return adj


def random_connected_graph(rng, num_vertices, extra_edge_prob=0.35):
    """A connected simple graph: random spanning tree plus random edges."""
    vs = ["r%d" % i for i in range(num_vertices)]
    edges = set()
    for i in range(1, num_vertices):
        edges.add(tuple(sorted((vs[i], vs[rng.randrange(i)]))))
    for u, w in itertools.combinations(vs, 2):
        if rng.random() < extra_edge_prob:
            edges.add(tuple(sorted((u, w))))
    adj = {v: [] for v in vs}
    for u, w in sorted(edges):
        adj[u].append(w)
        adj[w].append(u)
    return {v: tuple(sorted(row)) for v, row in adj.items()}


# -- maps built by hand for edge cases ------------------------------------

def antiprism(n):
    """The n-antiprism on the sphere: 2n triangles between two n-gons."""
    nb = {}
    for i in range(n):
        u, w = "u%04d" % i, "w%04d" % i
        up, un = "u%04d" % ((i - 1) % n), "u%04d" % ((i + 1) % n)
        wp, wn = "w%04d" % ((i - 1) % n), "w%04d" % ((i + 1) % n)
        nb[u] = [un, up, w, wn]
        nb[w] = [wn, u, up, wp]
    return RotationSystem.from_rotations(nb)


def drum(m, apex=1, pegged=False):
    """A prism over an m-gon with one vertical strut replaced by a ladder
    of ``apex`` rungs, creating two faces of degree apex+2 (triangles for
    apex=1, pentagons for apex=3) that each share one edge with an m-gon.
    Every vertex has degree 3, so those shared edges are weak.  With
    ``pegged`` the u0-w0 strut is restored, raising u0 and w0 to degree 4
    and turning the shared edges semi-weak."""
    nb = {}
    for i in range(m):
        u, w = "u%04d" % i, "w%04d" % i
        un, up = "u%04d" % ((i + 1) % m), "u%04d" % ((i - 1) % m)
        wn, wp = "w%04d" % ((i + 1) % m), "w%04d" % ((i - 1) % m)
        nb[u] = [w, un, up]
        nb[w] = [wn, u, wp]
    xs = ["x%d" % i for i in range(apex)]
    ys = ["y%d" % i for i in range(apex)]
    u0, u1, w0, w1 = "u0000", "u0001", "w0000", "w0001"
    um, wm = "u%04d" % (m - 1), "w%04d" % (m - 1)
    nb[u0] = [xs[0], u1, um]
    nb[u1] = ["u0002", u0, xs[-1]]
    nb[w0] = [w1, ys[0], wm]
    nb[w1] = ["w0002", ys[-1], w0]
    for i in range(apex):
        left_x = xs[i - 1] if i else u0
        right_x = xs[i + 1] if i + 1 < apex else u1
        left_y = ys[i - 1] if i else w0
        right_y = ys[i + 1] if i + 1 < apex else w1
        nb[xs[i]] = [ys[i], right_x, left_x]
        nb[ys[i]] = [right_y, xs[i], left_y]
    if pegged:
        nb[u0] = [w0, xs[0], u1, um]
        nb[w0] = [w1, ys[0], u0, wm]
    return RotationSystem.from_rotations(nb)


def subdivide(rs, edge, k):
    """Replace ``edge`` by a path through k fresh degree-2 vertices."""
    rot = {v: [d.edge for d in rs.rotation[v]] for v in rs.vertices}
    u, w = rs.endpoints(edge)
    pieces = ["%s:%d" % (edge, i) for i in range(k + 1)]
    rot[u][rot[u].index(edge)] = pieces[0]
    iw = len(rot[w]) - 1 - rot[w][::-1].index(edge)
    rot[w][iw] = pieces[-1]
    for i in range(k):
        rot["%s-z%d" % (edge, i)] = [pieces[i], pieces[i + 1]]
    sig = {e: s for e, s in rs.signature.items() if e != edge}
    return RotationSystem(rot, sig)


def perturb(rs, rng, moves=2):
    """A nearby rotation system: swap rotation entries, flip signs, or
    reverse one vertex's rotation.  Output is structurally valid but has
    no promised surface properties."""
    rot = {v: [d.edge for d in rs.rotation[v]] for v in rs.vertices}
    sig = dict(rs.signature)
    vertices = sorted(rot)
    edges = sorted(sig)
    for _ in range(moves):
        kind = rng.randrange(3)
        if kind == 0:
            v = vertices[rng.randrange(len(vertices))]
            row = rot[v]
            if len(row) >= 2:
                i = rng.randrange(len(row))
                j = rng.randrange(len(row))
                row[i], row[j] = row[j], row[i]
        elif kind == 1:
            e = edges[rng.randrange(len(edges))]
            sig[e] = -sig[e]
        else:
            v = vertices[rng.randrange(len(vertices))]
            rot[v].reverse()
    return RotationSystem(rot, sig)


def seeded_rng(salt):
    return random.Random(20260817 ^ salt)
