#!/usr/bin/env python3
"""Smoke test for the ecdecomp_py extension module.

Builds nothing itself: expects `cargo build -p ecdecomp-py --release` to have
produced the cdylib, which is copied next to this script under the importable
module name.
"""

import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_module() -> pathlib.Path:
    candidates = [
        ROOT / "target" / "release" / "libecdecomp_py.so",
        ROOT / "target" / "debug" / "libecdecomp_py.so",
        ROOT / "target" / "release" / "libecdecomp_py.dylib",
    ]
    for c in candidates:
        if c.exists():
            target = pathlib.Path(__file__).parent / "ecdecomp_py.so"
            shutil.copyfile(c, target)
            return target
    sys.exit("build the extension first: cargo build -p ecdecomp-py --release")


locate_module()
sys.path.insert(0, str(pathlib.Path(__file__).parent))

import ecdecomp_py as ec  # noqa: E402


def main() -> None:
    # graphs and degrees
    k5 = ec.rainbow_complete(5)
    assert k5.n == 5 and k5.m == 10
    assert k5.min_color_degree() == 4
    assert k5.find_rainbow_triangle() is not None

    c4 = ec.pc_cycle_graph(4)
    assert c4.has_pc_cycle()
    assert sorted(c4.two_color_core()) == [0, 1, 2, 3]

    bowtie = ec.g_bowtie_graph(3, 3, 0)
    assert not bowtie.has_pc_cycle()
    s = ec.minimalize(bowtie)
    assert s["kind"] == "g_bowtie", s

    # round-trip through the text format
    again = ec.parse_ecg(k5.to_ecg())
    assert again == k5

    # partition searches
    outcome, cert = ec.exact_partition(k5, [2, 2])
    assert outcome == "absent" and cert is None

    two_c4 = ec.EcGraph(
        8,
        [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1),
         (4, 5, 0), (5, 6, 1), (6, 7, 0), (4, 7, 1)],
    )
    outcome, cert = ec.partition_2k(two_c4, 2)
    assert outcome == "found"
    assert ec.check_partition(two_c4, cert["parts"], [2, 2])
    assert ec.verify_certificate(two_c4, cert["document"])

    k32 = ec.rainbow_complete(32)
    cert = ec.random_partition(k32, 2, 2, seed=7)
    assert cert is not None and ec.check_partition(k32, cert["parts"], [2, 2])

    cert = ec.partition_complete_a2(ec.rainbow_complete(6), 2)
    assert ec.check_partition(ec.rainbow_complete(6), cert["parts"], [2, 2])

    # probability kernel and thresholds
    assert ec.p_s_exact(1, [1, 1]) == "3/4"
    assert ec.p_s_bound(2, 6) == "11/32"
    assert ec.g_threshold(2, {2: 3}) == 5
    assert ec.bound_chain(3, 2) == 5

    # digraph reductions
    tri = ec.Digraph(3, [(0, 1), (1, 2), (2, 0)])
    g = ec.digraph_to_ecg(tri)
    assert g.edge_color(0, 1) == 1 and g.edge_color(0, 2) == 0
    assert all(g.color_degree(v) == 2 for v in range(3))

    outcome, cycles = ec.find_k_disjoint_dicycles(tri, 1)
    assert outcome == "found" and len(cycles) == 1

    t = ec.random_tournament(7, seed=3)
    assert ec.parse_dg(t.to_dg()).arcs() == t.arcs()

    print("smoke test passed")


if __name__ == "__main__":
    main()
