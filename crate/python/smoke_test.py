#!/usr/bin/env python3
"""Smoke test for the windec_py extension module.

Locates the compiled cdylib under target/, imports it under the module name
Python expects, and exercises every exported entry point once.

    cargo build -p windec-py
    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def locate_extension() -> pathlib.Path:
    candidates = []
    for profile in ("debug", "release"):
        for name in ("libwindec_py.so", "libwindec_py.dylib", "windec_py.dll"):
            candidates.extend((ROOT / "target" / profile).glob(name))
    if not candidates:
        sys.exit("no built extension found; run `cargo build -p windec-py` first")
    return max(candidates, key=lambda p: p.stat().st_mtime)


def main() -> None:
    built = locate_extension()
    staging = tempfile.mkdtemp(prefix="windec_py_")
    shutil.copy2(built, pathlib.Path(staging) / "windec_py.so")
    sys.path.insert(0, staging)
    import windec_py

    # Graph construction and bookkeeping.
    graph = windec_py.Graph("rotated_planar", 3, 12, 0.02)
    assert graph.num_vertices == 4 * 12, graph.num_vertices
    assert graph.stabilizers_per_round == 4
    assert graph.rounds == 12
    assert graph.export_text().startswith("# decoding-graph")
    rep = windec_py.Graph("repetition", 5, 10, 0.01)
    assert rep.num_vertices == 4 * 10

    # Sampling is deterministic in the seed.
    s1 = graph.sample_syndrome(0.02, 42)
    s2 = graph.sample_syndrome(0.02, 42)
    assert s1.defects == s2.defects and s1.logical_frame == s2.logical_frame
    assert len(s1.defects) == graph.num_vertices

    # All four drivers agree on the logical verdict for a sampled shot, and
    # the windowed drivers agree with each other edge for edge.
    g = windec_py.decode_global(graph, s1.defects)
    sl = windec_py.decode_sliding(graph, s1.defects, 3, 3)
    par = windec_py.decode_parallel(graph, s1.defects, 3)
    pipe = windec_py.decode_pipeline(graph, s1.defects, 3, n_pairs=2)
    assert isinstance(g.logical_flip, bool)
    assert par.edges == pipe.edges and par.logical_flip == pipe.logical_flip
    assert par.num_windows == pipe.num_windows
    assert windec_py.decode_global(graph, s1.defects, growth="full").logical_flip in (True, False)

    # Fidelity sanity on a quiet patch: no faults, no corrections.
    quiet = graph.sample_syndrome(1e-12, 1)
    assert windec_py.decode_global(graph, quiet.defects).edges == []

    # Pipeline sizing worked example.
    plan = windec_py.plan_resources(1e-6, 200e-6, 1e-6, 10, 20, 11)
    assert plan.n_par == 10 and plan.n_lag == 400 and plan.aux_qubits == 37, plan

    # Window layout manifests.
    layout = json.loads(windec_py.parallel_windows(8, 1))
    assert len(layout) == 4
    assert layout[0]["layer"]["kind"] == "a"
    assert sorted(w["commit"] for w in layout) == [[0, 2], [2, 5], [5, 6], [6, 8]]
    steps = json.loads(windec_py.sliding_windows(8, 2, 2))
    assert [w["commit"] for w in steps] == [[0, 2], [2, 4], [4, 8]]

    # Hex tiling summary keeps same-colored cells three radii apart.
    tiling = json.loads(windec_py.hex_tiling(10.0, 8.0, 1.0))
    assert tiling["num_colors"] == 3
    assert tiling["min_same_color_center_distance"] >= 3.0 - 1e-9
    assert len(tiling["cells"]) > 0

    # Errors surface as ValueError, not crashes.
    try:
        windec_py.Graph("heptagonal", 3, 4, 0.02)
    except ValueError:
        pass
    else:
        sys.exit("expected ValueError for an unknown family")
    try:
        windec_py.decode_global(graph, [False] * 3)
    except ValueError:
        pass
    else:
        sys.exit("expected ValueError for a short defect vector")

    print("smoke test passed:", built.relative_to(ROOT))


if __name__ == "__main__":
    main()
