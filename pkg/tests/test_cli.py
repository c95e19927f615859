import random

import pytest

from cliquedelta import CliqueRegistry, EdgeBatch, Graph, apply_insert_batch, ttt
from cliquedelta.cli import CSV_HEADER, main
from cliquedelta.signatures import signature
from cliquedelta.streamio import (EdgeStream, gen_stream, parse_edge_list,
                                  write_stream, StreamConfig)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- mce ----------------------------------------------------------------


def test_mce_triangle(tmp_path, capsys):
    path = write(tmp_path, "tri.edges", "1 2\n2 3\n1 3\n")
    assert main(["mce", path]) == 0
    assert capsys.readouterr().out == "1,2,3\ncount=1\n"


def test_mce_count_only(tmp_path, capsys):
    path = write(tmp_path, "p.edges", "1 2\n2 3\n")
    assert main(["mce", path, "--count-only"]) == 0
    assert capsys.readouterr().out == "count=2\n"


def test_mce_missing_file_exit_2(tmp_path, capsys):
    assert main(["mce", str(tmp_path / "nope.edges")]) == 2
    assert "parse error" in capsys.readouterr().err


def test_mce_malformed_input_exit_2(tmp_path, capsys):
    path = write(tmp_path, "bad.edges", "1 2 3\n")
    assert main(["mce", path]) == 2


def test_usage_errors_exit_1(capsys):
    assert main([]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["stream"]) == 1
    capsys.readouterr()


# -- stream -------------------------------------------------------------


def small_stream(tmp_path, seed=2):
    rng = random.Random(seed)
    g = Graph()
    for v in range(1, 21):
        g.add_vertex(v)
    for u in range(1, 21):
        for v in range(u + 1, 21):
            if rng.random() < 0.3:
                g.add_edge(u, v)
    stream = gen_stream(g, StreamConfig(retain_prob=0.5, batch_size=10, seed=seed))
    return write(tmp_path, "s.stream", write_stream(stream)), g, stream


def test_stream_csv_stdout(tmp_path, capsys):
    path, _, stream = small_stream(tmp_path)
    assert main(["stream", path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + len(stream.batches)
    for line in lines[1:]:
        cells = line.split(",")
        assert len(cells) == 6
        assert all(int(c) >= 0 for c in cells)


def test_stream_empty_batches_header_only(tmp_path, capsys):
    path = write(tmp_path, "e.stream",
                 write_stream(EdgeStream(Graph.from_edges([(1, 2)]), [])))
    assert main(["stream", path]) == 0
    assert capsys.readouterr().out == CSV_HEADER + "\n"


def test_stream_metrics_out_and_snapshot(tmp_path, capsys):
    path, g, _ = small_stream(tmp_path)
    metrics = tmp_path / "m.csv"
    snap = tmp_path / "reg.snap"
    assert main(["stream", path, "--metrics-out", str(metrics),
                 "--snapshot-out", str(snap), "--verify-signatures"]) == 0
    assert capsys.readouterr().out == ""
    assert metrics.read_text().splitlines()[0] == CSV_HEADER
    # the snapshot must describe exactly the maximal cliques of the full graph
    restored = CliqueRegistry.restore(snap.read_bytes())
    want = {signature(c) for c in ttt(g)}
    assert set(restored.signatures()) == want


@pytest.mark.parametrize("algo", ["enumn", "enumnte", "naive"])
def test_stream_algorithms_agree(tmp_path, algo, capsys):
    path, _, _ = small_stream(tmp_path, seed=7)
    out = tmp_path / f"{algo}.cliques"
    assert main(["stream", path, "--algo", algo,
                 "--metrics-out", str(tmp_path / f"{algo}.csv"),
                 "--emit-cliques", str(out)]) == 0
    capsys.readouterr()
    ref = tmp_path / "ref.cliques"
    if not ref.exists():
        out.replace(ref)
    else:
        assert out.read_text() == ref.read_text()


def test_stream_change_matches_library(tmp_path, capsys):
    path, _, stream = small_stream(tmp_path, seed=5)
    out = tmp_path / "c.cliques"
    assert main(["stream", path, "--emit-cliques", str(out),
                 "--metrics-out", str(tmp_path / "c.csv")]) == 0
    capsys.readouterr()
    g = stream.initial_graph.copy()
    reg = CliqueRegistry.from_cliques(ttt(g))
    want_lines = []
    for i, batch in enumerate(stream.batches):
        change = apply_insert_batch(g, batch, reg)
        want_lines.append(f"batch {i}")
        want_lines += [f"new {','.join(map(str, c))}"
                       for c in sorted(change.new_cliques)]
        want_lines += [f"del {','.join(map(str, c))}"
                       for c in sorted(change.del_cliques)]
    assert out.read_text() == "\n".join(want_lines) + "\n"


# -- verify -------------------------------------------------------------


def test_verify_passes(capsys):
    assert main(["verify", "--trials", "30", "--max-n", "12", "--seed", "4"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_zero_trials_warns(capsys):
    assert main(["verify", "--trials", "0"]) == 0
    out = capsys.readouterr().out
    assert "warning" in out and "PASS" in out


def test_verify_detects_injected_fault(capsys):
    assert main(["verify", "--trials", "30", "--max-n", "12", "--seed", "4",
                 "--inject-fault"]) == 3
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "edges:" in out  # repro instance is printed


# -- extremal -----------------------------------------------------------


def test_extremal_moon_moser(tmp_path, capsys):
    out = tmp_path / "mm"
    assert main(["extremal", "moon-moser", "6", "--out", str(out)]) == 0
    assert capsys.readouterr().out == "cliques=9\n"
    assert (tmp_path / "mm.predict").read_text() == "cliques=9\n"
    g = parse_edge_list((tmp_path / "mm.edges").read_text())
    assert sum(1 for _ in ttt(g)) == 9


def test_extremal_single_edge(tmp_path, capsys):
    out = tmp_path / "se"
    assert main(["extremal", "single-edge", "6", "--out", str(out)]) == 0
    predict = capsys.readouterr().out.strip()
    assert predict == "edge=5,6 cliques_before=8 cliques_after=4 change=12"
    g = parse_edge_list((tmp_path / "se.edges").read_text())
    reg = CliqueRegistry.from_cliques(ttt(g))
    change = apply_insert_batch(g, EdgeBatch.insert([(5, 6)]), reg)
    assert len(change.new_cliques) + len(change.del_cliques) == 12


def test_extremal_batch(tmp_path, capsys):
    out = tmp_path / "b"
    assert main(["extremal", "batch", "8", "4", "--out", str(out)]) == 0
    predict = capsys.readouterr().out.strip()
    assert predict.endswith("change=32")
    g = parse_edge_list((tmp_path / "b.edges").read_text())
    edges = [tuple(map(int, ln.split()))
             for ln in (tmp_path / "b.batch").read_text().splitlines()]
    reg = CliqueRegistry.from_cliques(ttt(g))
    change = apply_insert_batch(g, EdgeBatch.insert(edges), reg)
    assert len(change.new_cliques) + len(change.del_cliques) == 32


def test_extremal_batch_requires_eps(tmp_path, capsys):
    assert main(["extremal", "batch", "8", "--out", str(tmp_path / "x")]) == 1
    assert "eps" in capsys.readouterr().err


def test_extremal_mm_pair(tmp_path, capsys):
    out = tmp_path / "pair"
    assert main(["extremal", "mm-pair", "7", "--out", str(out)]) == 0
    capsys.readouterr()
    h = parse_edge_list((tmp_path / "pair-h.edges").read_text())
    g = parse_edge_list((tmp_path / "pair-g.edges").read_text())
    assert sum(1 for _ in ttt(h)) == 12
    assert sum(1 for _ in ttt(g)) == 12
    assert sorted(h.edges()) != sorted(g.edges())


def test_extremal_invalid_n_exit_2(tmp_path, capsys):
    assert main(["extremal", "moon-moser", "1", "--out", str(tmp_path / "x")]) == 2
    capsys.readouterr()
