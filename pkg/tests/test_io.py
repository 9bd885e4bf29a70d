import json

import pytest

from burnkit import generators as gen
from burnkit.errors import InputError
from burnkit.io import (
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    read_labels,
    resolve_vertex,
    write_edge_list,
)
from burnkit.verify import FIGURE1_LABELS


def test_round_trip(tmp_path):
    g = gen.random_connected_graph(12, 20, 3)
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g
    assert path.read_bytes().endswith(b"\n") and b"\r" not in path.read_bytes()


def test_comments_and_blank_lines():
    g = parse_edge_list("# fig\nn 3\n\n0 1  # edge\n2 1\n")
    assert g.edges() == [(0, 1), (1, 2)]
    assert format_edge_list(g) == "n 3\n0 1\n1 2\n"


@pytest.mark.parametrize("text", ["", "3\n0 1\n", "n x\n", "n 3\n0\n", "n 3\n0 a\n", "n 3\n0 1\n1 0\n", "n 2\n0 5\n"])
def test_malformed(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_labels_json_and_lines(tmp_path):
    p = tmp_path / "labels.json"
    p.write_text(json.dumps(FIGURE1_LABELS))
    labels = read_labels(p)
    assert resolve_vertex("v3", labels) == 2
    assert resolve_vertex("7", labels) == 7
    q = tmp_path / "labels.txt"
    q.write_text("v1 0\nv2 1\n")
    assert read_labels(q) == {"v1": 0, "v2": 1}
    q.write_text("v1 0\nv2 0\n")
    with pytest.raises(InputError):
        read_labels(q)
    with pytest.raises(InputError):
        resolve_vertex("v99", labels)
