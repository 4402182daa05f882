#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import json
from fractions import Fraction

import pytest

from spunnormal.context import MalformedDocument
from spunnormal.fixtures import WHL_TABLE, fixture_path, load_fixture
from spunnormal.surfaces import (EXPORTER_TYPES, PFComplex, VertexRow, load_reference, match_reference,
                                 read_vertex_table, write_vertex_table)

ROWS = [
    VertexRow(id=1, coordinate=(1, 0, 0, 0, 0, 2), boundary=(0, Fraction(-1, 2))),
    VertexRow(id=2, coordinate=(0, 0, 1, 1, 0, 0), boundary=(2, 0)),
]


@pytest.mark.cpu
def test_table_and_csv():
    table = write_vertex_table(ROWS, 'table')
    lines = table.splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ['vertex', 'q_0', "q'_0", "q''_0", 'q_1', "q'_1", "q''_1", 'nu(L0)', '-nu(M0)']
    assert lines[1].split()[-1] == '-1/2'

    csv_lines = write_vertex_table(ROWS, 'csv').splitlines()
    assert csv_lines[0].startswith('vertex,q_0')
    assert csv_lines[2] == '2,0,0,1,1,0,0,2,0'
    assert write_vertex_table([], 'table') == ''
    with pytest.raises(AssertionError):
        write_vertex_table(ROWS, 'xml')


@pytest.mark.cpu
def test_json_dump_reads_back():
    matching = [(0, 1, -1, 0, 1, -1)]
    text = write_vertex_table(ROWS, 'json', matching=matching)
    doc = json.loads(text)
    assert doc['num_tetrahedra'] == 2
    assert doc['vertices'][0]['boundary'] == ['0', '-1/2']

    dump = read_vertex_table(text)
    assert dump.n == 2
    assert dump.rows == ROWS
    assert dump.matching == matching


@pytest.mark.cpu
def test_json_dump_from_file(tmp_path):
    path = tmp_path.joinpath('vertices.json')
    path.write_text(write_vertex_table(ROWS[:1], 'json'), encoding='utf-8')
    dump = read_vertex_table(path)
    assert dump.rows == ROWS[:1]
    assert dump.matching is None


@pytest.mark.cpu
def test_malformed_dumps():
    for text in ['{"vertices": 3}', '{"num_tetrahedra": 1, "vertices": [{"id": 1}]}',
                 '{"num_tetrahedra": 1, "vertices": [{"id": 1, "coordinate": [1, 0]}]}',
                 '{"num_tetrahedra": 1, "vertices": [{"id": 1, "coordinate": ["a", 0, 0]}]}',
                 '{"num_tetrahedra": 1, "vertices": [], "matching": [[1, 0]]}', '{"num_tetrahedra": 1,']:
        with pytest.raises(MalformedDocument):
            read_vertex_table(text)
    assert set(EXPORTER_TYPES) == {'table', 'csv', 'json'}


@pytest.mark.cpu
@pytest.mark.golden
def test_reference_table():
    table = load_reference(fixture_path(WHL_TABLE))
    assert len(table.vertices) == 20
    assert len(table.angle_structures) == 8
    assert table.coordinate(13) == (0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2)
    assert sorted(table.classes()["N'1"]) == [1, 3]
    with pytest.raises(MalformedDocument):
        load_reference({'vertices': [{'id': 1}]})


@pytest.mark.cpu
def test_match_reference_numbers_unknown_vertices_last():
    doc = load_fixture(WHL_TABLE)
    table = load_reference({'vertices': doc['vertices'][:2]})
    v1, v2 = tuple(doc['vertices'][0]['coordinate']), tuple(doc['vertices'][1]['coordinate'])
    other = (0,) * 11 + (1,)
    pf = PFComplex(n=4, cells=(), vertices=(other, v2, v1))
    matched = match_reference(pf, table)
    assert matched.pf.vertices == (v1, v2, other)
    assert matched.ids == (1, 2, 3)
    assert matched.missing == ()

    missing = match_reference(PFComplex(n=4, cells=(), vertices=(v2,)), table)
    assert missing.ids == (2,)
    assert missing.missing == (1,)
