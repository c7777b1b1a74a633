# -*- coding: utf-8 -*-
import json
import os

import numpy as np

from slicecraft.cli.main import EXIT_DATA, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main
from slicecraft.texture import YuvFile


class TestMain:

    @staticmethod
    def _read(directory, name: str) -> bytes:
        with open(os.path.join(str(directory), name), 'rb') as f:
            return f.read()

    @staticmethod
    def _two_tone(path: str, width: int, height: int):
        luma = np.zeros((height, width), dtype=np.uint8)
        luma[:, width // 2:] = 200
        YuvFile.write_frames(path, [luma])

    def test_usage_errors(self, tmp_path):
        assert main(['--cmd', 'partition', '--width', '128', '--height', '64', '--ctu', '32']) == EXIT_USAGE
        assert main(['--cmd', 'partition', '--yuv', str(tmp_path / 'none.yuv'),
                     '--width', '128', '--height', '64']) == EXIT_USAGE
        assert main(['--cmd', 'synth']) == EXIT_USAGE
        assert main([]) == EXIT_USAGE

    def test_no_candidate(self, tmp_path):
        yuv = str(tmp_path / 'strip.yuv')
        self._two_tone(yuv, 96, 32)
        code = main(['--cmd', 'partition', '--yuv', yuv, '--width', '96', '--height', '32', '--ctu', '32',
                     '--threads', '2', '--k-area', '1.01'])
        assert code == EXIT_INFEASIBLE

    def test_missing_trace_pair(self, tmp_path):
        assert main(['--cmd', 'synth', '--out', str(tmp_path / 's'), '--width', '128', '--height', '64',
                     '--ctu', '32', '--frames', '3', '--qps', '22']) == EXIT_OK
        assert main(['--cmd', 'simulate', '--trace', str(tmp_path / 's'), '--qps', '22,27',
                     '--threads', '2']) == EXIT_DATA

    def test_partition_two_tone(self, tmp_path, capsys):
        yuv = str(tmp_path / 'tone.yuv')
        self._two_tone(yuv, 128, 64)
        out = tmp_path / 'p'
        code = main(['--cmd', 'partition', '--yuv', yuv, '--width', '128', '--height', '64', '--ctu', '32',
                     '--threads', '2', '--out', str(out)])
        assert code == EXIT_OK
        assert 'sse=0.0' in capsys.readouterr().out

        partition = json.loads(self._read(out, 'partition.json'))
        assert sorted((s['x0'], s['y0'], s['w'], s['h']) for s in partition['slices']) == [(0, 0, 2, 2), (2, 0, 2, 2)]
        search = json.loads(self._read(out, 'search.json'))
        assert search['t_min'] == 4.0

        assert main(['--cmd', 'validate', '--partition', str(out / 'partition.json')]) == EXIT_OK
        assert capsys.readouterr().out.startswith('valid: 2 slices')

        assert main(['--cmd', 'stats', '--yuv', yuv, '--width', '128', '--height', '64', '--ctu', '32',
                     '--out', str(tmp_path / 'stats')]) == EXIT_OK
        assert os.path.isfile(str(tmp_path / 'stats' / 'stats_poc0000.json'))

    def test_bad_partition_file(self, tmp_path):
        path = tmp_path / 'partition.json'
        path.write_text(json.dumps({'frame_w': 64, 'frame_h': 64, 'ctu_size': 32, 'tile_cols': [2],
                                    'tile_rows': [2], 'slices': [{'id': 0, 'x0': 0, 'y0': 0, 'w': 1, 'h': 2}]}))
        assert main(['--cmd', 'validate', '--partition', str(path)]) == EXIT_DATA

    def test_reproducible_outputs(self, tmp_path):
        trace = str(tmp_path / 'trace')
        assert main(['--cmd', 'synth', '--out', trace, '--width', '256', '--height', '128', '--ctu', '32',
                     '--frames', '5', '--qps', '22,27', '--seed', '3']) == EXIT_OK
        for name, workers in (('a', '1'), ('b', '4'), ('c', '1')):
            assert main(['--cmd', 'simulate', '--trace', trace, '--threads', '2,3', '--lambda', '0.1',
                         '--workers', workers, '--out', str(tmp_path / name)]) == EXIT_OK
        for name in ('comparison.txt', 'comparison.json', 'report.json', 'frames.csv'):
            assert self._read(tmp_path / 'a', name) == self._read(tmp_path / 'b', name) == self._read(tmp_path / 'c', name)

        assert main(['--cmd', 'sweep', '--trace', trace, '--threads', '2', '--lambdas', '0,0.5',
                     '--qps', '22', '--out', str(tmp_path / 'sweep')]) == EXIT_OK
        lines = self._read(tmp_path / 'sweep', 'sweep.csv').decode().splitlines()
        assert len(lines) == 3
        assert self._read(tmp_path / 'sweep', 'sweep.svg').startswith(b'<svg')

    def test_single_slice(self, tmp_path):
        yuv = str(tmp_path / 'tone.yuv')
        self._two_tone(yuv, 128, 64)
        out = tmp_path / 'one'
        assert main(['--cmd', 'partition', '--yuv', yuv, '--width', '128', '--height', '64', '--ctu', '32',
                     '--threads', '1', '--out', str(out)]) == EXIT_OK
        partition = json.loads(self._read(out, 'partition.json'))
        assert partition['slices'] == [{'id': 0, 'x0': 0, 'y0': 0, 'w': 4, 'h': 2}]
