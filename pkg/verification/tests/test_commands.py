import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from graphs.services.products import lex_product


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


@pytest.mark.integration
class TestVerifyCommand:
    """Test the verify management command"""

    def test_strong_eccentricity_passes(self):
        """Test verify T1 on the three-vertex corpus"""
        output = run('verify', 'T1', '--exhaustive', '3')

        assert 'T1: strong product eccentricity' in output
        assert 'applicable instances: 36' in output
        assert 'result: PASSED' in output

    def test_connected_domination_counts(self):
        """Test verify T4 reports the single-vertex pairs as skipped"""
        output = run('verify', 'T4', '--exhaustive', '3')

        assert 'applicable instances: 30' in output
        assert 'skipped (hypothesis not met): 6' in output

    def test_several_checks(self):
        """Test one run over several checks, including a vacuous one"""
        output = run('verify', 'T1', 't5', '--exhaustive', '3')

        assert output.count('result: PASSED') == 2
        assert 'vacuous' in output

    def test_empty_random_corpus(self):
        """Test a zero-count random corpus passes with no instances"""
        output = run('verify', 'T3', '--random', '0')

        assert 'applicable instances: 0' in output

    def test_records(self):
        """Test the structured report record"""
        lines = run('verify', 'T1', '--exhaustive', '2', '--format', 'records').splitlines()
        record = json.loads(lines[0])

        assert len(lines) == 1
        assert record['record'] == 'report'
        assert record['check_id'] == 'T1'
        assert record['passed'] is True
        assert record['instances_checked'] == 4

    def test_counterexample_exit_code(self, monkeypatch):
        """Test a failing check writes certificates and exits with 1"""
        monkeypatch.setattr('verification.services.checks.strong_product', lex_product)
        out = StringIO()

        with pytest.raises(CommandError) as excinfo:
            call_command('verify', 'T1', '--random', '1', '--nmin', '4', '--nmax', '4',
                         '--p', '0', '--seed', '1', '--format', 'records', stdout=out)

        assert excinfo.value.returncode == 1
        records = [json.loads(line) for line in out.getvalue().splitlines()]
        assert records[0]['passed'] is False
        assert {r['record'] for r in records[1:]} == {'counterexample'}
        assert records[1]['g'].startswith('graph 4 3\n')

    @pytest.mark.parametrize('args', [
        ('T9', '--exhaustive', '3'),
        ('T1',),
        ('T1', '--exhaustive', '3', '--random', '5'),
        ('T1', '--exhaustive', '9'),
        ('T1', '--random', '5', '--nmin', '6', '--nmax', '4'),
        ('T2', '--exhaustive', '7'),
    ])
    def test_usage_errors(self, args):
        """Test invalid ids and corpus flags exit with 2"""
        with pytest.raises(CommandError) as excinfo:
            run('verify', *args)

        assert excinfo.value.returncode == 2


@pytest.mark.integration
class TestFailureModesCommand:
    """Test the failure_modes management command"""

    def test_radius_one_corpus(self):
        """Test the three-vertex corpus has no team-less graph"""
        output = run('failure_modes', '--exhaustive', '3')

        assert 'graphs without a comfortable team: 0' in output

    def test_five_vertex_corpus(self):
        """Test C5 appears with both blocking mechanisms"""
        output = run('failure_modes', '--exhaustive', '5')

        assert 'graph 5 5 / 0 1 / 0 4 / 1 2 / 2 3 / 3 4' in output
        assert 'less dispersive, not dominating: {0,1} misses [3]' in output
        assert 'dominating, not less dispersive: {0,1,2} blocked by 0 (2 vs 2), 2 (2 vs 2)' in output

    def test_records(self):
        """Test the summary record"""
        lines = run('failure_modes', '--exhaustive', '4', '--format', 'records').splitlines()
        summary = json.loads(lines[0])

        assert summary['record'] == 'failure_modes'
        assert summary['graphs_scanned'] == 44
        assert summary['graphs_without_team'] == 0
